#include <benchmark/benchmark.h>

#include <sstream>

#include "uimpact/ingest.hpp"
#include "uimpact/synth.hpp"

using namespace uimpact;

namespace {

std::string synth_log(int journals) {
  synth::SynthSpec spec;
  spec.seed = 42;
  spec.journal_count = journals;
  const auto result = synth::generate(spec);
  std::ostringstream out;
  synth::write_usage_log(out, result, spec);
  return out.str();
}

}  // namespace

static void BM_ParseUsageLog(benchmark::State& state) {
  const std::string text = synth_log(static_cast<int>(state.range(0)));
  std::int64_t events = 0;
  for (auto _ : state) {
    std::istringstream in(text);
    auto parsed = ingest::parse_usage_log(in, ingest::LogSchema::standard());
    events = parsed.stats.events_parsed;
    benchmark::DoNotOptimize(parsed);
  }
  state.counters["events"] = static_cast<double>(events);
}
BENCHMARK(BM_ParseUsageLog)->Arg(20)->Arg(100);

static void BM_FilterAndTally(benchmark::State& state) {
  const std::string text = synth_log(static_cast<int>(state.range(0)));
  std::istringstream in(text);
  const auto parsed = ingest::parse_usage_log(in, ingest::LogSchema::standard());
  const auto spec = ingest::FilterSpec::for_year(2004);
  for (auto _ : state) {
    auto filtered = ingest::filter_events(parsed.events, spec);
    auto tally = ingest::tally_downloads(filtered);
    benchmark::DoNotOptimize(tally);
  }
}
BENCHMARK(BM_FilterAndTally)->Arg(20)->Arg(100);
