#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uimpact/model.hpp"

namespace uimpact::synth {

// Shape of the planted relationship between per-journal downloads and the
// citation impact factor. Negative/Positive plant opposing or matching rank
// orders with mild jitter; Equal sets IF = downloads/citable exactly so the
// recovered correlation is exactly 1.
enum class PlantedShape { Negative, Positive, Equal };

std::string_view to_string(PlantedShape s);

struct SynthSpec {
  std::uint64_t seed = 42;
  int journal_count = 50;
  int metric_year = 2004;
  PlantedShape plant = PlantedShape::Negative;
  bool distractors = true;  // non-qualifying events the filter must remove
};

// Ground truth for one generated journal.
struct SynthJournal {
  std::string journal_key;
  std::int64_t qualifying_downloads = 0;  // events that survive the filter
  std::int64_t citable_items = 0;
  double if_value = 0.0;
  std::string code;  // synthetic classification code
};

struct SynthResult {
  std::vector<SynthJournal> journals;
  std::vector<UsageEvent> events;  // qualifying + distractors, by timestamp
};

// Deterministic per spec (bit-identical events and journals for the same
// SynthSpec).
SynthResult generate(const SynthSpec& spec);

// Writers for the generated artifacts; all output is byte-stable.
void write_usage_log(std::ostream& out, const SynthResult& r, const SynthSpec& spec);
void write_citation_table(std::ostream& out, const SynthResult& r, const SynthSpec& spec);
void write_manifest(std::ostream& out, const SynthResult& r, const SynthSpec& spec);
void write_journal_codes(std::ostream& out, const SynthResult& r);
void write_code_disciplines(std::ostream& out);

}  // namespace uimpact::synth
