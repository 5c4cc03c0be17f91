// uimpact: usage-impact analytics over scholarly usage-event logs.
//
// Subcommands:
//   uif      parse + filter a usage log, join with citation data, emit the
//            per-journal table of usage and citation impact factors
//   analyze  correlation / regression / ranking reports over a journal table
//   synth    deterministic synthetic log + citation fixtures with planted
//            rank relationships

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uimpact/analysis.hpp"
#include "uimpact/digest.hpp"
#include "uimpact/ingest.hpp"
#include "uimpact/metrics.hpp"
#include "uimpact/model.hpp"
#include "uimpact/report.hpp"
#include "uimpact/stats.hpp"
#include "uimpact/synth.hpp"
#include "uimpact/version.hpp"

namespace fs = std::filesystem;
using namespace uimpact;

namespace {

// Flag/configuration misuse; always exits with code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // uif
  std::string log_path;
  std::string citations_path;
  int year = 0;
  std::vector<int> pub_window;
  std::vector<std::string> request_types;
  std::string dedup = "count-all";
  std::string aliases_path;
  std::string reject_path;

  // analyze
  std::string table_path;
  std::vector<std::string> reports;
  std::vector<std::string> discipline_map;  // exactly 2 paths
  std::string demographics_path;
  std::string ratios_path;
  std::string which = "all";
  std::vector<std::string> select;
  std::optional<double> select_p;
  int top_k = 10;
  std::string rank_by = "uif";

  // synth
  int journals = 50;
  std::string plant = "negative";

  // shared
  std::string format = "tsv";
  std::uint64_t seed = stats::kDefaultSeed;
  std::string out_path;
};

void require_readable(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing required ") + what + " path");
  if (!fs::exists(path)) {
    throw UsageError(std::string(what) + " file not found: " + path);
  }
}

std::ifstream open_input(const std::string& path, const char* what) {
  require_readable(path, what);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(std::string("cannot open ") + what + " file: " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path.string());
  return out;
}

ingest::FilterSpec filter_from_config(const RunConfig& config) {
  ingest::FilterSpec spec = ingest::FilterSpec::for_year(config.year);
  if (!config.pub_window.empty()) {
    spec.publication_window.clear();
    spec.publication_window.insert(config.pub_window.begin(), config.pub_window.end());
  }
  if (!config.request_types.empty()) {
    spec.request_types.clear();
    for (const auto& token : config.request_types) {
      const auto type = request_type_from_token(token);
      if (!type) throw UsageError("unknown request type: " + token);
      spec.request_types.insert(*type);
    }
  }
  if (config.dedup == "count-all") {
    spec.dedup = ingest::DedupPolicy::CountAll;
  } else if (config.dedup == "once-per-user-article-day") {
    spec.dedup = ingest::DedupPolicy::OncePerUserArticleDay;
  } else {
    throw UsageError("unknown dedup policy: " + config.dedup);
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::string joined(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string joined_types(const std::set<RequestType>& types) {
  std::string out;
  for (auto t : types) {
    if (!out.empty()) out += ",";
    out += to_string(t);
  }
  return out;
}

// basename + content digest: traceable to exact bytes without baking
// checkout-specific paths into the outputs
std::string file_stamp(const std::string& path) {
  return fs::path(path).filename().string() + " fnv1a64:" +
         fnv1a64_hex(fnv1a64_file(path));
}

// ---------------------------------------------------------------------------
// uif

void write_table_json(std::ostream& out, std::span<const JournalYearRecord> records,
                      const std::vector<std::pair<std::string, std::string>>& metadata) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  doc["columns"] = {"journal_key", "year", "downloads", "citable_items", "uif", "if"};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    row.push_back(r.journal_key);
    row.push_back(r.metric_year);
    row.push_back(r.downloads);
    row.push_back(r.citable_items);
    if (r.uif_value) row.push_back(*r.uif_value); else row.push_back(nullptr);
    if (r.if_value) row.push_back(*r.if_value); else row.push_back(nullptr);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

int run_uif(const RunConfig& config) {
  if (config.year <= 0) throw UsageError("--year is required");
  if (config.out_path.empty()) throw UsageError("--out is required");
  require_readable(config.log_path, "usage log");
  require_readable(config.citations_path, "citation table");

  ingest::LogSchema schema = ingest::LogSchema::standard();
  if (!config.aliases_path.empty()) {
    auto aliases_in = open_input(config.aliases_path, "request alias table");
    schema.aliases = ingest::load_request_aliases(aliases_in);
  }

  const ingest::FilterSpec spec = filter_from_config(config);

  std::ofstream reject_file;
  std::ostream* reject_sink = &std::cerr;
  if (!config.reject_path.empty()) {
    reject_file = open_output(config.reject_path);
    reject_sink = &reject_file;
  }

  auto log_in = open_input(config.log_path, "usage log");
  ingest::ParsedLog parsed = ingest::parse_usage_log(log_in, schema, reject_sink);

  const std::vector<UsageEvent> filtered = ingest::filter_events(parsed.events, spec);
  parsed.stats.events_after_filter = static_cast<std::int64_t>(filtered.size());

  const auto tally = ingest::tally_downloads(filtered);

  auto citations_in = open_input(config.citations_path, "citation table");
  const ingest::CitationTable citations = ingest::load_citation_table(citations_in);

  ingest::JoinResult join = ingest::join_with_citation(tally, citations, config.year);

  // side list = join misses + journals whose denominator is zero
  std::vector<std::pair<std::string, std::string>> side;
  for (const auto& miss : join.misses) {
    side.emplace_back(miss.journal_key, std::string(to_string(miss.fault)));
  }
  std::vector<JournalYearRecord> records;
  records.reserve(join.records.size());
  for (auto& record : join.records) {
    try {
      record.uif_value = metrics::compute_uif(record.downloads, record.citable_items);
      records.push_back(std::move(record));
    } catch (const metrics::ZeroDenominatorError&) {
      side.emplace_back(record.journal_key, "zero_citable_items");
    }
  }
  std::sort(side.begin(), side.end());

  std::sort(records.begin(), records.end(),
            [](const JournalYearRecord& a, const JournalYearRecord& b) {
              if (*a.uif_value != *b.uif_value) return *a.uif_value > *b.uif_value;
              return a.journal_key < b.journal_key;
            });

  std::vector<std::pair<std::string, std::string>> metadata;
  metadata.emplace_back("tool_version", kVersion);
  metadata.emplace_back("input_log", file_stamp(config.log_path));
  metadata.emplace_back("input_citations", file_stamp(config.citations_path));
  metadata.emplace_back("year", std::to_string(config.year));
  metadata.emplace_back("publication_window", joined(spec.publication_window));
  metadata.emplace_back("request_types", joined_types(spec.request_types));
  metadata.emplace_back("dedup", std::string(ingest::to_string(spec.dedup)));

  {
    auto out = open_output(config.out_path);
    if (config.format == "json") {
      write_table_json(out, records, metadata);
    } else {
      ingest::write_journal_table(out, records, metadata);
    }
  }
  {
    auto out = open_output(config.out_path + ".side.tsv");
    out << "journal_key\treason\n";
    for (const auto& [journal, reason] : side) out << journal << '\t' << reason << '\n';
  }
  {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kVersion;
    doc["inputs"] = {{"log", file_stamp(config.log_path)},
                     {"citations", file_stamp(config.citations_path)}};
    doc["filter"] = {{"year", config.year},
                     {"publication_window", joined(spec.publication_window)},
                     {"request_types", joined_types(spec.request_types)},
                     {"dedup", std::string(ingest::to_string(spec.dedup))}};
    nlohmann::ordered_json breakdown = nlohmann::ordered_json::object();
    for (const auto& [reason, count] : parsed.stats.rejection_breakdown) {
      breakdown[reason] = count;
    }
    doc["funnel"] = {{"lines_read", parsed.stats.lines_read},
                     {"events_parsed", parsed.stats.events_parsed},
                     {"events_rejected", parsed.stats.events_rejected},
                     {"events_after_filter", parsed.stats.events_after_filter},
                     {"rejection_breakdown", std::move(breakdown)}};
    doc["join"] = {{"journals_tallied", static_cast<std::int64_t>(tally.size())},
                   {"journals_joined", static_cast<std::int64_t>(records.size())},
                   {"journals_side_listed", static_cast<std::int64_t>(side.size())}};
    auto out = open_output(config.out_path + ".stats.json");
    out << doc.dump(2) << '\n';
  }

  std::cerr << "uimpact uif: " << parsed.stats.lines_read << " data lines, "
            << parsed.stats.events_parsed << " parsed, " << parsed.stats.events_rejected
            << " rejected\n";
  std::cerr << "uimpact uif: " << parsed.stats.events_after_filter
            << " events after filter (year=" << config.year << ", window="
            << joined(spec.publication_window) << ", types=" << joined_types(spec.request_types)
            << ", dedup=" << ingest::to_string(spec.dedup) << ")\n";
  std::cerr << "uimpact uif: " << tally.size() << " journals tallied, " << records.size()
            << " joined, " << side.size() << " side-listed\n";
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeContext {
  std::vector<JournalYearRecord> records;
  std::optional<AnalysisReport> disciplines;  // computed at most once
};

AnalysisReport& discipline_report(AnalyzeContext& ctx, const RunConfig& config,
                                  const stats::SpearmanOptions& options) {
  if (!ctx.disciplines) {
    if (ctx.records.empty()) throw UsageError("journal table is empty");
    if (config.discipline_map.size() != 2) {
      throw UsageError("--discipline-map needs two files: codes.tsv journal_codes.tsv");
    }
    auto codes_in = open_input(config.discipline_map[0], "discipline code table");
    auto journals_in = open_input(config.discipline_map[1], "journal code table");
    const DisciplineMap dmap = ingest::load_discipline_map(codes_in, journals_in);
    ctx.disciplines = analysis::per_discipline_correlations(ctx.records, dmap, options);
    ctx.disciplines->add_metadata("input_codes", file_stamp(config.discipline_map[0]));
    ctx.disciplines->add_metadata("input_journal_codes",
                                  file_stamp(config.discipline_map[1]));
  }
  return *ctx.disciplines;
}

std::vector<analysis::RatioSet> ratios_for(const RunConfig& config) {
  if (!config.ratios_path.empty()) {
    auto in = open_input(config.ratios_path, "ratio table");
    return analysis::ratios_from_table(ingest::load_ratio_table(in));
  }
  if (!config.demographics_path.empty()) {
    auto in = open_input(config.demographics_path, "demographics table");
    std::vector<analysis::RatioSet> out;
    for (const auto& record : ingest::load_demographics(in)) {
      out.push_back(analysis::demographic_ratios(record));
    }
    return out;
  }
  throw UsageError("regression needs --ratios or --demographics");
}

std::vector<std::string> selection_for(const RunConfig& config,
                                       const AnalysisReport& correlations) {
  if (!config.select.empty()) return config.select;
  if (config.select_p) {
    // take correlation rows (already p-ascending) under the threshold
    std::vector<std::string> picked;
    const auto p_idx = correlations.column_index("p_value");
    const auto d_idx = correlations.column_index("discipline");
    for (const auto& row : correlations.rows) {
      if (const auto* p = std::get_if<double>(&row[*p_idx]); p && *p <= *config.select_p) {
        picked.push_back(std::get<std::string>(row[*d_idx]));
      }
    }
    if (picked.empty()) {
      throw analysis::MissingDisciplineError("no discipline passes --select-p threshold");
    }
    return picked;
  }
  throw UsageError("regression needs an explicit --select list or --select-p threshold");
}

void write_report_file(const AnalysisReport& report, const fs::path& path,
                       const std::string& format) {
  auto out = open_output(path);
  if (format == "json") {
    write_json(out, report);
  } else {
    write_tsv(out, report);
  }
  std::cerr << "uimpact analyze: wrote " << path.string() << "\n";
}

int run_analyze(const RunConfig& config) {
  if (config.reports.empty()) throw UsageError("--report is required");
  require_readable(config.table_path, "journal table");

  AnalyzeContext ctx;
  {
    auto in = open_input(config.table_path, "journal table");
    ctx.records = ingest::load_journal_table(in);
  }
  const std::string table_stamp = file_stamp(config.table_path);
  const stats::SpearmanOptions stat_options{config.seed, stats::kMonteCarloDraws};
  const std::string ext = (config.format == "json") ? ".json" : ".tsv";
  const fs::path out_dir = config.out_path.empty() ? fs::path(".") : fs::path(config.out_path);

  const std::set<std::string> requested(config.reports.begin(), config.reports.end());
  static const std::vector<std::string> kKnown = {"overall",      "disciplines",
                                                  "regression",   "longitudinal",
                                                  "topk",         "plotdata"};
  for (const auto& name : requested) {
    if (std::find(kKnown.begin(), kKnown.end(), name) == kKnown.end()) {
      throw UsageError("unknown report: " + name);
    }
  }

  // fixed emission order keeps multi-report runs byte-stable
  if (requested.contains("overall")) {
    AnalysisReport report = analysis::overall_report(ctx.records, stat_options);
    report.add_metadata("tool_version", kVersion);
    report.add_metadata("input_table", table_stamp);
    write_report_file(report, out_dir / ("overall" + ext), config.format);
  }
  if (requested.contains("disciplines")) {
    AnalysisReport report = discipline_report(ctx, config, stat_options);
    report.add_metadata("tool_version", kVersion);
    report.add_metadata("input_table", table_stamp);
    write_report_file(report, out_dir / ("disciplines" + ext), config.format);
  }
  if (requested.contains("regression")) {
    const AnalysisReport& correlations = discipline_report(ctx, config, stat_options);
    const auto ratios = ratios_for(config);
    const auto selected = selection_for(config, correlations);
    analysis::RatioKind which;
    if (config.which == "all") which = analysis::RatioKind::All;
    else if (config.which == "student") which = analysis::RatioKind::Student;
    else if (config.which == "faculty") which = analysis::RatioKind::Faculty;
    else throw UsageError("unknown --which value: " + config.which);
    AnalysisReport report = analysis::regression_report(correlations, ratios, selected, which);
    report.add_metadata("tool_version", kVersion);
    report.add_metadata("input_table", table_stamp);
    if (!config.ratios_path.empty()) {
      report.add_metadata("input_ratios", file_stamp(config.ratios_path));
    } else {
      report.add_metadata("input_demographics", file_stamp(config.demographics_path));
    }
    write_report_file(report, out_dir / ("regression" + ext), config.format);
  }
  if (requested.contains("longitudinal")) {
    require_readable(config.citations_path, "citation table");
    auto in = open_input(config.citations_path, "citation table");
    const ingest::CitationTable series = ingest::load_citation_table(in);
    std::map<std::string, double> uif_by_journal;
    for (const auto& r : ctx.records) {
      if (!r.uif_value) throw UsageError("journal table row lacks a uif value");
      uif_by_journal[r.journal_key] = *r.uif_value;
    }
    AnalysisReport report =
        analysis::longitudinal_correlation(uif_by_journal, series, stat_options);
    report.add_metadata("tool_version", kVersion);
    report.add_metadata("input_table", table_stamp);
    report.add_metadata("input_citations", file_stamp(config.citations_path));
    write_report_file(report, out_dir / ("longitudinal" + ext), config.format);
  }
  if (requested.contains("topk")) {
    if (config.rank_by != "uif" && config.rank_by != "if") {
      throw UsageError("unknown --by value: " + config.rank_by);
    }
    const metrics::RankKey key = (config.rank_by == "if") ? metrics::RankKey::ByIF
                                                          : metrics::RankKey::ByUIF;
    AnalysisReport report = analysis::top_k_report(ctx.records, config.top_k, key);
    report.add_metadata("tool_version", kVersion);
    report.add_metadata("input_table", table_stamp);
    write_report_file(report, out_dir / ("topk" + ext), config.format);
  }
  if (requested.contains("plotdata")) {
    std::vector<std::pair<std::string, std::string>> metadata;
    metadata.emplace_back("tool_version", kVersion);
    metadata.emplace_back("input_table", table_stamp);
    const fs::path path = out_dir / "plotdata.tsv";
    auto out = open_output(path);
    const std::int64_t excluded = analysis::write_plot_data(out, ctx.records, metadata);
    std::cerr << "uimpact analyze: wrote " << path.string() << " (" << excluded
              << " zero-valued journals excluded)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// synth

int run_synth(const RunConfig& config) {
  if (config.out_path.empty()) throw UsageError("--out is required");
  if (config.journals < 1) throw UsageError("--journals must be >= 1");

  synth::SynthSpec spec;
  spec.seed = config.seed;
  spec.journal_count = config.journals;
  spec.metric_year = config.year > 0 ? config.year : 2004;
  if (config.plant == "negative") spec.plant = synth::PlantedShape::Negative;
  else if (config.plant == "positive") spec.plant = synth::PlantedShape::Positive;
  else if (config.plant == "equal") spec.plant = synth::PlantedShape::Equal;
  else throw UsageError("unknown --plant value: " + config.plant);

  const synth::SynthResult result = synth::generate(spec);
  const fs::path dir(config.out_path);
  fs::create_directories(dir);

  { auto out = open_output(dir / "usage_log.tsv"); synth::write_usage_log(out, result, spec); }
  { auto out = open_output(dir / "citations.tsv"); synth::write_citation_table(out, result, spec); }
  { auto out = open_output(dir / "manifest.tsv"); synth::write_manifest(out, result, spec); }
  { auto out = open_output(dir / "journal_codes.tsv"); synth::write_journal_codes(out, result); }
  { auto out = open_output(dir / "code_disciplines.tsv"); synth::write_code_disciplines(out); }

  std::cerr << "uimpact synth: " << result.journals.size() << " journals, "
            << result.events.size() << " events -> " << dir.string() << "\n";
  return 0;
}

int dispatch(const CLI::App& app, const RunConfig& config) {
  if (app.got_subcommand("uif")) return run_uif(config);
  if (app.got_subcommand("analyze")) return run_analyze(config);
  if (app.got_subcommand("synth")) return run_synth(config);
  throw UsageError("no subcommand given (try --help)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"usage-impact analytics: usage logs -> impact factor tables and reports"};
  app.require_subcommand(0, 1);
  RunConfig config;

  CLI::App* uif = app.add_subcommand("uif", "build the per-journal UIF/IF table from a log");
  uif->add_option("--log", config.log_path, "usage log (TSV)");
  uif->add_option("--citations", config.citations_path, "citation table (TSV)");
  uif->add_option("--year", config.year, "metric year");
  uif->add_option("--pub-window", config.pub_window, "publication years to accept")
      ->delimiter(',');
  uif->add_option("--request-types", config.request_types, "request types to accept")
      ->delimiter(',');
  uif->add_option("--dedup", config.dedup,
                  "count-all | once-per-user-article-day (default count-all)");
  uif->add_option("--request-aliases", config.aliases_path,
                  "request type alias table (TSV)");
  uif->add_option("--reject-file", config.reject_path,
                  "write rejected log lines here instead of stderr");
  uif->add_option("--format", config.format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));
  uif->add_option("--out", config.out_path, "output table path");

  CLI::App* analyze = app.add_subcommand("analyze", "reports over a journal table");
  analyze->add_option("--table", config.table_path, "journal table from 'uimpact uif'");
  analyze->add_option("--report", config.reports,
                      "overall | disciplines | regression | longitudinal | topk | plotdata")
      ->delimiter(',');
  analyze->add_option("--citations", config.citations_path,
                      "citation table (longitudinal reports)");
  analyze->add_option("--discipline-map", config.discipline_map,
                      "codes.tsv journal_codes.tsv")
      ->expected(2);
  analyze->add_option("--demographics", config.demographics_path,
                      "per-discipline enrollment/FTEF table");
  analyze->add_option("--ratios", config.ratios_path,
                      "literal ratio table (overrides --demographics)");
  analyze->add_option("--which", config.which, "all | student | faculty")
      ->check(CLI::IsMember({"all", "student", "faculty"}));
  analyze->add_option("--select", config.select,
                      "disciplines for the regression (names or unique prefixes)")
      ->delimiter(',');
  analyze->add_option("--select-p", config.select_p,
                      "select disciplines with p_value <= threshold");
  analyze->add_option("--k", config.top_k, "rows in the topk report (default 10)");
  analyze->add_option("--by", config.rank_by, "uif | if (default uif)")
      ->check(CLI::IsMember({"uif", "if"}));
  analyze->add_option("--seed", config.seed, "seed for Monte-Carlo p-values");
  analyze->add_option("--format", config.format, "tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));
  analyze->add_option("--out", config.out_path, "output directory (default .)");

  CLI::App* synth_cmd = app.add_subcommand("synth", "generate synthetic fixtures");
  synth_cmd->add_option("--seed", config.seed, "generator seed (default 42)");
  synth_cmd->add_option("--journals", config.journals, "journal count (default 50)");
  synth_cmd->add_option("--year", config.year, "metric year (default 2004)");
  synth_cmd->add_option("--plant", config.plant, "negative | positive | equal")
      ->check(CLI::IsMember({"negative", "positive", "equal"}));
  synth_cmd->add_option("--out", config.out_path, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(app, config);
  } catch (const UsageError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const ingest::UnreadableStreamError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const ingest::SchemaMismatchError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const ingest::DuplicateKeyError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const ingest::BadNumericError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyKeyError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const analysis::EmptyMapError& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const analysis::MissingDisciplineError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const stats::DegenerateVarianceError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const stats::DegenerateXError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const stats::LengthMismatchError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const stats::NonFiniteValueError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const metrics::MissingKeyValueError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const metrics::ZeroDenominatorError& e) {
    std::cerr << "uimpact: degenerate analysis: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "uimpact: error: " << e.what() << "\n";
    return 2;
  }
}
