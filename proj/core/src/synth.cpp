#include "uimpact/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <tuple>

#include "uimpact/report.hpp"

namespace uimpact::synth {

namespace {

std::string journal_key_for(int index) {
  char buf[32];
  if (index % 5 == 4) {
    // sprinkle in ISSN-shaped keys so both identity forms get exercised
    std::snprintf(buf, sizeof buf, "%04d-%04d", 1000 + index, 5000 + index);
  } else {
    std::snprintf(buf, sizeof buf, "SYNTH J %03d", index);
  }
  return buf;
}

std::string article_key_for(int journal_index, int article_index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "a%04d.%03d", journal_index, article_index);
  return buf;
}

const char* code_for(int index) {
  static constexpr const char* kCodes[] = {"CA", "CB", "CC", "CD", "CE", "CF"};
  return kCodes[index % 6];
}

}  // namespace

std::string_view to_string(PlantedShape s) {
  switch (s) {
    case PlantedShape::Negative: return "negative";
    case PlantedShape::Positive: return "positive";
    case PlantedShape::Equal: return "equal";
  }
  return "negative";
}

SynthResult generate(const SynthSpec& spec) {
  SynthResult result;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> citable_dist(4, 40);
  std::uniform_int_distribution<int> jitter_dist(0, 2);
  std::uniform_real_distribution<double> if_jitter(0.0, 0.02);
  std::uniform_int_distribution<int> user_dist(0, 199);

  const int year = spec.metric_year;
  const std::int64_t year_start = days_from_civil(year, 1, 1) * 86400;
  const std::int64_t year_seconds =
      (days_from_civil(year + 1, 1, 1) - days_from_civil(year, 1, 1)) * 86400;
  std::uniform_int_distribution<std::int64_t> second_dist(0, year_seconds - 1);

  for (int i = 0; i < spec.journal_count; ++i) {
    SynthJournal journal;
    journal.journal_key = journal_key_for(i);
    journal.code = code_for(i);
    journal.citable_items = citable_dist(rng);

    switch (spec.plant) {
      case PlantedShape::Negative:
        journal.qualifying_downloads = 5 + 3 * i + jitter_dist(rng);
        journal.if_value = 0.1 + 0.05 * (spec.journal_count - 1 - i) + if_jitter(rng);
        break;
      case PlantedShape::Positive:
        journal.qualifying_downloads = 5 + 3 * i + jitter_dist(rng);
        journal.if_value = 0.1 + 0.05 * i + if_jitter(rng);
        break;
      case PlantedShape::Equal:
        journal.qualifying_downloads = 5 + std::uniform_int_distribution<int>(0, 200)(rng);
        journal.if_value = static_cast<double>(journal.qualifying_downloads) /
                           static_cast<double>(journal.citable_items);
        break;
    }

    std::uniform_int_distribution<int> article_dist(
        0, static_cast<int>(journal.citable_items) - 1);
    const auto make_event = [&](RequestType type, int pub_year,
                                std::int64_t ts_offset) {
      UsageEvent e;
      e.timestamp = UtcTime{year_start + ts_offset};
      char user[16];
      std::snprintf(user, sizeof user, "u%03d", user_dist(rng));
      e.user_key = user;
      e.journal_key = journal.journal_key;
      const int article = article_dist(rng);
      e.article_key = article_key_for(i, article);
      e.request_type = type;
      // articles alternate between the two window years
      e.publication_year = pub_year != 0 ? pub_year : (article % 2 ? year - 1 : year - 2);
      result.events.push_back(std::move(e));
    };

    for (std::int64_t k = 0; k < journal.qualifying_downloads; ++k) {
      make_event(RequestType::FullText, 0, second_dist(rng));
    }
    if (spec.distractors) {
      // non-qualifying traffic the filter must remove: wrong request type,
      // wrong download year, stale publication year
      const std::int64_t extras = journal.qualifying_downloads / 6 + 1;
      for (std::int64_t k = 0; k < extras; ++k) {
        switch (k % 3) {
          case 0:
            make_event(RequestType::Abstract, 0, second_dist(rng));
            break;
          case 1:
            make_event(RequestType::FullText, 0, year_seconds + second_dist(rng) % 86400);
            break;
          case 2:
            make_event(RequestType::FullText, year - 3, second_dist(rng));
            break;
        }
      }
    }
    result.journals.push_back(std::move(journal));
  }

  std::sort(result.events.begin(), result.events.end(),
            [](const UsageEvent& a, const UsageEvent& b) {
              return std::tie(a.timestamp.seconds, a.journal_key, a.article_key) <
                     std::tie(b.timestamp.seconds, b.journal_key, b.article_key);
            });
  return result;
}

void write_usage_log(std::ostream& out, const SynthResult& r, const SynthSpec& spec) {
  out << "# synthetic usage log: seed=" << spec.seed << " journals=" << spec.journal_count
      << " year=" << spec.metric_year << " plant=" << to_string(spec.plant) << "\n";
  out << "timestamp\tuser_key\tjournal_key\tarticle_key\trequest_type\tpublication_year\n";
  for (const UsageEvent& e : r.events) {
    out << format_iso8601_utc(e.timestamp) << '\t' << e.user_key << '\t' << e.journal_key
        << '\t' << e.article_key << '\t' << to_string(e.request_type) << '\t'
        << e.publication_year << '\n';
  }
}

void write_citation_table(std::ostream& out, const SynthResult& r, const SynthSpec& spec) {
  out << "journal_key\tyear\tif_value\tcitable_items\n";
  for (const SynthJournal& j : r.journals) {
    out << j.journal_key << '\t' << spec.metric_year << '\t' << format_double(j.if_value)
        << '\t' << j.citable_items << '\n';
  }
}

void write_manifest(std::ostream& out, const SynthResult& r, const SynthSpec& spec) {
  out << "# ground truth for seed=" << spec.seed << " plant=" << to_string(spec.plant)
      << "\n";
  out << "journal_key\tqualifying_downloads\tcitable_items\tif_value\texpected_uif\n";
  for (const SynthJournal& j : r.journals) {
    out << j.journal_key << '\t' << j.qualifying_downloads << '\t' << j.citable_items
        << '\t' << format_double(j.if_value) << '\t'
        << format_double(static_cast<double>(j.qualifying_downloads) /
                         static_cast<double>(j.citable_items))
        << '\n';
  }
}

void write_journal_codes(std::ostream& out, const SynthResult& r) {
  out << "journal_key\tcode\n";
  for (const SynthJournal& j : r.journals) {
    out << j.journal_key << '\t' << j.code << '\n';
  }
}

void write_code_disciplines(std::ostream& out) {
  out << "code\tdiscipline\n"
         "CA\tDISC-A\n"
         "CB\tDISC-A\n"
         "CC\tDISC-B\n"
         "CD\tDISC-B\n"
         "CE\tDISC-C\n"
         "CF\tDISC-C\n";
}

}  // namespace uimpact::synth
