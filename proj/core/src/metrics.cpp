#include "uimpact/metrics.hpp"

#include <algorithm>

namespace uimpact::metrics {

namespace {

double ratio_or_throw(std::int64_t numerator, std::int64_t denominator,
                      const char* what) {
  if (numerator < 0 || denominator < 0) {
    throw std::invalid_argument(std::string(what) + ": negative count");
  }
  if (denominator == 0) {
    throw ZeroDenominatorError(std::string(what) + ": citable_items is zero");
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double key_value(const JournalYearRecord& r, RankKey key) {
  const std::optional<double>& v = (key == RankKey::ByUIF) ? r.uif_value : r.if_value;
  if (!v) {
    throw MissingKeyValueError("rank_journals: record '" + r.journal_key +
                               "' lacks the ranking key value");
  }
  return *v;
}

}  // namespace

double compute_uif(std::int64_t downloads, std::int64_t citable_items) {
  return ratio_or_throw(downloads, citable_items, "compute_uif");
}

double compute_if(std::int64_t citations, std::int64_t citable_items) {
  return ratio_or_throw(citations, citable_items, "compute_if");
}

std::vector<RankedJournal> rank_journals(std::span<const JournalYearRecord> records,
                                         RankKey key) {
  std::vector<const JournalYearRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) {
    key_value(r, key);  // fail fast on missing values
    order.push_back(&r);
  }
  std::sort(order.begin(), order.end(),
            [key](const JournalYearRecord* a, const JournalYearRecord* b) {
              const double va = key_value(*a, key);
              const double vb = key_value(*b, key);
              if (va != vb) return va > vb;
              return a->journal_key < b->journal_key;
            });

  std::vector<RankedJournal> ranked;
  ranked.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    int rank = static_cast<int>(i) + 1;
    if (i > 0 && key_value(*order[i], key) == key_value(*order[i - 1], key)) {
      rank = ranked.back().rank;  // competition ranking: ties share, next skips
    }
    ranked.push_back(RankedJournal{rank, *order[i]});
  }
  return ranked;
}

}  // namespace uimpact::metrics
