#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "uimpact/model.hpp"

namespace uimpact::metrics {

class ZeroDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MissingKeyValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// downloads / citable_items at double precision.
// Throws ZeroDenominatorError when citable_items == 0.
double compute_uif(std::int64_t downloads, std::int64_t citable_items);

// citations / citable_items, same contract. The local-sample variant of the
// impact factor is this applied to locally recorded citation counts.
double compute_if(std::int64_t citations, std::int64_t citable_items);

enum class RankKey { ByUIF, ByIF };

struct RankedJournal {
  int rank = 0;  // competition ranking: ties share a rank, next rank skips
  JournalYearRecord record;
};

// Descending by the selected key value, journal_key ascending as the
// tiebreak so output order is deterministic. Output is a permutation of the
// input. Throws MissingKeyValueError when any record lacks the key value.
std::vector<RankedJournal> rank_journals(std::span<const JournalYearRecord> records,
                                         RankKey key);

}  // namespace uimpact::metrics
