#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smt/instance.hpp"

namespace smt {

// A set of disjoint acceptable pairs, kept sorted by man index (each man
// appears at most once, so that order is unique).
struct Matching {
  std::vector<Pair> pairs;

  bool empty() const { return pairs.empty(); }
  int size() const { return static_cast<int>(pairs.size()); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Sorts the pairs into canonical order. Disjointness/acceptability are
// checked against an instance by validate_matching, not here.
Matching make_matching(std::vector<Pair> pairs);

// Text form: comma-separated pair tokens sorted by man index, e.g.
// "m1-w2,m2-w1". The empty matching is the empty string.
std::string format_matching(const Matching& matching);
Matching parse_matching(std::string_view text);

// Throws PreconditionError unless every pair is acceptable and no person
// appears twice.
void validate_matching(const InstanceIndex& index, const Matching& matching);

// Partner lookup with nullopt for singles. Validates the matching.
class PartnerMap {
 public:
  PartnerMap(const InstanceIndex& index, const Matching& matching);

  Partner of(PersonId person) const;

 private:
  std::vector<int> wife_of_;     // [m] = w or 0
  std::vector<int> husband_of_;  // [w] = m or 0
};

// Pairs (m,w) acceptable to each other where m strictly prefers w to his
// assignment and w strictly prefers m to hers, in canonical order. The
// matching must be valid for the instance. Empty result == weakly stable.
std::vector<Pair> blocking_pairs(const InstanceIndex& index,
                                 const Matching& matching);
bool is_stable(const InstanceIndex& index, const Matching& matching);

// One weakly stable matching: break all ties with a seeded shuffle, then run
// man-proposing deferred acceptance on the resulting strict lists. The result
// is weakly stable for the original tied instance. Deterministic in seed.
Matching find_stable(const InstanceIndex& index, std::uint64_t seed);

inline constexpr int kDefaultEnumerationCap = 24;

// Every weakly stable matching, in canonical order: ascending lexicographic
// order of incidence vectors. Backtracks over include/exclude decisions per
// acceptable pair, pruning a branch as soon as some excluded pair blocks
// every completion; each emitted leaf is re-checked with the full stability
// test, so pruning is an optimization only. Throws CapExceededError when the
// instance has more acceptable pairs than cap.
std::vector<Matching> enumerate_stable(const InstanceIndex& index,
                                       int cap = kDefaultEnumerationCap);

// 0/1 vector over the canonical pair order.
std::vector<int> incidence(const InstanceIndex& index,
                           const Matching& matching);

}  // namespace smt
