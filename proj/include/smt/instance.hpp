#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smt/errors.hpp"
#include "smt/rational.hpp"

namespace smt {

enum class Side { man, woman };

// 1-based participant id. Ordering puts men before women, then by index.
struct PersonId {
  Side side = Side::man;
  int index = 0;

  friend auto operator<=>(const PersonId&, const PersonId&) = default;
};

inline PersonId man(int index) { return {Side::man, index}; }
inline PersonId woman(int index) { return {Side::woman, index}; }

std::string to_string(PersonId person);  // "m3" / "w2"

// A potential partner; nullopt means "stay single", which every person ranks
// strictly below all partners they list.
using Partner = std::optional<PersonId>;

// An acceptable man-woman pair, stored by 1-based indices. Its ordering
// (man first, then woman) is the canonical coordinate order used everywhere:
// incidence vectors, constraint columns, graph vertex ids.
struct Pair {
  int man = 0;
  int woman = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

std::string pair_label(Pair p);  // "m1,w2" (graph vertex label)
std::string pair_token(Pair p);  // "m1-w2" (matching text form)

// A weak preference order: tiers are listed best-first and members of one
// tier are mutually indifferent. Tiers are sets, so equality ignores the
// listing order inside a tier; the canonical form keeps each tier sorted.
struct PreferenceOrder {
  std::vector<std::vector<PersonId>> tiers;

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b);
};

struct Instance {
  int num_men = 0;
  int num_women = 0;
  std::vector<PreferenceOrder> men_prefs;    // men_prefs[i] belongs to man i+1
  std::vector<PreferenceOrder> women_prefs;  // women_prefs[i] to woman i+1

  // Bounds-checked access; throws PreconditionError for an unknown person.
  const PreferenceOrder& prefs(PersonId person) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// First violated invariant, or nullopt when the instance is valid. Checked
// rules: list sizes match the declared counts, every listed id names an
// existing person of the opposite side, nobody is listed twice by the same
// person, tiers are non-empty, and acceptability is mutual.
struct Violation {
  std::string rule;   // e.g. "mutual-consistency"
  std::string where;  // offending person or pair, e.g. "(m1,w1)"
};

std::optional<Violation> validate(const Instance& instance);

enum class Comparison {
  a_strictly_better,
  b_strictly_better,
  indifferent,
  incomparable,  // unreachable for listed partners; kept for defensiveness
};

// How judge ranks a against b. Both partners must be listed by judge (or be
// the single option); otherwise PreconditionError.
Comparison compare(const Instance& instance, PersonId judge, const Partner& a,
                   const Partner& b);

// Mutually acceptable pairs in canonical order. Validates the instance.
std::vector<Pair> acceptable_pairs(const Instance& instance);

// Family showing the skeleton-diameter bound is sharp: t men and 2t women,
// man i indifferent between woman i and woman i+t, each of whom lists only
// him. 3t people, 2t acceptable pairs, 2^t stable matchings, diameter t.
Instance tight_family(int t);

// Deterministic pseudo-random instance. Every id list is a uniform random
// strict list of up to max_list_len partners; lists are then intersected so
// acceptability is mutual; finally each boundary between neighbours in a
// surviving list collapses into a tie with the given probability (exact
// rational in [0,1]). Same arguments always give the same instance.
Instance random_instance(int num_men, int num_women, int max_list_len,
                         const Rational& tie_probability, std::uint64_t seed);

// Text form, e.g.:
//   men 3
//   women 4
//   m1: w2 w4
//   m2: w1 (w3 w4)
//   w1: m2 m3
// Blank lines and '#' comments are ignored on input; people with empty lists
// are omitted on output. serialize_instance emits the canonical form (men
// ascending, then women ascending, tiers sorted) and requires a valid
// instance; parse_instance(serialize_instance(i)) == i for every valid i.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// A validated instance plus the lookup tables every other module needs:
// the canonical pair order, pair -> coordinate index, and tier ranks.
// Construction throws PreconditionError when the instance is invalid.
class InstanceIndex {
 public:
  explicit InstanceIndex(Instance instance);

  const Instance& instance() const { return instance_; }
  int num_men() const { return instance_.num_men; }
  int num_women() const { return instance_.num_women; }

  const std::vector<Pair>& pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  // Coordinate index of p in canonical order, or -1 when p is not
  // (mutually) acceptable.
  int index_of(Pair p) const;
  bool acceptable(Pair p) const { return index_of(p) >= 0; }

  // Tier rank of partner in judge's list: 0 is best, -1 means unlisted.
  int tier_rank(PersonId judge, PersonId partner) const;

  // Like tier_rank but maps the single option below every listed partner.
  // The partner, when present, must be listed by judge.
  int rank_or_single(PersonId judge, const Partner& partner) const;

  // a >=_judge b, resp. a >_judge b, for listed-or-single partners.
  bool weakly_prefers(PersonId judge, const Partner& a,
                      const Partner& b) const;
  bool strictly_prefers(PersonId judge, const Partner& a,
                        const Partner& b) const;

  // Coordinate indices of the acceptable pairs involving person, ascending.
  const std::vector<int>& pairs_of(PersonId person) const;

 private:
  Instance instance_;
  std::vector<Pair> pairs_;
  std::vector<int> index_table_;  // (man-1)*num_women + (woman-1) -> index
  std::vector<std::vector<int>> man_rank_;    // [m-1][w-1] tier or -1
  std::vector<std::vector<int>> woman_rank_;  // [w-1][m-1] tier or -1
  std::vector<std::vector<int>> man_pairs_;
  std::vector<std::vector<int>> woman_pairs_;
};

}  // namespace smt
