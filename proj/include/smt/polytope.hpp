#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smt/instance.hpp"
#include "smt/linalg.hpp"
#include "smt/matching.hpp"

#include <json.hpp>

namespace smt {

enum class Sense { geq, leq };

struct LinearConstraint {
  RationalVector coeffs;  // one per acceptable pair, canonical order
  Rational bound;
  Sense sense = Sense::geq;
};

struct RowTag {
  enum class Kind { nonneg, man_cap, woman_cap, stability } kind;
  Pair pair;       // for nonneg / stability rows
  int person = 0;  // for man_cap / woman_cap rows

  std::string label() const;  // "nonneg(m1,w2)", "man-cap(m3)", ...
};

// The linear relaxation of the stable matching polytope, rows in a fixed
// order: one nonnegativity row per pair, one capacity row per man, one per
// woman, then one stability row per pair. The stability row for (m,w) sums
// x over (m,w) itself, the pairs (m',w) with m' weakly better than m for w,
// and the pairs (m,w') with w' weakly better than w for m, and requires the
// total to be at least 1. Integral solutions = weakly stable matchings.
struct ConstraintSystem {
  std::vector<Pair> pairs;
  std::vector<LinearConstraint> rows;
  std::vector<RowTag> tags;

  int row_count() const { return static_cast<int>(rows.size()); }
};

ConstraintSystem build_relaxation(const InstanceIndex& index);

Rational row_value(const LinearConstraint& row, const RationalVector& x);
bool satisfies(const LinearConstraint& row, const RationalVector& x);

// Indices of the rows satisfied with equality at x.
std::vector<int> tight_rows(const ConstraintSystem& system,
                            const RationalVector& x);

RationalVector to_rational(const std::vector<int>& incidence_vector);

// Rank oracle: the rank (over the rationals) of the coefficient vectors of
// the rows tight at both incidence vectors. Both matchings must be stable
// and distinct. The matchings are adjacent polytope vertices exactly when
// this equals pair_count() - 1.
int tight_rank(const InstanceIndex& index, const Matching& first,
               const Matching& second);

// Constructive certificates that the common tight rows span a space of
// dimension >= pair_count() - 1: for each generator vector, an exact
// combination of common-tight rows producing it. Kinds:
//   unit       e_v for a pair v in neither matching (its nonneg row);
//   man_pair   e_u + e_v for a man matched differently in the two matchings
//              (his capacity row minus the nonneg rows of his other pairs);
//   woman_pair same for a woman;
//   cross_pair e_v plus selected unit vectors, for a vertex v of the
//              between-subgraph outside both matchings (v's stability row
//              minus nonneg rows of v and of all but one of its weakly
//              better alternatives).
// Every combination is re-multiplied and checked exactly; a mismatch throws
// InternalError (it would falsify the structure theory this relies on).
enum class CertKind { unit, man_pair, woman_pair, cross_pair };

struct CertifiedVector {
  CertKind kind;
  RationalVector vec;
  // (row index into ConstraintSystem::rows, coefficient); every referenced
  // row is tight at both incidence vectors.
  std::vector<std::pair<int, Rational>> combination;
};

std::vector<CertifiedVector> span_certificates(const InstanceIndex& index,
                                               const Matching& first,
                                               const Matching& second);

// LP oracle: can (x_first + x_second)/2 be written as a convex combination
// of the *other* stable matchings? It cannot exactly when the two matchings
// are adjacent polytope vertices. Enumerates all stable matchings (cap as in
// enumerate_stable) and solves the membership LP exactly.
struct MidpointResult {
  bool feasible = false;
  std::vector<Matching> candidates;  // canonical order, minus the two inputs
  // (index into candidates, positive weight); weights sum to 1 when feasible.
  std::vector<std::pair<int, Rational>> combination;
};

MidpointResult midpoint_membership(const InstanceIndex& index,
                                   const Matching& first,
                                   const Matching& second,
                                   int cap = kDefaultEnumerationCap);

// Plain-text LP export (CPLEX LP style) with a comment naming each row.
std::string lp_format(const ConstraintSystem& system);
nlohmann::json to_json(const ConstraintSystem& system);

}  // namespace smt
