#pragma once

#include "smt/rational.hpp"

namespace smt {

// Rank over the rationals, by Gaussian elimination with exact arithmetic.
// Rows may have any (consistent) width; an empty matrix has rank 0.
int matrix_rank(RationalMatrix rows);

// Exact feasibility of { x >= 0 : A x = b } by a phase-1 simplex: one
// artificial variable per row, minimize their sum, Bland's rule (smallest
// eligible index enters; smallest basic variable index leaves on ties), so
// the run terminates and is deterministic. All arithmetic is rational.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector solution;  // size = columns of A when feasible, else empty
  Rational residual;        // phase-1 optimum; 0 exactly when feasible
};

FeasibilityResult phase1_feasibility(const RationalMatrix& a,
                                     const RationalVector& b);

}  // namespace smt
