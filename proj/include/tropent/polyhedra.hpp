#pragma once

#include <optional>
#include <vector>

#include "tropent/rational.hpp"

namespace tropent {

// coeffs . x + constant, over D ambient variables.
struct LinearForm {
  std::vector<Rat> coeffs;
  Rat constant;

  Rat eval(const std::vector<Rat>& x) const;
};

// Exact H-representation: {x : e(x) = 0 for all equalities,
// i(x) >= 0 for all inequalities}. Redundancy is allowed.
struct RationalPolyhedron {
  int D = 0;
  std::vector<LinearForm> equalities;
  std::vector<LinearForm> inequalities;
};

enum class LpStatus { Infeasible, Unbounded, Optimal };

struct MaxOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat value;                      // defined when Optimal
  std::vector<Rat> point;         // a feasible maximizer (Optimal) or any
                                  // feasible point (Unbounded)
};

// Exact maximum of objective over P. Two-phase rational simplex with
// Bland's rule after substituting out the equality system.
MaxOutcome maximize(const RationalPolyhedron& P, const LinearForm& objective);

// Nonemptiness. Internally either Fourier-Motzkin (few free variables after
// equality elimination) or a phase-1 simplex.
bool feasible(const RationalPolyhedron& P);

// Dimension of the affine hull: -1 for the empty polyhedron, else D minus
// the rank of the equalities plus all implicit equalities (inequalities
// whose slack maximizes to zero). Difference-form systems (every constraint
// involves at most two variables with coefficients +-1) take an exact
// shortest-path route instead of one LP per inequality.
long long affine_dim(const RationalPolyhedron& P);

// Rank of a list of linear forms (coefficients only, constants ignored).
long long forms_rank(const std::vector<LinearForm>& forms, int D);

}  // namespace tropent
