#pragma once

#include <string>
#include <vector>

#include "tropent/lattice.hpp"
#include "tropent/rational.hpp"

namespace tropent {

// One affine form coeff + <exponents, X> of a min-plus polynomial.
struct TropicalMonomial {
  Rat coeff;
  std::vector<long long> exponents;
};

// f = min_j { coeff_j + <exp_j, X> }. Immutable after construction;
// duplicate exponent vectors are merged keeping the minimal coefficient.
class TropicalPolynomial {
 public:
  TropicalPolynomial(int n, std::vector<TropicalMonomial> monomials);

  int n() const { return n_; }
  const std::vector<TropicalMonomial>& monomials() const { return monomials_; }

  bool zero_coefficients() const;
  // Support extent per coordinate: [min exponent, max exponent].
  std::pair<std::vector<long long>, std::vector<long long>> support_box() const;

 private:
  int n_;
  std::vector<TropicalMonomial> monomials_;
};

struct EvalResult {
  Rat value;
  std::vector<std::size_t> argmin;  // indices into monomials(), sorted
};

EvalResult evaluate(const TropicalPolynomial& f, const std::vector<Rat>& x);

// True iff the defining minimum is attained by at least two monomials.
bool is_tropical_zero(const TropicalPolynomial& f, const std::vector<Rat>& x);

// Convex hull of the exponent vectors of a bivariate polynomial.
NewtonPolygon newton_polygon(const TropicalPolynomial& f);

// V(f) for a zero-coefficient bivariate f with 2-dimensional Newton polygon:
// the origin plus one primitive ray per polygon edge (the negated outer
// normals).
struct TropicalCurve {
  std::vector<Point2> rays;
};

TropicalCurve curve_prevariety(const TropicalPolynomial& f);

// Exact check that g vanishes tropically on the whole closed ray
// {base + t*dir : t >= 0}. Works on the lower envelope of the monomials
// restricted to the ray: every maximal envelope piece must be supported by
// at least two monomials.
bool vanishes_on_ray(const TropicalPolynomial& g, const std::vector<Rat>& base,
                     const std::vector<long long>& dir);

struct RadicalCurveVerdict {
  bool member = false;
  // The edge-matching condition: for every edge of Newton(f) there is an
  // edge of Newton(g) with the same outer normal direction. Implies member.
  bool sufficient_condition_met = false;
};

// Exact radical membership of zero-coefficient bivariate g w.r.t. the curve
// V(f): vanishing at the vertex and along every ray.
RadicalCurveVerdict radical_member_curve(const TropicalPolynomial& g,
                                         const TropicalPolynomial& f);

// Membership in the radical of a finite point set: g vanishes at every point.
bool radical_member_zero_dim(const TropicalPolynomial& g,
                             const std::vector<std::vector<Rat>>& points);

}  // namespace tropent
