#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropent/polyhedra.hpp"
#include "tropent/tropical.hpp"

namespace tropent {

// The N^n grid T_N = {0..N-1}^n. Flattening runs the first coordinate
// fastest: the index of (k_1,...,k_n) is k_1 + k_2*N + ... + k_n*N^(n-1),
// so the N=2 planar grid enumerates (0,0),(1,0),(0,1),(1,1). External files
// depend on this layout.
struct Window {
  int n = 0;
  long long N = 0;

  long long var_count() const;
  long long flatten(const std::vector<long long>& k) const;
  std::vector<long long> unflatten(long long idx) const;
  bool contains(const std::vector<long long>& k) const;
};

struct LinTerm {
  Rat c;
  long long var = 0;  // flattened grid index
  friend bool operator==(const LinTerm&, const LinTerm&) = default;
  friend bool operator<(const LinTerm& a, const LinTerm& b) {
    return a.var != b.var ? a.var < b.var : a.c < b.c;
  }
};

// Asserts that min over terms of (c + u(var)) is attained at least twice.
struct TropicalLinearEquation {
  std::vector<LinTerm> terms;
  friend bool operator==(const TropicalLinearEquation&, const TropicalLinearEquation&) = default;
};

struct EquationProvenance {
  int source = -1;                 // index into TropicalLinearSystem::sources
  std::vector<long long> shift;
};

struct TropicalLinearSystem {
  Window window;
  std::vector<TropicalLinearEquation> equations;
  std::vector<EquationProvenance> provenance;   // parallel to equations
  std::vector<TropicalPolynomial> sources;
};

// All integer shifts s keeping every shifted exponent of f inside T_N:
// per coordinate i, s_i in [-min_j t_{j,i}, N-1-max_j t_{j,i}]. Empty when
// the support is wider than the window.
std::vector<std::vector<long long>> enumerate_shifts(const TropicalPolynomial& f,
                                                     long long N);

// One equation per shift; the solution set is U_N. Single-term equations
// (a one-monomial source) are dropped as trivially satisfied.
TropicalLinearSystem linearize_polynomial(const TropicalPolynomial& f, long long N);

// u(k) = <k, x> on the whole grid.
std::vector<Rat> embed_solution(const std::vector<Rat>& x, long long N);

// Union of the per-generator systems, with duplicate equations removed.
// The solution set over-approximates W_N from above: fewer generators mean
// a larger solution set.
TropicalLinearSystem linearize_family(const std::vector<TropicalPolynomial>& gens,
                                      long long N);

// A finite generating family inside rad(f) for the curve case: the
// primitive shrink of Newton(f) (when its primitive edge cycle closes), f
// itself, their exponent dilations, all translated across T_N and
// deduplicated. Every member passes radical_member_curve.
std::vector<TropicalPolynomial> curve_radical_generators(const TropicalPolynomial& f,
                                                         long long N);

// How zero_dim_radical_generator selects the lattice points of the
// boundary polyhedron {Z >= L_i + c_i}.
struct PickSpec {
  // When empty: every grid point a with max_i(L_i(a)+c_i) attained by facet
  // i is assigned to facet i (all facets must carry >= 2 points).
  // When non-empty: entry i lists the chosen grid points for facet i.
  std::vector<std::vector<std::vector<long long>>> per_facet;
  // Optional strictly-interior points (a, b) with b > max_i(L_i(a)+c_i).
  std::vector<std::pair<std::vector<long long>, Rat>> interior;
};

// The boundary polynomial min_{(a,b)} {<a,X> + b} built from >= 2 lattice
// points per compact facet of {Z >= L_i + c_i} over T_N. Its tropical zeros
// include every prevariety point x = -l_i. Throws when some facet carries
// fewer than two window lattice points.
TropicalPolynomial zero_dim_radical_generator(
    const std::vector<std::vector<Rat>>& forms, const std::vector<Rat>& offsets,
    long long N, const PickSpec& picks = {});

// The k prevariety points encoded by the hyperplanes Z = L_i: x = -l_i.
std::vector<std::vector<Rat>> zero_dim_points(const std::vector<std::vector<Rat>>& forms);

}  // namespace tropent
