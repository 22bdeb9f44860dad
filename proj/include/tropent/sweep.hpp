#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropent/linearize.hpp"
#include "tropent/tropical.hpp"

namespace tropent {

// One shrink step of the curve sweep: the supporting lattice line of the
// current region in direction `outer_normal` carried at most two distinct
// values.
struct SweepStep {
  Point2 outer_normal;             // primitive edge normal of Newton(f)
  long long line_level = 0;        // <outer_normal, p> on the removed line
  std::vector<Point2> line_points; // removed lattice points, lex order
  std::vector<Rat> values;         // their distinct values (1 or 2)
};

struct SweepCertificate {
  std::vector<SweepStep> steps;
  long long distinct_values = 0;   // over all swept points; <= 2 * steps
};

struct SweepCounterexample {
  TropicalPolynomial g;            // zero-coefficient radical element, support B
  Point2 violated_at;              // unique minimizer of g's linearization at w
  std::vector<Point2> support;     // B, lex order
};

struct SweepOutcome {
  // Exactly one of the two is set.
  std::optional<SweepCertificate> certificate;
  std::optional<SweepCounterexample> counterexample;
};

// The recursive polygon sweep: shrinks the window square edge by edge while
// every extreme lattice line carries at most two distinct values of w, or
// extracts a violated radical element when no edge admits a shrink. The
// returned counterexample is re-verified (radical membership plus unique
// minimizer) before being reported.
SweepOutcome sweep_curve(const TropicalPolynomial& f, long long N,
                         const std::vector<Rat>& w);

struct CertificateBoundReport {
  long long runs = 0;
  long long certificates = 0;
  long long counterexamples = 0;
  long long max_steps = 0;
  long long max_distinct = 0;
  bool all_certificates_within_bounds = true;  // steps <= 2N and d <= 4N
  bool all_counterexamples_verified = true;
};

// Batch sweep statistics for a polynomial whose Newton polygon is the unit
// square, asserting the 2N-step / 4N-value bounds per certificate.
CertificateBoundReport certificate_bound_check(const TropicalPolynomial& f, long long N,
                                               const std::vector<std::vector<Rat>>& ws);

// Residuated max-plus fit: c_i = min_a (-w(a) - L_i(a)) is the greatest
// offset vector with max_i(L_i(a)+c_i) <= -w(a) on the whole grid; D
// collects the grid points where the inequality is strict.
struct MaxPlusFit {
  std::vector<Rat> offsets;
  std::vector<std::vector<long long>> deficiency;  // lex order
};

MaxPlusFit maxplus_fit(const std::vector<std::vector<Rat>>& forms, long long N,
                       const std::vector<Rat>& w);

struct DeficiencyVerdict {
  bool certified = false;
  MaxPlusFit fit;
  long long dim_bound = -1;  // |D| + k when certified
};

// One-sided boundary-membership test: certifies when the residuated fit
// leaves at most `threshold` deficient points. A failure is not a proof of
// non-membership (another offset vector could do better).
DeficiencyVerdict boundary_deficiency(const std::vector<std::vector<Rat>>& forms,
                                      long long N, const std::vector<Rat>& w,
                                      long long threshold);

struct ProbeTranscript {
  struct Term {
    std::vector<long long> exponent;
    Rat coeff;
    Rat lin_value;  // w(exponent) + coeff
  };
  std::vector<Term> terms;
  std::size_t min_count = 0;
  std::vector<std::string> notes;
};

struct ProbeResult {
  std::optional<TropicalPolynomial> violated_generator;
  std::optional<std::vector<long long>> violated_at;
  ProbeTranscript transcript;
};

// Builds the boundary generator of the residuated fit (every facet with at
// least two window lattice points; fewer means the facet is skipped with a
// note) and reports it when its linearization at w attains its minimum
// exactly once. Only generators verified to vanish at all k prevariety
// points are ever reported.
ProbeResult zero_dim_radical_probe(const std::vector<std::vector<Rat>>& forms,
                                   long long N, const std::vector<Rat>& w);

}  // namespace tropent
