#include "tropent/sweep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropent {

namespace {

long long dot(const Point2& n, const Point2& p) { return n.x * p.x + n.y * p.y; }

struct GridValues {
  Window window;
  const std::vector<Rat>& w;
  Rat at(const Point2& p) const { return w[window.flatten({p.x, p.y})]; }
};

}  // namespace

SweepOutcome sweep_curve(const TropicalPolynomial& f, long long N,
                         const std::vector<Rat>& w) {
  NewtonPolygon P = newton_polygon(f);
  if (P.dimension() < 2)
    throw std::invalid_argument("sweep_curve: Newton polygon must be 2-dimensional");
  Window window{2, N};
  if (static_cast<long long>(w.size()) != window.var_count())
    throw std::invalid_argument("sweep_curve: grid point has wrong size");
  GridValues grid{window, w};

  // Edge normals in CCW order; the hull starts at its lexicographically
  // smallest vertex, so the first edge is the lexicographically smallest one.
  std::vector<Point2> normals;
  for (const auto& e : P.edges()) normals.push_back(e.outer_normal);

  // Q is tracked through its surviving lattice points; every shrink removes
  // exactly the extreme lattice line of the chosen direction.
  std::vector<Point2> points;
  for (long long y = 0; y < N; ++y)
    for (long long x = 0; x < N; ++x) points.push_back({x, y});

  auto extreme_line = [&](const Point2& n) {
    long long level = dot(n, points[0]);
    for (const auto& p : points) level = std::max(level, dot(n, p));
    std::vector<Point2> line;
    for (const auto& p : points)
      if (dot(n, p) == level) line.push_back(p);
    std::sort(line.begin(), line.end());
    return std::pair{level, line};
  };

  SweepCertificate cert;
  std::set<Rat> all_values;
  while (!points.empty()) {
    bool shrunk = false;
    for (const auto& n : normals) {
      auto [level, line] = extreme_line(n);
      std::set<Rat> vals;
      for (const auto& p : line) vals.insert(grid.at(p));
      if (vals.size() > 2) continue;

      SweepStep step;
      step.outer_normal = n;
      step.line_level = level;
      step.line_points = line;
      step.values.assign(vals.begin(), vals.end());
      cert.steps.push_back(std::move(step));
      all_values.insert(vals.begin(), vals.end());
      std::erase_if(points, [&](const Point2& p) { return dot(n, p) == level; });
      shrunk = true;
      break;
    }
    if (shrunk) continue;

    // No edge admits a shrink: every extreme line carries at least three
    // distinct values. Build the violated radical element.
    std::vector<std::vector<std::pair<Rat, Point2>>> triples;
    for (const auto& n : normals) {
      auto [level, line] = extreme_line(n);
      (void)level;
      std::map<Rat, Point2> by_value;  // smallest point per value, lex
      for (const auto& p : line) {
        auto [it, inserted] = by_value.emplace(grid.at(p), p);
        if (!inserted && p < it->second) it->second = p;
      }
      std::vector<std::pair<Rat, Point2>> triple;
      for (const auto& [v, p] : by_value) {
        triple.push_back({v, p});
        if (triple.size() == 3) break;
      }
      triples.push_back(std::move(triple));
    }

    Point2 min_point = triples[0][0].second;
    Rat min_value = triples[0][0].first;
    for (const auto& t : triples)
      if (t[0].first < min_value || (t[0].first == min_value && t[0].second < min_point)) {
        min_value = t[0].first;
        min_point = t[0].second;
      }

    std::set<Point2> support{min_point};
    for (const auto& t : triples) {
      int taken = 0;
      for (const auto& [v, p] : t) {
        if (v <= min_value) continue;
        support.insert(p);
        if (++taken == 2) break;
      }
      if (taken < 2)
        throw std::logic_error("sweep_curve: triple lacks two values above the minimum");
    }

    std::vector<TropicalMonomial> ms;
    for (const auto& p : support) ms.push_back({Rat(0), {p.x, p.y}});
    TropicalPolynomial g(2, std::move(ms));

    // Post-hoc soundness: g must be a radical element and w must violate
    // its linearization at the single minimizer.
    if (!radical_member_curve(g, f).member)
      throw std::logic_error("sweep_curve: counterexample is not a radical element");
    std::size_t hits = 0;
    for (const auto& p : support)
      if (grid.at(p) == min_value) ++hits;
    for (const auto& p : support)
      if (grid.at(p) < min_value)
        throw std::logic_error("sweep_curve: minimizer is not minimal");
    if (hits != 1)
      throw std::logic_error("sweep_curve: linearization minimum not unique");

    SweepOutcome out;
    out.counterexample = SweepCounterexample{
        std::move(g), min_point, std::vector<Point2>(support.begin(), support.end())};
    return out;
  }

  cert.distinct_values = static_cast<long long>(all_values.size());
  SweepOutcome out;
  out.certificate = std::move(cert);
  return out;
}

CertificateBoundReport certificate_bound_check(const TropicalPolynomial& f, long long N,
                                               const std::vector<std::vector<Rat>>& ws) {
  NewtonPolygon P = newton_polygon(f);
  const std::vector<Point2> unit_square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  if (P.vertices != unit_square)
    throw std::invalid_argument("certificate_bound_check: Newton polygon must be the unit square");

  CertificateBoundReport report;
  Window window{2, N};
  for (const auto& w : ws) {
    ++report.runs;
    SweepOutcome out = sweep_curve(f, N, w);
    if (out.certificate) {
      ++report.certificates;
      long long steps = static_cast<long long>(out.certificate->steps.size());
      long long d = out.certificate->distinct_values;
      report.max_steps = std::max(report.max_steps, steps);
      report.max_distinct = std::max(report.max_distinct, d);
      if (steps > 2 * N || d > 4 * N) report.all_certificates_within_bounds = false;
    } else {
      ++report.counterexamples;
      // sweep_curve already re-verified the counterexample; double-check the
      // unique-minimizer property from the raw data.
      const auto& cx = *out.counterexample;
      std::size_t at_min = 0;
      Rat best = w[window.flatten({cx.support[0].x, cx.support[0].y})];
      for (const auto& p : cx.support)
        best = std::min(best, w[window.flatten({p.x, p.y})]);
      for (const auto& p : cx.support)
        if (w[window.flatten({p.x, p.y})] == best) ++at_min;
      if (at_min != 1) report.all_counterexamples_verified = false;
    }
  }
  return report;
}

namespace {

struct Roof {
  const std::vector<std::vector<Rat>>& forms;
  const std::vector<Rat>& offsets;

  Rat form_at(std::size_t i, const std::vector<long long>& a) const {
    Rat v = offsets[i];
    for (std::size_t j = 0; j < forms[i].size(); ++j) v += forms[i][j] * Rat(a[j]);
    return v;
  }
  Rat at(const std::vector<long long>& a) const {
    Rat best = form_at(0, a);
    for (std::size_t i = 1; i < forms.size(); ++i) best = std::max(best, form_at(i, a));
    return best;
  }
};

std::vector<std::vector<long long>> window_points(int n, long long N) {
  std::vector<std::vector<long long>> pts;
  std::vector<long long> k(n, 0);
  while (true) {
    pts.push_back(k);
    int i = 0;
    while (i < n && ++k[i] == N) k[i++] = 0;
    if (i == n) break;
  }
  return pts;
}

}  // namespace

MaxPlusFit maxplus_fit(const std::vector<std::vector<Rat>>& forms, long long N,
                       const std::vector<Rat>& w) {
  const std::size_t k = forms.size();
  if (k == 0) throw std::invalid_argument("maxplus_fit: need at least one form");
  const int n = static_cast<int>(forms[0].size());
  Window window{n, N};
  if (static_cast<long long>(w.size()) != window.var_count())
    throw std::invalid_argument("maxplus_fit: grid point has wrong size");

  const auto pts = window_points(n, N);
  MaxPlusFit fit;
  fit.offsets.assign(k, Rat(0));
  for (std::size_t i = 0; i < k; ++i) {
    bool first = true;
    for (const auto& a : pts) {
      Rat li = 0;
      for (int j = 0; j < n; ++j) li += forms[i][j] * Rat(a[j]);
      Rat candidate = -w[window.flatten(a)] - li;
      if (first || candidate < fit.offsets[i]) fit.offsets[i] = candidate;
      first = false;
    }
  }
  Roof roof{forms, fit.offsets};
  for (const auto& a : pts)
    if (-w[window.flatten(a)] > roof.at(a)) fit.deficiency.push_back(a);
  return fit;
}

DeficiencyVerdict boundary_deficiency(const std::vector<std::vector<Rat>>& forms,
                                      long long N, const std::vector<Rat>& w,
                                      long long threshold) {
  if (threshold < 0) throw std::invalid_argument("boundary_deficiency: negative threshold");
  DeficiencyVerdict verdict;
  verdict.fit = maxplus_fit(forms, N, w);
  if (static_cast<long long>(verdict.fit.deficiency.size()) <= threshold) {
    verdict.certified = true;
    verdict.dim_bound = static_cast<long long>(verdict.fit.deficiency.size()) +
                        static_cast<long long>(forms.size());
  }
  return verdict;
}

ProbeResult zero_dim_radical_probe(const std::vector<std::vector<Rat>>& forms,
                                   long long N, const std::vector<Rat>& w) {
  if (forms.size() < 2)
    throw std::invalid_argument("zero_dim_radical_probe: need at least two forms");
  const int n = static_cast<int>(forms[0].size());
  Window window{n, N};

  ProbeResult result;
  MaxPlusFit fit = maxplus_fit(forms, N, w);
  Roof roof{forms, fit.offsets};

  // Lattice points per facet of the fitted boundary polyhedron.
  const auto pts = window_points(n, N);
  std::vector<std::vector<std::vector<long long>>> facet_points(forms.size());
  for (const auto& a : pts) {
    Rat top = roof.at(a);
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (roof.form_at(i, a) == top) facet_points[i].push_back(a);
  }

  std::vector<TropicalMonomial> ms;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (facet_points[i].size() < 2) {
      result.transcript.notes.push_back("facet " + std::to_string(i) +
                                        " has fewer than two lattice points; skipped");
      continue;
    }
    for (const auto& a : facet_points[i]) ms.push_back({roof.at(a), a});
  }
  if (ms.size() < 2) {
    result.transcript.notes.push_back("no usable facets; no generator built");
    return result;
  }
  TropicalPolynomial g(n, std::move(ms));

  if (!radical_member_zero_dim(g, zero_dim_points(forms))) {
    result.transcript.notes.push_back(
        "generator misses a prevariety point (skipped facet); not emitted");
    return result;
  }

  // Linearization of g at w: min over support of w(a) + coeff.
  Rat best;
  std::size_t count = 0;
  std::vector<long long> argmin;
  for (const auto& m : g.monomials()) {
    Rat v = w[window.flatten(m.exponents)] + m.coeff;
    result.transcript.terms.push_back({m.exponents, m.coeff, v});
    if (count == 0 || v < best) {
      best = v;
      count = 0;
      argmin = m.exponents;
    }
    if (v == best) ++count;
  }
  result.transcript.min_count = count;
  if (count == 1) {
    result.violated_generator = std::move(g);
    result.violated_at = argmin;
  }
  return result;
}

}  // namespace tropent
