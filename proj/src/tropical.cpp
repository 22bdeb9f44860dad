#include "tropent/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropent {

TropicalPolynomial::TropicalPolynomial(int n, std::vector<TropicalMonomial> monomials)
    : n_(n) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (monomials.empty()) throw std::invalid_argument("a tropical polynomial needs at least one monomial");
  // Duplicate exponent vectors collapse to the minimal coefficient; the
  // first-occurrence order of the distinct exponents is preserved.
  std::map<std::vector<long long>, std::size_t> index;
  for (auto& m : monomials) {
    if (static_cast<int>(m.exponents.size()) != n)
      throw std::invalid_argument("monomial exponent vector has wrong length");
    auto [it, inserted] = index.emplace(m.exponents, monomials_.size());
    if (inserted)
      monomials_.push_back(std::move(m));
    else if (m.coeff < monomials_[it->second].coeff)
      monomials_[it->second].coeff = m.coeff;
  }
}

bool TropicalPolynomial::zero_coefficients() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](const TropicalMonomial& m) { return m.coeff == 0; });
}

std::pair<std::vector<long long>, std::vector<long long>>
TropicalPolynomial::support_box() const {
  std::vector<long long> lo(n_), hi(n_);
  for (int i = 0; i < n_; ++i) {
    lo[i] = hi[i] = monomials_[0].exponents[i];
    for (const auto& m : monomials_) {
      lo[i] = std::min(lo[i], m.exponents[i]);
      hi[i] = std::max(hi[i], m.exponents[i]);
    }
  }
  return {lo, hi};
}

EvalResult evaluate(const TropicalPolynomial& f, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != f.n())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  EvalResult res;
  for (std::size_t j = 0; j < f.monomials().size(); ++j) {
    const auto& m = f.monomials()[j];
    Rat v = m.coeff;
    for (int i = 0; i < f.n(); ++i) v += Rat(m.exponents[i]) * x[i];
    if (j == 0 || v < res.value) {
      res.value = v;
      res.argmin.clear();
    }
    if (v == res.value) res.argmin.push_back(j);
  }
  return res;
}

bool is_tropical_zero(const TropicalPolynomial& f, const std::vector<Rat>& x) {
  return evaluate(f, x).argmin.size() >= 2;
}

NewtonPolygon newton_polygon(const TropicalPolynomial& f) {
  if (f.n() != 2) throw std::invalid_argument("newton_polygon: polynomial must be bivariate");
  std::vector<Point2> pts;
  for (const auto& m : f.monomials()) pts.push_back({m.exponents[0], m.exponents[1]});
  return hull_2d(pts);
}

TropicalCurve curve_prevariety(const TropicalPolynomial& f) {
  if (f.n() != 2) throw std::invalid_argument("curve_prevariety: polynomial must be bivariate");
  if (!f.zero_coefficients())
    throw std::invalid_argument("curve_prevariety: coefficients must all vanish");
  NewtonPolygon poly = newton_polygon(f);
  if (poly.dimension() < 2)
    throw std::invalid_argument("curve_prevariety: degenerate Newton polygon");
  TropicalCurve curve;
  for (const auto& e : poly.edges())
    curve.rays.push_back({-e.outer_normal.x, -e.outer_normal.y});
  return curve;
}

bool vanishes_on_ray(const TropicalPolynomial& g, const std::vector<Rat>& base,
                     const std::vector<long long>& dir) {
  if (static_cast<int>(base.size()) != g.n() || dir.size() != base.size())
    throw std::invalid_argument("vanishes_on_ray: dimension mismatch");
  if (std::all_of(dir.begin(), dir.end(), [](long long d) { return d == 0; }))
    throw std::invalid_argument("vanishes_on_ray: zero direction");

  // Restrict each monomial to the ray: value_j(t) = alpha_j + beta_j * t.
  const auto& ms = g.monomials();
  std::vector<Rat> alpha(ms.size()), beta(ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    alpha[j] = ms[j].coeff;
    for (int i = 0; i < g.n(); ++i) {
      alpha[j] += Rat(ms[j].exponents[i]) * base[i];
      beta[j] += Rat(ms[j].exponents[i]) * Rat(dir[i]);
    }
  }

  // Candidate breakpoints: pairwise crossings at t >= 0.
  std::set<Rat> cuts;
  cuts.insert(Rat(0));
  for (std::size_t j = 0; j < ms.size(); ++j)
    for (std::size_t l = j + 1; l < ms.size(); ++l)
      if (beta[j] != beta[l]) {
        Rat t = (alpha[l] - alpha[j]) / (beta[j] - beta[l]);
        if (t > 0) cuts.insert(t);
      }

  // The argmin set is constant on each open interval between consecutive
  // cuts, and breakpoint / endpoint ties follow by continuity from the
  // adjacent intervals. So sampling one interior point per interval decides
  // the whole ray.
  std::vector<Rat> samples;
  std::vector<Rat> sorted(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    samples.push_back((sorted[i] + sorted[i + 1]) / 2);
  samples.push_back(sorted.back() + 1);

  for (const Rat& t : samples) {
    std::size_t count = 0;
    Rat best;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      Rat v = alpha[j] + beta[j] * t;
      if (j == 0 || v < best) {
        best = v;
        count = 0;
      }
      if (v == best) ++count;
    }
    if (count < 2) return false;
  }
  return true;
}

namespace {

// Outer normal directions of the faces of a (possibly degenerate) polygon
// that carry at least two lattice points of the vertex set. A segment
// exposes both perpendicular directions.
std::vector<Point2> edge_normals(const NewtonPolygon& poly) {
  std::vector<Point2> normals;
  if (poly.dimension() == 1) {
    const auto e = poly.edges()[0];
    normals.push_back(e.outer_normal);
    normals.push_back({-e.outer_normal.x, -e.outer_normal.y});
  } else if (poly.dimension() == 2) {
    for (const auto& e : poly.edges()) normals.push_back(e.outer_normal);
  }
  return normals;
}

}  // namespace

RadicalCurveVerdict radical_member_curve(const TropicalPolynomial& g,
                                         const TropicalPolynomial& f) {
  TropicalCurve curve = curve_prevariety(f);
  if (g.n() != 2) throw std::invalid_argument("radical_member_curve: g must be bivariate");
  if (!g.zero_coefficients())
    throw std::invalid_argument("radical_member_curve: g must have vanishing coefficients");

  RadicalCurveVerdict verdict;

  std::vector<Rat> origin(2, Rat(0));
  verdict.member = is_tropical_zero(g, origin);
  for (const auto& ray : curve.rays) {
    if (!verdict.member) break;
    verdict.member = vanishes_on_ray(g, origin, {ray.x, ray.y});
  }

  const auto g_normals = edge_normals(newton_polygon(g));
  verdict.sufficient_condition_met = true;
  for (const auto& e : newton_polygon(f).edges()) {
    bool found = std::find(g_normals.begin(), g_normals.end(), e.outer_normal) !=
                 g_normals.end();
    if (!found) {
      verdict.sufficient_condition_met = false;
      break;
    }
  }
  return verdict;
}

bool radical_member_zero_dim(const TropicalPolynomial& g,
                             const std::vector<std::vector<Rat>>& points) {
  if (points.empty())
    throw std::invalid_argument("radical_member_zero_dim: empty point set");
  for (const auto& p : points)
    if (!is_tropical_zero(g, p)) return false;
  return true;
}

}  // namespace tropent
