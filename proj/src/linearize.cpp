#include "tropent/linearize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropent {

long long Window::var_count() const {
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= N;
  return count;
}

long long Window::flatten(const std::vector<long long>& k) const {
  long long idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * N + k[i];
  return idx;
}

std::vector<long long> Window::unflatten(long long idx) const {
  std::vector<long long> k(n);
  for (int i = 0; i < n; ++i) {
    k[i] = idx % N;
    idx /= N;
  }
  return k;
}

bool Window::contains(const std::vector<long long>& k) const {
  for (int i = 0; i < n; ++i)
    if (k[i] < 0 || k[i] >= N) return false;
  return true;
}

namespace {

void canonicalize(TropicalLinearEquation& eq) {
  std::sort(eq.terms.begin(), eq.terms.end(),
            [](const LinTerm& a, const LinTerm& b) {
              return a.var != b.var ? a.var < b.var : a.c < b.c;
            });
}

std::vector<std::vector<long long>> grid_points(int n, long long N) {
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

std::vector<std::vector<long long>> enumerate_shifts(const TropicalPolynomial& f,
                                                     long long N) {
  auto [lo, hi] = f.support_box();
  const int n = f.n();
  std::vector<long long> from(n), to(n);
  for (int i = 0; i < n; ++i) {
    from[i] = -lo[i];
    to[i] = N - 1 - hi[i];
    if (from[i] > to[i]) return {};
  }
  std::vector<std::vector<long long>> shifts;
  std::vector<long long> s = from;
  while (true) {
    shifts.push_back(s);
    int i = 0;
    while (i < n && ++s[i] > to[i]) s[i++] = from[i];
    if (i == n) break;
  }
  return shifts;
}

TropicalLinearSystem linearize_polynomial(const TropicalPolynomial& f, long long N) {
  TropicalLinearSystem sys;
  sys.window = {f.n(), N};
  sys.sources.push_back(f);
  if (f.monomials().size() < 2) return sys;  // min over one term never ties
  for (const auto& s : enumerate_shifts(f, N)) {
    TropicalLinearEquation eq;
    for (const auto& m : f.monomials()) {
      std::vector<long long> k(m.exponents);
      for (int i = 0; i < f.n(); ++i) k[i] += s[i];
      eq.terms.push_back({m.coeff, sys.window.flatten(k)});
    }
    canonicalize(eq);
    sys.equations.push_back(std::move(eq));
    sys.provenance.push_back({0, s});
  }
  return sys;
}

std::vector<Rat> embed_solution(const std::vector<Rat>& x, long long N) {
  Window w{static_cast<int>(x.size()), N};
  std::vector<Rat> u(w.var_count());
  for (const auto& k : grid_points(w.n, N)) {
    Rat v = 0;
    for (int i = 0; i < w.n; ++i) v += Rat(k[i]) * x[i];
    u[w.flatten(k)] = v;
  }
  return u;
}

TropicalLinearSystem linearize_family(const std::vector<TropicalPolynomial>& gens,
                                      long long N) {
  TropicalLinearSystem sys;
  sys.window = {gens.empty() ? 1 : gens[0].n(), N};
  sys.sources = gens;
  std::set<std::vector<LinTerm>> seen;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    if (gens[gi].n() != sys.window.n)
      throw std::invalid_argument("linearize_family: mixed ambient dimensions");
    TropicalLinearSystem part = linearize_polynomial(gens[gi], N);
    for (std::size_t e = 0; e < part.equations.size(); ++e) {
      auto key = part.equations[e].terms;
      std::sort(key.begin(), key.end(), [](const LinTerm& a, const LinTerm& b) {
        return a.var != b.var ? a.var < b.var : a.c < b.c;
      });
      if (!seen.insert(key).second) continue;
      sys.equations.push_back(part.equations[e]);
      sys.provenance.push_back({static_cast<int>(gi), part.provenance[e].shift});
    }
  }
  return sys;
}

namespace {

using Support = std::vector<Point2>;

std::optional<Support> primitive_shrink(const NewtonPolygon& poly) {
  Point2 at{0, 0};
  Support verts;
  for (const auto& e : poly.edges()) {
    verts.push_back(at);
    at = {at.x + e.dir.x, at.y + e.dir.y};
  }
  if (!(at == Point2{0, 0})) return std::nullopt;  // primitive cycle does not close
  return verts;
}

TropicalPolynomial support_poly(const Support& pts) {
  std::vector<TropicalMonomial> ms;
  for (const auto& p : pts) ms.push_back({Rat(0), {p.x, p.y}});
  return TropicalPolynomial(2, std::move(ms));
}

}  // namespace

std::vector<TropicalPolynomial> curve_radical_generators(const TropicalPolynomial& f,
                                                         long long N) {
  curve_prevariety(f);  // validates the curve-case preconditions

  std::vector<Support> bases;
  Support own;
  for (const auto& m : f.monomials()) own.push_back({m.exponents[0], m.exponents[1]});
  bases.push_back(own);
  if (auto shrink = primitive_shrink(newton_polygon(f))) bases.push_back(*shrink);

  std::set<Support> seen;
  std::vector<TropicalPolynomial> gens;
  for (const auto& base : bases) {
    for (long long lambda = 1;; ++lambda) {
      Point2 lo = base[0], hi = base[0];
      Support scaled;
      for (const auto& p : base) {
        Point2 q{p.x * lambda, p.y * lambda};
        scaled.push_back(q);
        lo = {std::min(lo.x, q.x), std::min(lo.y, q.y)};
        hi = {std::max(hi.x, q.x), std::max(hi.y, q.y)};
      }
      long long wx = hi.x - lo.x, wy = hi.y - lo.y;
      if (wx > N - 1 || wy > N - 1) break;
      for (long long sx = 0; sx + wx <= N - 1; ++sx)
        for (long long sy = 0; sy + wy <= N - 1; ++sy) {
          Support placed;
          for (const auto& q : scaled)
            placed.push_back({q.x - lo.x + sx, q.y - lo.y + sy});
          std::sort(placed.begin(), placed.end());
          if (!seen.insert(placed).second) continue;
          TropicalPolynomial g = support_poly(placed);
          if (!radical_member_curve(g, f).member)
            throw std::logic_error("curve_radical_generators: emitted non-member");
          gens.push_back(std::move(g));
        }
    }
  }
  return gens;
}

std::vector<std::vector<Rat>> zero_dim_points(const std::vector<std::vector<Rat>>& forms) {
  std::vector<std::vector<Rat>> pts;
  for (const auto& l : forms) {
    std::vector<Rat> p;
    for (const auto& v : l) p.push_back(-v);
    pts.push_back(std::move(p));
  }
  return pts;
}

TropicalPolynomial zero_dim_radical_generator(
    const std::vector<std::vector<Rat>>& forms, const std::vector<Rat>& offsets,
    long long N, const PickSpec& picks) {
  const std::size_t k = forms.size();
  if (k == 0 || offsets.size() != k)
    throw std::invalid_argument("zero_dim_radical_generator: need k forms and k offsets");
  const int n = static_cast<int>(forms[0].size());

  auto form_at = [&](std::size_t i, const std::vector<long long>& a) {
    Rat v = offsets[i];
    for (int j = 0; j < n; ++j) v += forms[i][j] * Rat(a[j]);
    return v;
  };
  auto roof_at = [&](const std::vector<long long>& a) {
    Rat best = form_at(0, a);
    for (std::size_t i = 1; i < k; ++i) best = std::max(best, form_at(i, a));
    return best;
  };

  std::vector<TropicalMonomial> ms;
  auto add_boundary_point = [&](const std::vector<long long>& a) {
    ms.push_back({roof_at(a), a});
  };

  if (picks.per_facet.empty()) {
    const auto pts = grid_points(n, N);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t on_facet = 0;
      for (const auto& a : pts)
        if (form_at(i, a) == roof_at(a)) {
          add_boundary_point(a);
          ++on_facet;
        }
      if (on_facet < 2)
        throw std::invalid_argument(
            "zero_dim_radical_generator: facet " + std::to_string(i) +
            " carries fewer than two window lattice points");
    }
  } else {
    if (picks.per_facet.size() != k)
      throw std::invalid_argument("zero_dim_radical_generator: picks must cover every facet");
    Window w{n, N};
    for (std::size_t i = 0; i < k; ++i) {
      if (picks.per_facet[i].size() < 2)
        throw std::invalid_argument(
            "zero_dim_radical_generator: facet " + std::to_string(i) +
            " carries fewer than two window lattice points");
      for (const auto& a : picks.per_facet[i]) {
        if (static_cast<int>(a.size()) != n || !w.contains(a))
          throw std::invalid_argument("zero_dim_radical_generator: pick outside the window");
        if (form_at(i, a) != roof_at(a))
          throw std::invalid_argument(
              "zero_dim_radical_generator: picked point is not on its facet");
        add_boundary_point(a);
      }
    }
  }
  for (const auto& [a, b] : picks.interior) {
    if (b <= roof_at(a))
      throw std::invalid_argument(
          "zero_dim_radical_generator: interior point is not strictly above the roof");
    ms.push_back({b, a});
  }

  TropicalPolynomial g(n, std::move(ms));
  if (!radical_member_zero_dim(g, zero_dim_points(forms)))
    throw std::logic_error("zero_dim_radical_generator: result misses a prevariety point");
  return g;
}

}  // namespace tropent
