#include "tropent/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropent {

Rat LinearForm::eval(const std::vector<Rat>& x) const {
  Rat v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v += coeffs[i] * x[i];
  return v;
}

namespace {

// ---------------------------------------------------------------------------
// Equality presolve: Gaussian elimination of the equality system, yielding
// x = origin + basis * y with y free, or inconsistency.

struct Presolve {
  bool consistent = true;
  std::vector<Rat> origin;               // D
  std::vector<std::vector<Rat>> basis;   // D x d columns of the null space
  int d = 0;                             // number of free variables
};

Presolve eliminate_equalities(const RationalPolyhedron& P) {
  const int D = P.D;
  Presolve out;
  out.origin.assign(D, Rat(0));

  // rows: coeffs . x = -constant
  std::vector<std::vector<Rat>> rows;
  for (const auto& e : P.equalities) {
    std::vector<Rat> r = e.coeffs;
    r.push_back(-e.constant);
    rows.push_back(std::move(r));
  }

  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < D && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = rows[rank][col];
    for (auto& v : rows[rank]) v /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat factor = rows[r][col];
      for (int c = col; c <= D; ++c)
        if (rows[rank][c] != 0) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][D] != 0) {
      out.consistent = false;
      return out;
    }

  std::vector<bool> is_pivot(D, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t r = 0; r < rank; ++r) out.origin[pivot_col[r]] = rows[r][D];

  for (int col = 0; col < D; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rat> dir(D, Rat(0));
    dir[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) dir[pivot_col[r]] = -rows[r][col];
    out.basis.push_back(std::move(dir));
  }
  out.d = static_cast<int>(out.basis.size());
  return out;
}

// Reduced inequality a . y + c >= 0 in the free variables.
struct RedRow {
  std::vector<Rat> a;
  Rat c;
};

RedRow reduce_form(const LinearForm& f, const Presolve& ps) {
  RedRow row;
  row.c = f.eval(ps.origin);
  row.a.assign(ps.d, Rat(0));
  for (int j = 0; j < ps.d; ++j)
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
      if (f.coeffs[i] != 0 && ps.basis[j][i] != 0)
        row.a[j] += f.coeffs[i] * ps.basis[j][i];
  return row;
}

bool row_is_constant(const RedRow& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rat& v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// Two-phase dense tableau simplex with Bland's rule, minimizing c.z over
// {T z = rhs, z >= 0}.

struct Tableau {
  std::vector<std::vector<Rat>> T;  // m x n
  std::vector<Rat> rhs;             // m, kept >= 0
  std::vector<int> basis;           // m, column index of the basic variable
  int n = 0;

  // Returns false when the objective is unbounded below.
  bool run(const std::vector<Rat>& cost, int allowed_cols) {
    const std::size_t m = T.size();
    while (true) {
      // reduced costs r_j = c_j - c_B . T[., j]
      std::vector<Rat> cb(m);
      for (std::size_t i = 0; i < m; ++i) cb[i] = cost[basis[i]];
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        Rat rj = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (T[i][j] != 0) rj -= cb[i] * T[i][j];
        if (rj < 0) {
          entering = j;  // Bland: smallest index
          break;
        }
      }
      if (entering < 0) return true;

      int leave = -1;
      Rat best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (T[i][entering] <= 0) continue;
        Rat ratio = rhs[i] / T[i][entering];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, entering);
    }
  }

  void pivot(int row, int col) {
    Rat inv = T[row][col];
    for (auto& v : T[row]) v /= inv;
    rhs[row] /= inv;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == row || T[i][col] == 0) continue;
      Rat f = T[i][col];
      for (int j = 0; j < n; ++j)
        if (T[row][j] != 0) T[i][j] -= f * T[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }
};

struct ReducedLp {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> y;
};

// Maximize c . y subject to rows (a . y + const >= 0), y free.
ReducedLp simplex_max(const std::vector<RedRow>& rows_in, const std::vector<Rat>& c,
                      int d) {
  std::vector<RedRow> rows;
  for (const auto& r : rows_in) {
    if (row_is_constant(r)) {
      if (r.c < 0) return {};  // infeasible
      continue;
    }
    rows.push_back(r);
  }
  const int m = static_cast<int>(rows.size());
  if (m == 0 && std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; })) {
    ReducedLp out;
    out.status = LpStatus::Optimal;
    out.value = 0;
    out.y.assign(d, Rat(0));
    return out;
  }

  // z = (y+, y-, slack, artificial), a.y - s = -const with rhs >= 0.
  const int n_real = 2 * d + m;
  const int n = n_real + m;
  Tableau tab;
  tab.n = n;
  tab.T.assign(m, std::vector<Rat>(n, Rat(0)));
  tab.rhs.assign(m, Rat(0));
  tab.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    Rat sign = rows[i].c > 0 ? Rat(-1) : Rat(1);  // rhs = -const, flip to >= 0
    for (int j = 0; j < d; ++j) {
      tab.T[i][j] = sign * rows[i].a[j];
      tab.T[i][d + j] = -sign * rows[i].a[j];
    }
    tab.T[i][2 * d + i] = -sign;
    tab.rhs[i] = -sign * rows[i].c;
    tab.T[i][n_real + i] = 1;
    tab.basis[i] = n_real + i;
  }

  // Phase 1.
  std::vector<Rat> cost1(n, Rat(0));
  for (int i = 0; i < m; ++i) cost1[n_real + i] = 1;
  tab.run(cost1, n);  // bounded below by 0
  Rat art_sum = 0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n_real) art_sum += tab.rhs[i];
  if (art_sum != 0) return {};  // infeasible

  // Drive leftover artificials out of the basis.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n_real) continue;
    int col = -1;
    for (int j = 0; j < n_real; ++j)
      if (tab.T[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) tab.pivot(i, col);
    // else: redundant row; harmless to keep with its zero artificial.
  }

  // Phase 2: minimize -c.y (maximize c.y); artificial columns banned.
  std::vector<Rat> cost2(n, Rat(0));
  for (int j = 0; j < d; ++j) {
    cost2[j] = -c[j];
    cost2[d + j] = c[j];
  }
  for (int i = 0; i < m; ++i) cost2[n_real + i] = 1;  // keep artificials parked
  bool bounded = tab.run(cost2, n_real);

  ReducedLp out;
  out.y.assign(d, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < d)
      out.y[tab.basis[i]] += tab.rhs[i];
    else if (tab.basis[i] < 2 * d)
      out.y[tab.basis[i] - d] -= tab.rhs[i];
  }
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = 0;
  for (int j = 0; j < d; ++j) out.value += c[j] * out.y[j];
  return out;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility for a handful of free variables.

bool fm_feasible(std::vector<RedRow> rows, int d) {
  for (int var = 0; var < d; ++var) {
    std::vector<RedRow> pos, neg, rest;
    for (auto& r : rows) {
      if (r.a[var] > 0)
        pos.push_back(std::move(r));
      else if (r.a[var] < 0)
        neg.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // p: a y + c >= 0 with a_var > 0 gives lower bound on y_var,
        // q gives an upper bound; combine scaled by |coefficients|.
        RedRow comb;
        comb.a.assign(d, Rat(0));
        Rat sp = -q.a[var];  // > 0
        Rat sq = p.a[var];   // > 0
        for (int j = 0; j < d; ++j) comb.a[j] = sp * p.a[j] + sq * q.a[j];
        comb.c = sp * p.c + sq * q.c;
        rest.push_back(std::move(comb));
      }
    rows = std::move(rest);
  }
  for (const auto& r : rows)
    if (r.c < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Difference-system route. Constraints of the shape x_i - x_j <= w (plus
// single-variable bounds through a reference node) admit exact shortest-path
// feasibility and affine-hull computation.

struct DiffGraph {
  int nodes = 0;  // node 0 is the zero reference, variables are 1..D
  struct Edge {
    int from, to;
    Rat w;  // x_to <= x_from + w
  };
  std::vector<Edge> edges;
};

// Returns nullopt when some constraint is not difference-form.
std::optional<DiffGraph> to_diff_graph(const RationalPolyhedron& P) {
  DiffGraph g;
  g.nodes = P.D + 1;
  auto add_ineq = [&](const LinearForm& f) -> bool {
    int ip = -1, im = -1;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (f.coeffs[i] == 0) continue;
      if (f.coeffs[i] == 1 && ip < 0)
        ip = static_cast<int>(i);
      else if (f.coeffs[i] == -1 && im < 0)
        im = static_cast<int>(i);
      else
        return false;
    }
    // f: x_ip - x_im + c >= 0  ->  x_im - x_ip <= c
    int from = ip < 0 ? 0 : ip + 1;
    int to = im < 0 ? 0 : im + 1;
    if (from == to) {
      if (f.constant < 0) g.edges.push_back({0, 0, Rat(-1)});  // marks infeasible
      return true;
    }
    g.edges.push_back({from, to, f.constant});
    return true;
  };
  for (const auto& e : P.equalities) {
    LinearForm neg;
    neg.coeffs.resize(e.coeffs.size());
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) neg.coeffs[i] = -e.coeffs[i];
    neg.constant = -e.constant;
    if (!add_ineq(e) || !add_ineq(neg)) return std::nullopt;
  }
  for (const auto& f : P.inequalities)
    if (!add_ineq(f)) return std::nullopt;
  return g;
}

struct DiffResult {
  bool feasible = false;
  long long dim = -1;
};

DiffResult solve_diff(const DiffGraph& g) {
  const int V = g.nodes;
  for (const auto& e : g.edges)
    if (e.from == e.to && e.w < 0) return {};

  // Bellman-Ford from a virtual source (all potentials start at 0).
  std::vector<Rat> dist(V, Rat(0));
  for (int iter = 0; iter < V; ++iter) {
    bool changed = false;
    for (const auto& e : g.edges)
      if (dist[e.from] + e.w < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.w;
        changed = true;
      }
    if (!changed) break;
    if (iter == V - 1) return {};  // negative cycle
  }

  // Pairwise tight differences via Floyd-Warshall on the finite part.
  const bool has_inf = true;
  std::vector<std::vector<std::optional<Rat>>> d(V, std::vector<std::optional<Rat>>(V));
  (void)has_inf;
  for (int i = 0; i < V; ++i) d[i][i] = Rat(0);
  for (const auto& e : g.edges) {
    if (!d[e.from][e.to] || e.w < *d[e.from][e.to]) d[e.from][e.to] = e.w;
  }
  for (int k = 0; k < V; ++k)
    for (int i = 0; i < V; ++i) {
      if (!d[i][k]) continue;
      for (int j = 0; j < V; ++j) {
        if (!d[k][j]) continue;
        Rat via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }

  // x_i - x_j is forced constant iff i and j lie on a zero-weight cycle.
  std::vector<int> cls(V, -1);
  int next = 0;
  for (int i = 0; i < V; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (int j = i + 1; j < V; ++j)
      if (d[i][j] && d[j][i] && *d[i][j] + *d[j][i] == 0) cls[j] = next;
    ++next;
  }
  std::vector<bool> seen(next, false);
  long long dim = 0;
  seen[cls[0]] = true;  // the reference class contributes no freedom
  for (int i = 1; i < V; ++i)
    if (!seen[cls[i]]) {
      seen[cls[i]] = true;
      ++dim;
    }
  return {true, dim};
}

}  // namespace

long long forms_rank(const std::vector<LinearForm>& forms, int D) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& f : forms) rows.push_back(f.coeffs);
  long long rank = 0;
  for (int col = 0; col < D && rank < static_cast<long long>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < D; ++c)
        if (rows[rank][c] != 0) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

MaxOutcome maximize(const RationalPolyhedron& P, const LinearForm& objective) {
  Presolve ps = eliminate_equalities(P);
  MaxOutcome out;
  if (!ps.consistent) return out;

  std::vector<RedRow> rows;
  rows.reserve(P.inequalities.size());
  for (const auto& f : P.inequalities) rows.push_back(reduce_form(f, ps));
  RedRow obj = reduce_form(objective, ps);

  ReducedLp lp = simplex_max(rows, obj.a, ps.d);
  if (lp.status == LpStatus::Infeasible) return out;

  out.status = lp.status;
  out.point = ps.origin;
  for (int j = 0; j < ps.d; ++j)
    if (lp.y[j] != 0)
      for (int i = 0; i < P.D; ++i) out.point[i] += ps.basis[j][i] * lp.y[j];
  if (lp.status == LpStatus::Optimal) out.value = lp.value + obj.c;
  return out;
}

bool feasible(const RationalPolyhedron& P) {
  if (auto g = to_diff_graph(P)) return solve_diff(*g).feasible;

  Presolve ps = eliminate_equalities(P);
  if (!ps.consistent) return false;
  std::vector<RedRow> rows;
  for (const auto& f : P.inequalities) rows.push_back(reduce_form(f, ps));
  if (ps.d <= 3 && rows.size() <= 24) return fm_feasible(rows, ps.d);

  LinearForm zero;
  zero.coeffs.assign(P.D, Rat(0));
  return maximize(P, zero).status != LpStatus::Infeasible;
}

long long affine_dim(const RationalPolyhedron& P) {
  if (auto g = to_diff_graph(P)) {
    DiffResult r = solve_diff(*g);
    return r.feasible ? r.dim : -1;
  }

  if (!feasible(P)) return -1;
  std::vector<LinearForm> eqs = P.equalities;
  for (const auto& f : P.inequalities) {
    MaxOutcome m = maximize(P, f);
    if (m.status == LpStatus::Optimal && m.value == 0) eqs.push_back(f);
  }
  return P.D - forms_rank(eqs, P.D);
}

}  // namespace tropent
