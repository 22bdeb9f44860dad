#include "tropent/prevariety.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tropent {

RationalPolyhedron cell_polyhedron(const TropicalLinearSystem& system,
                                   const CellPattern& pattern) {
  if (pattern.size() != system.equations.size())
    throw std::invalid_argument("cell_polyhedron: pattern length mismatch");
  RationalPolyhedron P;
  P.D = static_cast<int>(system.window.var_count());
  for (std::size_t e = 0; e < pattern.size(); ++e) {
    const auto& terms = system.equations[e].terms;
    auto [p, q] = pattern[e];
    if (p == q || p < 0 || q < 0 || p >= static_cast<int>(terms.size()) ||
        q >= static_cast<int>(terms.size()))
      throw std::invalid_argument("cell_polyhedron: invalid pair");
    LinearForm eq;
    eq.coeffs.assign(P.D, Rat(0));
    eq.coeffs[terms[p].var] += 1;
    eq.coeffs[terms[q].var] -= 1;
    eq.constant = terms[p].c - terms[q].c;
    P.equalities.push_back(std::move(eq));
    for (int r = 0; r < static_cast<int>(terms.size()); ++r) {
      if (r == p || r == q) continue;
      LinearForm ineq;
      ineq.coeffs.assign(P.D, Rat(0));
      ineq.coeffs[terms[r].var] += 1;
      ineq.coeffs[terms[p].var] -= 1;
      ineq.constant = terms[r].c - terms[p].c;
      P.inequalities.push_back(std::move(ineq));
    }
  }
  return P;
}

namespace {

bool uniform_constants(const TropicalLinearSystem& sys) {
  for (const auto& eq : sys.equations)
    for (const auto& t : eq.terms)
      if (t.c != eq.terms[0].c) return false;
  return true;
}

// Iterative Tarjan SCC count over an adjacency list.
int scc_count(int V, const std::vector<std::vector<int>>& adj) {
  std::vector<int> index(V, -1), low(V, 0), on(V, 0), call_stack, stack;
  std::vector<std::size_t> child(V, 0);
  int next = 0, comps = 0;
  for (int s = 0; s < V; ++s) {
    if (index[s] >= 0) continue;
    call_stack.push_back(s);
    while (!call_stack.empty()) {
      int v = call_stack.back();
      if (index[v] < 0) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on[v] = 1;
      }
      bool descended = false;
      while (child[v] < adj[v].size()) {
        int w = adj[v][child[v]++];
        if (index[w] < 0) {
          call_stack.push_back(w);
          descended = true;
          break;
        }
        if (on[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      call_stack.pop_back();
      if (!call_stack.empty())
        low[call_stack.back()] = std::min(low[call_stack.back()], low[v]);
      if (low[v] == index[v]) {
        ++comps;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on[w] = 0;
          if (w == v) break;
        }
      }
    }
  }
  return comps;
}

// Shared coordination between (possibly parallel) search workers.
struct Shared {
  std::atomic<long long> incumbent{-1};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<bool> budget_hit{false};
  std::uint64_t max_cells;
  std::mutex witness_mu;
  std::optional<CellPattern> witness;

  void offer(long long dim, const CellPattern& pattern) {
    {
      std::lock_guard<std::mutex> lock(witness_mu);
      if (dim > best_recorded) {
        best_recorded = dim;
        witness = pattern;
      }
    }
    long long cur = incumbent.load();
    while (dim > cur && !incumbent.compare_exchange_weak(cur, dim)) {
    }
  }

  long long best_recorded = -1;
};

class Searcher {
 public:
  Searcher(const TropicalLinearSystem& sys, const std::vector<int>& order,
           bool zero_mode, Shared& shared)
      : sys_(sys), order_(order), zero_mode_(zero_mode), shared_(shared) {
    D_ = static_cast<int>(sys.window.var_count());
    choice_.assign(order.size(), {0, 0});
    parent_.resize(D_);
    for (int i = 0; i < D_; ++i) parent_[i] = i;
    size_.assign(D_, 1);
    pot_.assign(D_, Rat(0));
    if (zero_mode_) adj_.assign(D_, {});
  }

  // Explores the subtree below the root where equation order_[0] is assigned
  // `root_pair`; with no equations the single empty pattern is evaluated.
  void run(std::optional<std::pair<int, int>> root_pair) {
    if (order_.empty()) {
      shared_.offer(D_, {});
      ++shared_.explored;
      return;
    }
    descend(0, *root_pair);
  }

 private:
  struct Undo {
    int merged_root = -1;         // child root attached by the union, -1 if none
    std::size_t edge_mark = 0;    // zero-mode: edge stack size before this level
  };

  void descend(std::size_t level, std::pair<int, int> pair) {
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return;
    if (shared_.explored.fetch_add(1) + 1 > shared_.max_cells) {
      shared_.explored.fetch_sub(1);  // the rejected cell was not explored
      shared_.budget_hit.store(true);
      return;
    }
    const auto& terms = sys_.equations[order_[level]].terms;
    choice_[level] = pair;

    Undo undo;
    undo.edge_mark = edges_.size();
    bool consistent = apply_equality(terms, pair, undo);
    if (consistent && zero_mode_) apply_zero_edges(terms, pair);

    if (consistent) {
      long long bound = zero_mode_ ? partial_scc_bound() : D_ - rank_;
      if (bound <= shared_.incumbent.load(std::memory_order_relaxed)) {
        consistent = false;
        ++shared_.pruned;
      } else if (level + 1 == order_.size()) {
        evaluate_leaf(bound);
      } else {
        branch(level + 1);
      }
    } else {
      ++shared_.pruned;
    }
    revert(undo);
  }

  void branch(std::size_t level) {
    const int m = static_cast<int>(sys_.equations[order_[level]].terms.size());
    for (int p = 0; p < m && !shared_.budget_hit.load(std::memory_order_relaxed); ++p)
      for (int q = p + 1; q < m; ++q) descend(level, {p, q});
  }

  void evaluate_leaf(long long zero_mode_dim) {
    long long dim;
    if (zero_mode_) {
      dim = zero_mode_dim;  // the partial bound is exact once all equations apply
    } else {
      dim = affine_dim(cell_polyhedron(sys_, full_pattern()));
    }
    if (dim > shared_.incumbent.load(std::memory_order_relaxed))
      shared_.offer(dim, full_pattern());
  }

  CellPattern full_pattern() const {
    CellPattern pattern(sys_.equations.size());
    for (std::size_t i = 0; i < order_.size(); ++i) pattern[order_[i]] = choice_[i];
    return pattern;
  }

  // --- union-find with potentials (u_i = u_root + pot_i), no path
  // compression so that single unions undo in O(1).
  int find(int v, Rat& pot) const {
    pot = 0;
    while (parent_[v] != v) {
      pot += pot_[v];
      v = parent_[v];
    }
    return v;
  }

  bool apply_equality(const std::vector<LinTerm>& terms, std::pair<int, int> pair,
                      Undo& undo) {
    // u_p + c_p = u_q + c_q
    Rat pot_p, pot_q;
    int rp = find(static_cast<int>(terms[pair.first].var), pot_p);
    int rq = find(static_cast<int>(terms[pair.second].var), pot_q);
    Rat delta = terms[pair.second].c - terms[pair.first].c;  // u_p - u_q
    if (rp == rq) return pot_p - pot_q == delta;
    if (size_[rp] < size_[rq]) {
      std::swap(rp, rq);
      std::swap(pot_p, pot_q);
      delta = -delta;
    }
    // attach rq under rp: u_rq = u_rp + (pot_p - delta - pot_q)
    parent_[rq] = rp;
    pot_[rq] = pot_p - delta - pot_q;
    size_[rp] += size_[rq];
    undo.merged_root = rq;
    ++rank_;
    return true;
  }

  void apply_zero_edges(const std::vector<LinTerm>& terms, std::pair<int, int> pair) {
    auto add = [&](int from, int to) {
      adj_[from].push_back(to);
      edges_.push_back(from);
    };
    int up = static_cast<int>(terms[pair.first].var);
    int uq = static_cast<int>(terms[pair.second].var);
    add(up, uq);
    add(uq, up);
    for (int r = 0; r < static_cast<int>(terms.size()); ++r) {
      if (r == pair.first || r == pair.second) continue;
      add(up, static_cast<int>(terms[r].var));  // u_p <= u_r
    }
  }

  long long partial_scc_bound() const { return scc_count(D_, adj_); }

  void revert(const Undo& undo) {
    if (undo.merged_root >= 0) {
      size_[parent_[undo.merged_root]] -= size_[undo.merged_root];
      parent_[undo.merged_root] = undo.merged_root;
      pot_[undo.merged_root] = 0;
      --rank_;
    }
    while (edges_.size() > undo.edge_mark) {
      adj_[edges_.back()].pop_back();
      edges_.pop_back();
    }
  }

  const TropicalLinearSystem& sys_;
  std::vector<int> order_;
  bool zero_mode_;
  Shared& shared_;
  int D_ = 0;
  long long rank_ = 0;
  std::vector<std::pair<int, int>> choice_;
  mutable std::vector<int> parent_;
  std::vector<long long> size_;
  std::vector<Rat> pot_;
  std::vector<std::vector<int>> adj_;  // zero-mode inequality digraph
  std::vector<int> edges_;             // stack of edge sources for undo
};

}  // namespace

DimResult dim_prevariety(const TropicalLinearSystem& system, const SearchBudget& budget) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<int> order(system.equations.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return system.equations[a].terms.size() < system.equations[b].terms.size();
  });
  const bool zero_mode = uniform_constants(system);

  Shared shared;
  shared.max_cells = budget.max_cells;

  if (order.empty()) {
    Searcher s(system, order, zero_mode, shared);
    s.run(std::nullopt);
  } else {
    const int m0 = static_cast<int>(system.equations[order[0]].terms.size());
    std::vector<std::pair<int, int>> roots;
    for (int p = 0; p < m0; ++p)
      for (int q = p + 1; q < m0; ++q) roots.push_back({p, q});

    const int workers = std::max(1, std::min<int>(budget.workers,
                                                  static_cast<int>(roots.size())));
    if (workers == 1) {
      Searcher s(system, order, zero_mode, shared);
      for (const auto& r : roots) s.run(r);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          Searcher s(system, order, zero_mode, shared);
          for (std::size_t i = next.fetch_add(1); i < roots.size();
               i = next.fetch_add(1))
            s.run(roots[i]);
        });
      for (auto& t : pool) t.join();
    }
  }

  DimResult res;
  res.dim = shared.incumbent.load();
  res.witness_pattern = shared.witness;
  res.cells_explored = shared.explored.load();
  res.cells_pruned = shared.pruned.load();
  res.complete = !shared.budget_hit.load();
  res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return res;
}

ContainsResult contains_polyhedron(const TropicalLinearSystem& system,
                                   const RationalPolyhedron& W,
                                   const std::vector<std::pair<int, int>>* pair_hints) {
  if (W.D != system.window.var_count())
    throw std::invalid_argument("contains_polyhedron: ambient dimension mismatch");
  if (!feasible(W)) return {true, false};

  auto diff_form = [&](const LinTerm& a, const LinTerm& b) {
    LinearForm f;
    f.coeffs.assign(W.D, Rat(0));
    f.coeffs[a.var] += 1;
    f.coeffs[b.var] -= 1;
    f.constant = a.c - b.c;
    return f;
  };
  auto max_is_zero = [&](const LinearForm& f) {
    MaxOutcome m = maximize(W, f);
    return m.status == LpStatus::Optimal && m.value == 0;
  };
  auto never_positive = [&](const LinearForm& f) {
    MaxOutcome m = maximize(W, f);
    return m.status == LpStatus::Optimal && m.value <= 0;
  };

  for (std::size_t e = 0; e < system.equations.size(); ++e) {
    const auto& terms = system.equations[e].terms;
    const int m = static_cast<int>(terms.size());
    std::vector<std::pair<int, int>> candidates;
    if (pair_hints) {
      candidates.push_back((*pair_hints)[e]);
    } else {
      for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) candidates.push_back({p, q});
    }
    bool ok = false;
    for (auto [p, q] : candidates) {
      if (!max_is_zero(diff_form(terms[p], terms[q])) ||
          !max_is_zero(diff_form(terms[q], terms[p])))
        continue;
      bool dominated = true;
      for (int r = 0; r < m && dominated; ++r) {
        if (r == p || r == q) continue;
        dominated = never_positive(diff_form(terms[p], terms[r]));
      }
      if (dominated) {
        ok = true;
        break;
      }
    }
    if (ok) continue;

    // Exact fallback: the equation holds on all of W iff no term can be the
    // strictly unique minimizer anywhere on W. For each term p maximize the
    // margin delta subject to c_r + u_r - c_p - u_p >= delta for all r != p;
    // a positive maximum (or unboundedness) exhibits a violating point.
    RationalPolyhedron Wd;  // W x R_delta
    Wd.D = W.D + 1;
    for (const auto& f : W.equalities) {
      LinearForm g = f;
      g.coeffs.push_back(Rat(0));
      Wd.equalities.push_back(std::move(g));
    }
    for (const auto& f : W.inequalities) {
      LinearForm g = f;
      g.coeffs.push_back(Rat(0));
      Wd.inequalities.push_back(std::move(g));
    }
    for (int p = 0; p < m && !ok; ++p) {
      RationalPolyhedron L = Wd;
      for (int r = 0; r < m; ++r) {
        if (r == p) continue;
        LinearForm f = diff_form(terms[r], terms[p]);
        f.coeffs.push_back(Rat(-1));
        L.inequalities.push_back(std::move(f));
      }
      LinearForm objective;
      objective.coeffs.assign(Wd.D, Rat(0));
      objective.coeffs[W.D] = 1;
      objective.constant = 0;
      MaxOutcome margin = maximize(L, objective);
      if (margin.status == LpStatus::Unbounded ||
          (margin.status == LpStatus::Optimal && margin.value > 0))
        return {false, false};
    }
  }
  return {true, false};
}

std::vector<SubWindow> uniform_partition(int n, long long N, long long q) {
  if (q < 1 || q > N) throw std::invalid_argument("uniform_partition: bad side");
  const long long reach = q * (N / q);
  std::vector<SubWindow> parts;
  // q-blocks over the aligned region, unit cells elsewhere.
  auto emit = [&](long long side, std::vector<long long> at) {
    parts.push_back({side, std::move(at)});
  };
  std::vector<long long> k(n, 0);
  while (true) {
    bool aligned = true;
    for (int i = 0; i < n; ++i)
      if (k[i] >= reach) aligned = false;
    if (aligned) {
      bool is_block_corner = true;
      for (int i = 0; i < n; ++i)
        if (k[i] % q != 0) is_block_corner = false;
      if (is_block_corner) emit(q, k);
    } else {
      emit(1, k);
    }
    int i = 0;
    while (i < n && ++k[i] == N) k[i++] = 0;
    if (i == n) break;
  }
  return parts;
}

SubadditivityReport subadditivity_audit(const TropicalPolynomial& f, long long N,
                                        const std::vector<SubWindow>& partition,
                                        std::optional<long long> fekete_q,
                                        const SearchBudget& budget) {
  const int n = f.n();
  Window w{n, N};

  // Verify the sub-windows tile T_N exactly once.
  std::vector<char> covered(w.var_count(), 0);
  for (const auto& part : partition) {
    if (static_cast<int>(part.corner.size()) != n || part.q < 1)
      throw std::invalid_argument("subadditivity_audit: malformed sub-window");
    std::vector<long long> k(n, 0);
    while (true) {
      std::vector<long long> at(n);
      for (int i = 0; i < n; ++i) at[i] = part.corner[i] + k[i];
      if (!w.contains(at))
        throw std::invalid_argument("subadditivity_audit: sub-window leaves the grid");
      char& c = covered[w.flatten(at)];
      if (c) throw std::invalid_argument("subadditivity_audit: overlapping sub-windows");
      c = 1;
      int i = 0;
      while (i < n && ++k[i] == part.q) k[i++] = 0;
      if (i == n) break;
    }
  }
  for (char c : covered)
    if (!c) throw std::invalid_argument("subadditivity_audit: partition does not cover the grid");

  SubadditivityReport report;
  std::map<long long, long long> dim_cache;
  auto dim_for = [&](long long side) {
    auto it = dim_cache.find(side);
    if (it != dim_cache.end()) return it->second;
    DimResult r = dim_prevariety(linearize_polynomial(f, side), budget);
    if (!r.complete)
      throw std::runtime_error("subadditivity_audit: budget exhausted");
    dim_cache[side] = r.dim;
    return r.dim;
  };

  report.dim_N = dim_for(N);
  long long sum = 0;
  for (const auto& part : partition) {
    long long d = dim_for(part.q);
    report.dims_q.push_back(d);
    sum += d;
  }
  report.subadditive = report.dim_N <= sum;

  if (fekete_q) {
    const long long q = *fekete_q;
    long long blocks = 1, aligned = 1, total = 1;
    for (int i = 0; i < n; ++i) {
      blocks *= N / q;
      aligned *= q * (N / q);
      total *= N;
    }
    report.fekete_bound = blocks * dim_for(q) + total - aligned;
    report.fekete_holds = report.dim_N <= report.fekete_bound;
  }
  return report;
}

}  // namespace tropent
