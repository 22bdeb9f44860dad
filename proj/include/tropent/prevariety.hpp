#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropent/linearize.hpp"
#include "tropent/polyhedra.hpp"

namespace tropent {

// Per equation, the unordered pair of term indices designated as joint
// minimizers. A pattern selects one ordinary polyhedron inside the
// prevariety; the union over all patterns is the prevariety itself.
using CellPattern = std::vector<std::pair<int, int>>;

struct DimResult {
  long long dim = -1;
  std::optional<CellPattern> witness_pattern;
  std::uint64_t cells_explored = 0;
  std::uint64_t cells_pruned = 0;
  bool complete = true;   // false when the budget ran out; dim is then only
                          // a lower bound
  long long elapsed_ms = 0;
};

struct SearchBudget {
  std::uint64_t max_cells = UINT64_MAX;
  int workers = 1;
};

// The ordinary polyhedron of one argmin-pair pattern: for each equation with
// chosen pair (p,q), c_p + u_p = c_q + u_q and c_p + u_p <= c_r + u_r for
// every other term r.
RationalPolyhedron cell_polyhedron(const TropicalLinearSystem& system,
                                   const CellPattern& pattern);

// Exact max of affine_dim(cell_polyhedron(system, pattern)) over all
// patterns, by depth-first branch and prune. The result is independent of
// exploration order; witness_pattern is any cell attaining it.
DimResult dim_prevariety(const TropicalLinearSystem& system,
                         const SearchBudget& budget = {});

struct ContainsResult {
  bool contained = false;
  // Retained for callers that distinguish "refuted via the pair criterion
  // only"; the margin fallback decides exactly, so a false `contained` with
  // false `unknown` is a definitive refutation.
  bool unknown = false;
};

// Exact containment of W in the prevariety of the system. Fast path per
// equation: some pair ties identically on W while no other term ever drops
// below it. Fallback: no term can be the strictly unique minimizer anywhere
// on W (one margin LP per term). Both paths are exact rational LPs.
ContainsResult contains_polyhedron(
    const TropicalLinearSystem& system, const RationalPolyhedron& W,
    const std::vector<std::pair<int, int>>* pair_hints = nullptr);

// One sub-window of a partition of T_N: side q placed with its lowest
// corner at `corner`.
struct SubWindow {
  long long q = 1;
  std::vector<long long> corner;
};

struct SubadditivityReport {
  long long dim_N = -1;
  std::vector<long long> dims_q;           // one per sub-window
  bool subadditive = false;                // dim_N <= sum dims_q
  // Fekete combination for the uniform tiling by side q:
  // dim_N <= floor(N/q)^n * dim_q + N^n - (q*floor(N/q))^n.
  std::optional<bool> fekete_holds;
  long long fekete_bound = -1;
};

// Computes all dimensions and checks the partition inequality; a non-tiling
// partition throws. When `fekete_q` is set the uniform-tiling consequence is
// checked as well.
SubadditivityReport subadditivity_audit(const TropicalPolynomial& f, long long N,
                                        const std::vector<SubWindow>& partition,
                                        std::optional<long long> fekete_q = std::nullopt,
                                        const SearchBudget& budget = {});

// The standard partition behind the Fekete argument: floor(N/q)^n subgrids
// of side q plus 1x...x1 remainder cells.
std::vector<SubWindow> uniform_partition(int n, long long N, long long q);

}  // namespace tropent
