#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropent/prevariety.hpp"

namespace tropent {

enum class EntryStatus { Complete, Partial, EmptyWindow };

struct UpperEntry {
  long long N = 0;
  long long dim = -1;      // for Partial entries only a lower bound on dim
  Rat ratio;               // dim / N^n
  EntryStatus status = EntryStatus::Complete;
};

struct EntropySequence {
  std::vector<UpperEntry> entries;
  // min over Complete entries; Partial and EmptyWindow entries are excluded
  // (a timed-out dim is a lower bound and proves nothing about the inf).
  std::optional<Rat> upper;
};

// A family of solution polyhedra, one per window size, certifying lower
// bounds dim >= claimed_dim(N) once containment is verified.
struct WitnessFamily {
  std::string name;
  std::function<RationalPolyhedron(long long N)> build;
  std::function<long long(long long N)> claimed_dim;
  // lim inf claimed_dim(N) / N^n; reported as an asymptotic claim only.
  Rat asymptotic_ratio;
  // Optional uniform argmin pair per equation for contains_polyhedron.
  std::function<std::vector<std::pair<int, int>>(const TropicalLinearSystem&)> hints;
};

struct EntropyBracket {
  std::string target;
  Rat lower;                        // 0 when no witness family verified
  std::string lower_witness;        // family name, flagged asymptotic
  bool lower_is_asymptotic = false;
  EntropySequence upper_sequence;
  std::optional<Rat> upper;
};

// dim(U_N)/N^n for N = 1..N_max against the system of f (or of a generator
// family). By Fekete subadditivity the limit equals the infimum, so every
// Complete entry is a valid upper bound on the entropy.
EntropySequence entropy_upper(const std::vector<TropicalPolynomial>& gens,
                              long long N_max, const SearchBudget& budget = {});

// Verified per-N lower bound: containment of the family polyhedron in the
// target system (sufficient criterion), then its affine dimension. Returns
// nothing when containment cannot be established.
std::optional<long long> witness_lower(const TropicalLinearSystem& target,
                                       const WitnessFamily& family, long long N);

// Combines the upper sequence with the best witness family whose containment
// verifies at every computed N.
EntropyBracket entropy_bracket(const TropicalPolynomial& f, long long N_max,
                               const std::vector<WitnessFamily>& families,
                               const SearchBudget& budget = {});

// The built-in planar witness catalogue.
// even_column: u(2x,y) = 0, u(2x+1,y) >= 0; dim N*floor(N/2); targets U_N of
//   a unit-square polynomial; asymptotic ratio 1/2.
// concave_column: u(x,y) = c(x) with c concave on the grid; dim N.
// diagonal: off-diagonal entries equal a common value, diagonal >= it;
//   dim N+1 (needs N >= 2).
WitnessFamily even_column_family();
WitnessFamily concave_column_family();
WitnessFamily diagonal_family();

}  // namespace tropent
