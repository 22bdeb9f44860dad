#include "tropent/entropy.hpp"

#include <stdexcept>
#include <utility>

namespace tropent {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long flat(long long x, long long y, long long N) { return x + y * N; }

LinearForm unit(int D, long long var, Rat constant = Rat(0)) {
  LinearForm f;
  f.coeffs.assign(D, Rat(0));
  f.coeffs[var] = 1;
  f.constant = std::move(constant);
  return f;
}

LinearForm difference(int D, long long var_pos, long long var_neg) {
  LinearForm f;
  f.coeffs.assign(D, Rat(0));
  f.coeffs[var_pos] = 1;
  f.coeffs[var_neg] = -1;
  f.constant = 0;
  return f;
}

std::vector<std::pair<int, int>> hints_by_predicate(
    const TropicalLinearSystem& system, bool (*keep)(long long x, long long y)) {
  std::vector<std::pair<int, int>> hints;
  for (const auto& eq : system.equations) {
    int first = -1, second = -1;
    for (std::size_t i = 0; i < eq.terms.size() && second < 0; ++i) {
      auto k = system.window.unflatten(eq.terms[i].var);
      if (!keep(k[0], k[1])) continue;
      if (first < 0)
        first = static_cast<int>(i);
      else if (eq.terms[i].c == eq.terms[first].c)
        second = static_cast<int>(i);
    }
    if (second < 0) { first = 0; second = 1; }  // let the check fail loudly
    hints.push_back({first, second});
  }
  return hints;
}

}  // namespace

WitnessFamily even_column_family() {
  WitnessFamily fam;
  fam.name = "even-column";
  fam.asymptotic_ratio = Rat(1, 2);
  fam.claimed_dim = [](long long N) { return N * (N / 2); };
  fam.build = [](long long N) {
    if (N < 1) throw std::invalid_argument("even-column: N must be positive");
    RationalPolyhedron P;
    P.D = static_cast<int>(N * N);
    for (long long y = 0; y < N; ++y)
      for (long long x = 0; x < N; ++x) {
        if (x % 2 == 0)
          P.equalities.push_back(unit(P.D, flat(x, y, N)));
        else
          P.inequalities.push_back(unit(P.D, flat(x, y, N)));
      }
    return P;
  };
  fam.hints = [](const TropicalLinearSystem& system) {
    return hints_by_predicate(system, [](long long x, long long) { return x % 2 == 0; });
  };
  return fam;
}

WitnessFamily concave_column_family() {
  WitnessFamily fam;
  fam.name = "concave-column";
  fam.asymptotic_ratio = Rat(0);
  fam.claimed_dim = [](long long N) { return N; };
  fam.build = [](long long N) {
    if (N < 1) throw std::invalid_argument("concave-column: N must be positive");
    RationalPolyhedron P;
    P.D = static_cast<int>(N * N);
    // u(x,y) = c(x) with c concave on {0..N-1}.
    for (long long y = 1; y < N; ++y)
      for (long long x = 0; x < N; ++x)
        P.equalities.push_back(difference(P.D, flat(x, y, N), flat(x, 0, N)));
    for (long long x = 1; x + 1 < N; ++x) {
      LinearForm f;
      f.coeffs.assign(P.D, Rat(0));
      f.coeffs[flat(x, 0, N)] = 2;
      f.coeffs[flat(x - 1, 0, N)] = -1;
      f.coeffs[flat(x + 1, 0, N)] = -1;
      f.constant = 0;
      P.inequalities.push_back(f);
    }
    return P;
  };
  // Column-constant solutions tie any two terms in the same column.
  fam.hints = [](const TropicalLinearSystem& system) {
    std::vector<std::pair<int, int>> hints;
    for (const auto& eq : system.equations) {
      int first = -1, second = -1;
      for (std::size_t i = 0; i < eq.terms.size() && second < 0; ++i)
        for (std::size_t j = i + 1; j < eq.terms.size() && second < 0; ++j) {
          auto ki = system.window.unflatten(eq.terms[i].var);
          auto kj = system.window.unflatten(eq.terms[j].var);
          if (ki[0] == kj[0] && eq.terms[i].c == eq.terms[j].c) {
            first = static_cast<int>(i);
            second = static_cast<int>(j);
          }
        }
      if (second < 0) { first = 0; second = 1; }
      hints.push_back({first, second});
    }
    return hints;
  };
  return fam;
}

WitnessFamily diagonal_family() {
  WitnessFamily fam;
  fam.name = "diagonal";
  fam.asymptotic_ratio = Rat(0);
  fam.claimed_dim = [](long long N) { return N + 1; };
  fam.build = [](long long N) {
    if (N < 2) throw std::invalid_argument("diagonal: N must be at least 2");
    RationalPolyhedron P;
    P.D = static_cast<int>(N * N);
    const long long ref = flat(1, 0, N);
    for (long long y = 0; y < N; ++y)
      for (long long x = 0; x < N; ++x) {
        long long v = flat(x, y, N);
        if (x == y)
          P.inequalities.push_back(difference(P.D, v, ref));
        else if (v != ref)
          P.equalities.push_back(difference(P.D, v, ref));
      }
    return P;
  };
  fam.hints = [](const TropicalLinearSystem& system) {
    return hints_by_predicate(system, [](long long x, long long y) { return x != y; });
  };
  return fam;
}

EntropySequence entropy_upper(const std::vector<TropicalPolynomial>& gens,
                              long long N_max, const SearchBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("entropy_upper: no generators");
  const int n = gens[0].n();
  EntropySequence seq;
  for (long long N = 1; N <= N_max; ++N) {
    const long long total = ipow(N, n);
    TropicalLinearSystem system = linearize_family(gens, N);
    UpperEntry entry;
    entry.N = N;
    if (system.equations.empty()) {
      entry.dim = total;
      entry.ratio = Rat(1);
      entry.status = EntryStatus::EmptyWindow;
    } else {
      DimResult r = dim_prevariety(system, budget);
      entry.dim = r.dim;
      entry.ratio = Rat(r.dim) / Rat(total);
      entry.status = r.complete ? EntryStatus::Complete : EntryStatus::Partial;
    }
    seq.entries.push_back(std::move(entry));
  }
  for (const auto& e : seq.entries)
    if (e.status == EntryStatus::Complete && (!seq.upper || e.ratio < *seq.upper))
      seq.upper = e.ratio;
  return seq;
}

std::optional<long long> witness_lower(const TropicalLinearSystem& target,
                                       const WitnessFamily& family, long long N) {
  if (target.window.N != N)
    throw std::invalid_argument("witness_lower: window size mismatch");
  RationalPolyhedron W = family.build(N);
  if (W.D != target.window.var_count())
    throw std::invalid_argument("witness_lower: ambient dimension mismatch");
  std::vector<std::pair<int, int>> hints;
  const std::vector<std::pair<int, int>>* hints_ptr = nullptr;
  if (family.hints) {
    hints = family.hints(target);
    hints_ptr = &hints;
  }
  ContainsResult c = contains_polyhedron(target, W, hints_ptr);
  if (!c.contained) return std::nullopt;
  return affine_dim(W);
}

EntropyBracket entropy_bracket(const TropicalPolynomial& f, long long N_max,
                               const std::vector<WitnessFamily>& families,
                               const SearchBudget& budget) {
  EntropyBracket bracket;
  bracket.target = "U_N";
  bracket.lower = Rat(0);
  bracket.lower_witness = "none";
  bracket.upper_sequence = entropy_upper({f}, N_max, budget);
  bracket.upper = bracket.upper_sequence.upper;

  const int n = f.n();
  for (const auto& fam : families) {
    if (!bracket.lower_witness.empty() && bracket.lower_witness != "none" &&
        fam.asymptotic_ratio <= bracket.lower)
      continue;
    bool verified_any = false, failed = false;
    for (long long N = 1; N <= N_max && !failed; ++N) {
      TropicalLinearSystem system = linearize_polynomial(f, N);
      if (system.equations.empty()) continue;  // trivial window, nothing to certify
      std::optional<long long> d;
      try {
        d = witness_lower(system, fam, N);
      } catch (const std::invalid_argument&) {
        continue;  // family undefined at this N
      }
      if (!d || *d < fam.claimed_dim(N)) {
        failed = true;
      } else {
        verified_any = true;
        // Cross-check against the computed dimension when available.
        const auto& e = bracket.upper_sequence.entries[N - 1];
        if (e.status == EntryStatus::Complete && *d > e.dim) failed = true;
      }
    }
    (void)n;
    if (verified_any && !failed) {
      bracket.lower = fam.asymptotic_ratio;
      bracket.lower_witness = fam.name;
      bracket.lower_is_asymptotic = true;
    }
  }
  return bracket;
}

}  // namespace tropent
