#include <doctest.h>

#include <random>

#include "tropent/polyhedra.hpp"

using namespace tropent;

namespace {

LinearForm form(std::vector<Rat> coeffs, Rat constant) {
  return LinearForm{std::move(coeffs), std::move(constant)};
}

std::vector<Rat> random_coeffs(std::mt19937& rng, int D) {
  std::uniform_int_distribution<long long> c(-4, 4);
  std::vector<Rat> v;
  for (int i = 0; i < D; ++i) v.push_back(Rat(c(rng)));
  return v;
}

}  // namespace

TEST_CASE("maximize on a triangle") {
  // x >= 0, y >= 0, x + y <= 2.
  RationalPolyhedron P;
  P.D = 2;
  P.inequalities = {form({Rat(1), Rat(0)}, Rat(0)), form({Rat(0), Rat(1)}, Rat(0)),
                    form({Rat(-1), Rat(-1)}, Rat(2))};
  MaxOutcome best = maximize(P, form({Rat(1), Rat(2)}, Rat(0)));
  REQUIRE(best.status == LpStatus::Optimal);
  CHECK(best.value == Rat(4));
  CHECK(best.point == std::vector<Rat>{Rat(0), Rat(2)});

  MaxOutcome unbounded = maximize(P, form({Rat(0), Rat(-1)}, Rat(0)));
  CHECK(unbounded.status == LpStatus::Optimal);  // y >= 0 caps -y at 0
  CHECK(unbounded.value == Rat(0));

  RationalPolyhedron H;
  H.D = 2;
  H.inequalities = {form({Rat(1), Rat(0)}, Rat(0))};
  CHECK(maximize(H, form({Rat(1), Rat(0)}, Rat(0))).status == LpStatus::Unbounded);
}

TEST_CASE("equalities are eliminated exactly") {
  // x + y = 1, x - y = 0 -> single point (1/2, 1/2).
  RationalPolyhedron P;
  P.D = 2;
  P.equalities = {form({Rat(1), Rat(1)}, Rat(-1)), form({Rat(1), Rat(-1)}, Rat(0))};
  MaxOutcome r = maximize(P, form({Rat(3), Rat(1)}, Rat(5)));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(7));
  CHECK(r.point == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(affine_dim(P) == 0);

  P.equalities.push_back(form({Rat(0), Rat(0)}, Rat(1)));  // 1 = 0
  CHECK(!feasible(P));
  CHECK(affine_dim(P) == -1);
}

TEST_CASE("planted feasible systems are feasible") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> num(-6, 6);
  for (int t = 0; t < 100; ++t) {
    int D = 1 + t % 6;
    std::vector<Rat> x0;
    for (int i = 0; i < D; ++i) x0.push_back(Rat(num(rng), 1 + (t % 3)));
    RationalPolyhedron P;
    P.D = D;
    for (int r = 0; r < 2 * D; ++r) {
      LinearForm f{random_coeffs(rng, D), Rat(0)};
      Rat at = f.eval(x0);
      f.constant = -at + Rat(std::abs(num(rng)));  // f(x0) >= 0 by construction
      P.inequalities.push_back(std::move(f));
    }
    CHECK(feasible(P));
    CHECK(affine_dim(P) >= 0);
  }
}

TEST_CASE("planted Farkas-infeasible systems are infeasible") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long long> num(-5, 5);
  std::uniform_int_distribution<long long> pos(1, 4);
  for (int t = 0; t < 100; ++t) {
    int D = 1 + t % 6;
    RationalPolyhedron P;
    P.D = D;
    int k = 2 + t % 3;
    // lambda_1 f_1 + ... + lambda_k f_k == -1 with lambda_i > 0 makes the
    // system infeasible by Farkas; decoy constraints are free to add.
    std::vector<LinearForm> fs;
    std::vector<Rat> lambdas;
    LinearForm acc{std::vector<Rat>(D, Rat(0)), Rat(1)};  // need sum = -1
    for (int i = 0; i + 1 < k; ++i) {
      LinearForm f{random_coeffs(rng, D), Rat(num(rng))};
      Rat lam(pos(rng));
      for (int j = 0; j < D; ++j) acc.coeffs[j] += lam * f.coeffs[j];
      acc.constant += lam * f.constant;
      fs.push_back(std::move(f));
      lambdas.push_back(lam);
    }
    Rat lam(pos(rng));
    LinearForm last{std::vector<Rat>(D), Rat(0)};
    for (int j = 0; j < D; ++j) last.coeffs[j] = -acc.coeffs[j] / lam;
    last.constant = -acc.constant / lam;
    fs.push_back(std::move(last));
    for (auto& f : fs) P.inequalities.push_back(f);
    for (int r = 0; r < D; ++r)
      P.inequalities.push_back({random_coeffs(rng, D), Rat(num(rng) + 10)});
    CHECK(!feasible(P));
    CHECK(affine_dim(P) == -1);
  }
}

TEST_CASE("affine_dim of planted affine subspaces") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long long> num(-3, 3);
  for (int t = 0; t < 60; ++t) {
    int D = 2 + t % 5;
    int codim = 1 + t % D;
    RationalPolyhedron P;
    P.D = D;
    // codim independent equalities: x_i = affine function of the rest.
    for (int i = 0; i < codim; ++i) {
      LinearForm f{std::vector<Rat>(D, Rat(0)), Rat(num(rng))};
      f.coeffs[i] = 1;
      for (int j = codim; j < D; ++j) f.coeffs[j] = Rat(num(rng));
      P.equalities.push_back(std::move(f));
    }
    // Inequalities strictly satisfied at some point of the subspace keep the
    // affine hull intact: slack them at the origin-projected point.
    std::vector<Rat> x0(D, Rat(0));
    for (int i = 0; i < codim; ++i) x0[i] = -P.equalities[i].constant;
    for (int r = 0; r < 3; ++r) {
      LinearForm f{random_coeffs(rng, D), Rat(0)};
      f.constant = -f.eval(x0) + Rat(1 + (t % 2));
      P.inequalities.push_back(std::move(f));
    }
    CHECK(affine_dim(P) == D - codim);
  }
}

TEST_CASE("implicit equalities reduce the affine dimension") {
  // x >= 0 and -x >= 0 force x = 0 without an explicit equality.
  RationalPolyhedron P;
  P.D = 3;
  P.inequalities = {form({Rat(1), Rat(0), Rat(0)}, Rat(0)),
                    form({Rat(-1), Rat(0), Rat(0)}, Rat(0)),
                    form({Rat(0), Rat(1), Rat(1)}, Rat(5))};
  CHECK(affine_dim(P) == 2);

  P.inequalities.push_back(form({Rat(0), Rat(1), Rat(-1)}, Rat(0)));
  P.inequalities.push_back(form({Rat(0), Rat(-1), Rat(1)}, Rat(0)));
  CHECK(affine_dim(P) == 1);
}

TEST_CASE("difference systems agree with the generic route") {
  // Build difference-form systems and compare affine_dim against the same
  // polyhedron with an extra non-difference (but redundant) constraint that
  // forces the generic LP route.
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long long> num(-4, 4);
  std::uniform_int_distribution<int> var(0, 4);
  for (int t = 0; t < 80; ++t) {
    int D = 5;
    RationalPolyhedron P;
    P.D = D;
    for (int r = 0; r < 7; ++r) {
      int i = var(rng), j = var(rng);
      if (i == j) continue;
      LinearForm f{std::vector<Rat>(D, Rat(0)), Rat(num(rng))};
      f.coeffs[i] = 1;
      f.coeffs[j] = -1;
      if (r % 3 == 0)
        P.equalities.push_back(std::move(f));
      else
        P.inequalities.push_back(std::move(f));
    }
    long long fast = affine_dim(P);

    RationalPolyhedron Q = P;  // 2*(x_a - x_b) + c duplicates break the fast path
    for (const auto& f : P.inequalities) {
      LinearForm g = f;
      for (auto& c : g.coeffs) c *= 2;
      g.constant *= 2;
      Q.inequalities.push_back(std::move(g));
      break;
    }
    if (Q.inequalities.size() == P.inequalities.size()) continue;
    CHECK(fast == affine_dim(Q));
    CHECK(feasible(P) == feasible(Q));
  }
}

TEST_CASE("forms_rank") {
  std::vector<LinearForm> fs = {form({Rat(1), Rat(2), Rat(3)}, Rat(9)),
                                form({Rat(2), Rat(4), Rat(6)}, Rat(-1)),
                                form({Rat(0), Rat(1), Rat(0)}, Rat(0))};
  CHECK(forms_rank(fs, 3) == 2);
  CHECK(forms_rank({}, 3) == 0);
}
