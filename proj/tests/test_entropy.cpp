#include <doctest.h>

#include "tropent/entropy.hpp"

using namespace tropent;

namespace {

TropicalPolynomial f4() {
  return TropicalPolynomial(
      2, {{Rat(0), {0, 0}}, {Rat(0), {1, 0}}, {Rat(0), {0, 1}}, {Rat(0), {1, 1}}});
}

}  // namespace

TEST_CASE("witness catalogue matches its claimed dimensions") {
  for (long long N = 1; N <= 8; ++N) {
    CHECK(affine_dim(even_column_family().build(N)) == N * (N / 2));
    CHECK(affine_dim(concave_column_family().build(N)) == N);
    if (N >= 2) CHECK(affine_dim(diagonal_family().build(N)) == N + 1);
  }
  CHECK_THROWS_AS(diagonal_family().build(1), std::invalid_argument);
}

TEST_CASE("even-column witness verifies against the unit-square system") {
  WitnessFamily fam = even_column_family();
  for (long long N = 2; N <= 8; ++N) {
    TropicalLinearSystem sys = linearize_polynomial(f4(), N);
    std::optional<long long> d = witness_lower(sys, fam, N);
    REQUIRE(d.has_value());
    CHECK(*d == N * (N / 2));
  }
}

TEST_CASE("diagonal witness verifies against the radical family system") {
  WitnessFamily fam = diagonal_family();
  for (long long N = 3; N <= 5; ++N) {
    TropicalLinearSystem sys = linearize_family(curve_radical_generators(f4(), N), N);
    std::optional<long long> d = witness_lower(sys, fam, N);
    REQUIRE(d.has_value());
    CHECK(*d == N + 1);
  }
}

TEST_CASE("concave-column witness verifies against the radical family system") {
  WitnessFamily fam = concave_column_family();
  for (long long N = 2; N <= 5; ++N) {
    TropicalLinearSystem sys = linearize_family(curve_radical_generators(f4(), N), N);
    std::optional<long long> d = witness_lower(sys, fam, N);
    REQUIRE(d.has_value());
    CHECK(*d == N);
  }
}

TEST_CASE("upper sequence for the unit-square polynomial") {
  EntropySequence seq = entropy_upper({f4()}, 4);
  REQUIRE(seq.entries.size() == 4);
  CHECK(seq.entries[0].status == EntryStatus::EmptyWindow);
  CHECK(seq.entries[0].dim == 1);
  CHECK(seq.entries[1].dim == 3);
  CHECK(seq.entries[1].ratio == Rat(3, 4));
  CHECK(seq.entries[2].dim == 7);
  CHECK(seq.entries[2].ratio == Rat(7, 9));
  CHECK(seq.entries[3].dim == 11);
  CHECK(seq.entries[3].ratio == Rat(11, 16));
  REQUIRE(seq.upper.has_value());
  CHECK(*seq.upper == Rat(11, 16));
  // Upper ratios never drop below the certified asymptotic 1/2.
  for (const auto& e : seq.entries) CHECK(e.ratio >= Rat(1, 2));
}

TEST_CASE("upper sequence for a forcing univariate polynomial") {
  TropicalPolynomial uni(1, {{Rat(0), {1}}, {Rat(0), {2}}});
  EntropySequence seq = entropy_upper({uni}, 6);
  REQUIRE(seq.entries.size() == 6);
  CHECK(seq.entries[0].status == EntryStatus::EmptyWindow);
  for (int i = 1; i < 6; ++i) {
    CHECK(seq.entries[i].dim == 1);
    CHECK(seq.entries[i].ratio == Rat(1, i + 1));
    CHECK(seq.entries[i].status == EntryStatus::Complete);
  }
  CHECK(*seq.upper == Rat(1, 6));
}

TEST_CASE("partial entries never contribute to the upper bound") {
  SearchBudget tiny;
  tiny.max_cells = 1;
  EntropySequence seq = entropy_upper({f4()}, 3, tiny);
  CHECK(seq.entries[1].status == EntryStatus::Partial);
  CHECK(seq.entries[2].status == EntryStatus::Partial);
  CHECK(!seq.upper.has_value());
}

TEST_CASE("bracket combines both sides") {
  EntropyBracket bracket = entropy_bracket(
      f4(), 3, {even_column_family(), concave_column_family(), diagonal_family()});
  CHECK(bracket.lower == Rat(1, 2));
  CHECK(bracket.lower_witness == "even-column");
  CHECK(bracket.lower_is_asymptotic);
  REQUIRE(bracket.upper.has_value());
  CHECK(*bracket.upper == Rat(3, 4));
  CHECK(bracket.lower <= *bracket.upper);
}

TEST_CASE("bracket without applicable witnesses reports a zero lower bound") {
  TropicalPolynomial uni(1, {{Rat(0), {1}}, {Rat(0), {2}}});
  EntropyBracket bracket = entropy_bracket(uni, 4, {});
  CHECK(bracket.lower == Rat(0));
  CHECK(bracket.lower_witness == "none");
  CHECK(*bracket.upper == Rat(1, 4));
}
