#include <doctest.h>

#include "ospkit/singular.hpp"

using namespace ospkit;

namespace {

const QSqrt2 r2 = QSqrt2::sqrt2();

SparseVector unit(std::vector<int> k, int slot) {
  return SparseVector::unit(BasisVector{MultiIndex(std::move(k)), slot});
}

Weight w(std::vector<Rational> c) { return Weight(std::move(c)); }

}  // namespace

TEST_CASE("annihilated_at with the full positive set (n=2)") {
  const Action action(2);
  const AnnihilatorSpec full = AnnihilatorSpec::full_positive(2);

  SingularReport at_w1 = annihilated_at(action, full, w({Rational(1, 2), Rational(-1, 2)}));
  REQUIRE(at_w1.dimension == 1);
  CHECK(at_w1.basis[0] == unit({0, 0}, 4));

  SingularReport at_w2 = annihilated_at(action, full, w({Rational(1, 2), Rational(1, 2)}));
  REQUIRE(at_w2.dimension == 1);
  SparseVector w2 = unit({0, 0}, 0) + (unit({1, 0}, 3) + unit({0, 1}, 4)).scaled(r2);
  CHECK(at_w2.basis[0] == w2.normalized());

  SingularReport at_w3 = annihilated_at(action, full, w({Rational(3, 2), Rational(1, 2)}));
  CHECK(at_w3.dimension == 0);
}

TEST_CASE("scan totals") {
  CHECK(total_dimension(scan_singular(Action(2), 6, AnnihilatorSpec::full_positive(2))) == 2);
  CHECK(total_dimension(scan_singular(Action(1), 6, AnnihilatorSpec::full_positive(1))) == 3);
  // At n = 1 the odd-lowering kernel picks up the three-term vector too.
  CHECK(total_dimension(scan_singular(Action(1), 6, AnnihilatorSpec::minus_delta(1))) == 3);
  // For n >= 2 it does not: the kernel is spanned by the w1 family and w2.
  CHECK(total_dimension(scan_singular(Action(2), 6, AnnihilatorSpec::minus_delta(2))) == 3);
  CHECK(total_dimension(scan_singular(Action(3), 4, AnnihilatorSpec::minus_delta(3))) == 4);
}

TEST_CASE("the n=1 third singular vector") {
  const Action action(1);
  auto scan = scan_singular(action, 6, AnnihilatorSpec::full_positive(1));
  SparseVector w3;
  w3.add_term(BasisVector{MultiIndex({1}), 0}, -r2);
  w3.add_term(BasisVector{MultiIndex({0}), 1}, QSqrt2(1));
  w3.add_term(BasisVector{MultiIndex({2}), 2}, QSqrt2(1));
  bool found = false;
  for (const auto& r : scan) {
    if (r.lambda == w({Rational(3, 2)})) {
      REQUIRE(r.dimension == 1);
      CHECK(r.basis[0] == w3.normalized());
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("w3 annihilation pattern at n=2") {
  const Action action(2);
  SparseVector w31;
  w31.add_term(BasisVector{MultiIndex({1, 0}), 0}, -r2);
  w31.add_term(BasisVector{MultiIndex({0, 0}), 1}, QSqrt2(1));
  w31.add_term(BasisVector{MultiIndex({2, 0}), 3}, QSqrt2(1));
  // The three-term vector survives its own index but fails the others:
  // X_{-2} produces the uncancelled -sqrt2 x_1 (x) v_4 term, and the even
  // positive root vector X_{-1-2} hits it as well.
  CHECK(action.apply(Generator::odd_lower(1), w31).is_zero());
  CHECK(action.apply(Generator::even_double(-1, 1), w31).is_zero());
  SparseVector via_lower2 = action.apply(Generator::odd_lower(2), w31);
  CHECK(via_lower2 ==
        SparseVector::term(BasisVector{MultiIndex({1, 0}), 4}, -r2));
  CHECK(!action.apply(Generator::even_pair(-1, 1, 2), w31).is_zero());
}

TEST_CASE("delta-delta kernels match the five families (n=2 spots)") {
  const Action action(2);
  const AnnihilatorSpec dd = AnnihilatorSpec::delta_delta(2);

  // Weight of x_1 (x) v_0: families x_1 (x) v_0, x_1 sum x_j (x) v_{n+j}, 1 (x) v_1.
  SingularReport r = annihilated_at(action, dd, w({Rational(3, 2), Rational(1, 2)}));
  CHECK(r.dimension == 3);

  // Weight (1/2,-1/2) holds 1 (x) v_4 = the k_1 = 0 member of the v_{2n} family.
  r = annihilated_at(action, dd, w({Rational(1, 2), Rational(-1, 2)}));
  REQUIRE(r.dimension == 1);
  CHECK(r.basis[0] == unit({0, 0}, 4));

  LemmaSpanReport span2 = check_lemma_delta_delta(Action(2), 5);
  CHECK(span2.all_equal);
  LemmaSpanReport span3 = check_lemma_delta_delta(Action(3), 3);
  CHECK(span3.all_equal);
}

TEST_CASE("delta_delta_family_at matches hand lists") {
  auto fam = delta_delta_family_at(2, w({Rational(3, 2), Rational(1, 2)}));
  REQUIRE(fam.size() == 3);
  CHECK(fam[0] == unit({1, 0}, 0));
  CHECK(fam[1] == unit({2, 0}, 3) + unit({1, 1}, 4));
  CHECK(fam[2] == unit({0, 0}, 1));

  // Shadow (1,1): only the x_2 (x) v_1 - x_1 (x) v_2 member.
  auto fam2 = delta_delta_family_at(2, w({Rational(3, 2), Rational(3, 2)}));
  REQUIRE(fam2.size() == 1);
  CHECK(fam2[0] == unit({0, 1}, 1) - unit({1, 0}, 2));

  CHECK(delta_delta_family_at(2, w({Rational(1, 2), Rational(5, 2)})).empty());
}

TEST_CASE("annihilated_at rejects non-weights") {
  const Action action(2);
  CHECK_THROWS_AS(
      annihilated_at(action, AnnihilatorSpec::full_positive(2), w({Rational(1), Rational(0)})),
      weight_error);
}
