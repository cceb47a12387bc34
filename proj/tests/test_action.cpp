#include <doctest.h>

#include "ospkit/action.hpp"

using namespace ospkit;

namespace {

const QSqrt2 r2 = QSqrt2::sqrt2();
const QSqrt2 ir2 = QSqrt2::inv_sqrt2();

SparseVector unit(std::vector<int> k, int slot) {
  return SparseVector::unit(BasisVector{MultiIndex(std::move(k)), slot});
}

}  // namespace

TEST_CASE("standard matrices act as tabulated (n=2)") {
  const int n = 2;
  ExactMatrix raise1 = standard_matrix(Generator::odd_raise(1), n);
  // v_0 -> v_1 and v_{n+1} -> v_0.
  CHECK(raise1.at(1, 0) == QSqrt2(1));
  CHECK(raise1.at(0, 3) == QSqrt2(1));

  ExactMatrix lower1 = standard_matrix(Generator::odd_lower(1), n);
  CHECK(lower1.at(0, 1) == QSqrt2(1));    // v_1 -> v_0
  CHECK(lower1.at(3, 0) == QSqrt2(-1));   // v_0 -> -v_3

  ExactMatrix h1 = standard_matrix(Generator::cartan(1), n);
  CHECK(h1.at(1, 1) == QSqrt2(1));
  CHECK(h1.at(3, 3) == QSqrt2(-1));
}

TEST_CASE("standard matrices satisfy the membership constraints") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Generator> gens;
    for (int j = 1; j <= n; ++j) {
      gens.push_back(Generator::odd_raise(j));
      gens.push_back(Generator::odd_lower(j));
      gens.push_back(Generator::even_double(+1, j));
      gens.push_back(Generator::even_double(-1, j));
      gens.push_back(Generator::cartan(j));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        gens.push_back(Generator::even_pair(+1, i, j));
        gens.push_back(Generator::even_pair(-1, i, j));
        gens.push_back(Generator::mixed(i, j));
      }
    }
    for (const Generator& g : gens) {
      CHECK(satisfies_osp_constraints(standard_matrix(g, n), n));
    }
  }
}

TEST_CASE("generator labels round-trip") {
  const int n = 3;
  for (const char* label : {"X+1", "X-3", "X+1+2", "X-2-3", "X+2d1", "X-2d3", "X1-2", "H2"}) {
    CHECK(parse_generator(label, n).label() == label);
  }
  CHECK_THROWS_AS(parse_generator("X+4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator("Y+1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator("X+1-2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator("X+1junk", 3), std::invalid_argument);
}

TEST_CASE("oscillator images") {
  // n = 1: X_{+1} x^0 = (1/sqrt2) x.
  auto up = oscillator_apply(Generator::odd_raise(1), MultiIndex({0}));
  REQUIRE(up.size() == 1);
  CHECK(up.at(MultiIndex({1})) == ir2);

  CHECK(oscillator_apply(Generator::odd_lower(1), MultiIndex({0})).empty());

  // n = 2: X_{-2d1} x_1^2 = -(1/2) d_1^2 x_1^2 = -1.
  auto dd = oscillator_apply(Generator::even_double(-1, 1), MultiIndex({2, 0}));
  REQUIRE(dd.size() == 1);
  CHECK(dd.at(MultiIndex({0, 0})) == QSqrt2(-1));

  auto mixed = oscillator_apply(Generator::mixed(1, 2), MultiIndex({0, 3}));
  CHECK(mixed.at(MultiIndex({1, 2})) == QSqrt2(3));
}

TEST_CASE("tensor action on elementary tensors (n=2)") {
  const Action action(2);

  // X_{-1}(x_1 (x) v_0) = (1/sqrt2) 1 (x) v_0 + x_1 (x) v_3.
  SparseVector got = action.apply(Generator::odd_lower(1), unit({1, 0}, 0));
  SparseVector expected = unit({0, 0}, 0).scaled(ir2) + unit({1, 0}, 3);
  CHECK(got == expected);

  // X_{+1}(1 (x) v_0) = (1/sqrt2) x_1 (x) v_0 + 1 (x) v_1.
  got = action.apply(Generator::odd_raise(1), unit({0, 0}, 0));
  expected = unit({1, 0}, 0).scaled(ir2) + unit({0, 0}, 1);
  CHECK(got == expected);

  // X_{-1} annihilates w2 = 1 (x) v_0 + sqrt2 (x_1 (x) v_3 + x_2 (x) v_4).
  SparseVector w2 = unit({0, 0}, 0) + (unit({1, 0}, 3) + unit({0, 1}, 4)).scaled(r2);
  CHECK(action.apply(Generator::odd_lower(1), w2).is_zero());
  CHECK(action.apply(Generator::odd_lower(2), w2).is_zero());
}

TEST_CASE("bracket relations on sample vectors") {
  // The rescaled generators sqrt2 X_{+-j} satisfy the cubic relation with
  // coefficients (eps-xi), (eps-eta); for the realized operators those
  // coefficients are halved.
  const Action action(2);
  const Generator up1 = Generator::odd_raise(1);
  const Generator dn1 = Generator::odd_lower(1);

  for (const SparseVector& v : {unit({0, 0}, 0), unit({2, 1}, 3), unit({1, 0}, 1)}) {
    // [[X+1, X-1], X+1] = (1/2) * 2 X+1 = X+1.
    SparseVector inner_then = action.bracket(up1, dn1, action.apply(up1, v));
    SparseVector then_inner = action.apply(up1, action.bracket(up1, dn1, v));
    CHECK(inner_then - then_inner == action.apply(up1, v));

    // [[X+1, X+1], X-1] = (1/2) * (-4) X+1 = -2 X+1  (xi = eta = 1, eps = -1).
    SparseVector a = action.bracket(up1, up1, action.apply(dn1, v));
    SparseVector b = action.apply(dn1, action.bracket(up1, up1, v));
    CHECK(a - b == action.apply(up1, v).scaled(QSqrt2(-2)));

    // [H_1, X+1] = X+1 (root coordinate 1; exact, no rescaling involved).
    SparseVector c = action.bracket(Generator::cartan(1), up1, v);
    CHECK(c == action.apply(up1, v));

    // The inner bracket of the raising/lowering pair is the Cartan action.
    CHECK(action.bracket(up1, dn1, v) == action.apply(Generator::cartan(1), v));
  }
}

TEST_CASE("cartan eigenvalues and root shifts") {
  for (int n = 1; n <= 3; ++n) {
    const Action action(n);
    std::vector<Generator> gens;
    for (int j = 1; j <= n; ++j) {
      gens.push_back(Generator::odd_raise(j));
      gens.push_back(Generator::odd_lower(j));
      gens.push_back(Generator::even_double(+1, j));
      gens.push_back(Generator::even_double(-1, j));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        gens.push_back(Generator::even_pair(-1, i, j));
        gens.push_back(Generator::mixed(i, j));
      }
    }
    for (const MultiIndex& k : multi_indices_up_to(n, 3)) {
      for (int slot = 0; slot <= 2 * n; ++slot) {
        const BasisVector b{k, slot};
        const Weight lambda = b.weight();
        for (int j = 1; j <= n; ++j) {
          CHECK(action.apply(Generator::cartan(j), SparseVector::unit(b)) ==
                SparseVector::term(b, QSqrt2(lambda[j])));
        }
        for (const Generator& g : gens) {
          SparseVector image = action.apply(g, SparseVector::unit(b));
          if (image.is_zero()) continue;
          REQUIRE(image.weight().has_value());
          CHECK(*image.weight() == lambda.shifted(g.root(n)));
        }
      }
    }
  }
}

TEST_CASE("perturbed action breaks a bracket relation") {
  const Action broken(2, ActionPerturbation::flip_oscillator_of(Generator::odd_raise(1)));
  const Generator up1 = Generator::odd_raise(1);
  const Generator dn1 = Generator::odd_lower(1);
  const SparseVector v = unit({0, 0}, 0);
  SparseVector lhs = broken.bracket(up1, dn1, broken.apply(up1, v)) -
                     broken.apply(up1, broken.bracket(up1, dn1, v));
  CHECK(lhs != broken.apply(up1, v).scaled(QSqrt2(2)));
}
