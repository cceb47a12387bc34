#include <doctest.h>

#include <algorithm>
#include <set>

#include "ospkit/sparse_vector.hpp"
#include "ospkit/weights.hpp"
#include "prop.hpp"

using namespace ospkit;

namespace {

Weight w(std::vector<Rational> c) { return Weight(std::move(c)); }
const Rational h(1, 2);
const Rational mh(-1, 2);

/// Brute force: all elementary tensors x^k (x) v_j of the given weight with
/// |k| bounded by enough to cover the weight space.
std::vector<BasisVector> brute_force_weight_space(int n, const Weight& lambda, int deg_cap) {
  std::vector<BasisVector> out;
  for (const MultiIndex& k : multi_indices_up_to(n, deg_cap)) {
    for (int slot = 0; slot <= 2 * n; ++slot) {
      BasisVector b{k, slot};
      if (b.weight() == lambda) out.push_back(b);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("weights of elementary tensors") {
  // n = 2 throughout.
  CHECK(BasisVector{MultiIndex({1, 0}), 0}.weight() == w({Rational(3, 2), h}));
  CHECK(BasisVector{MultiIndex({0, 0}), 4}.weight() == w({h, mh}));
  CHECK(BasisVector{MultiIndex({0, 0}), 1}.weight() == w({Rational(3, 2), h}));
}

TEST_CASE("parity is additive") {
  CHECK(BasisVector{MultiIndex({0, 0}), 0}.parity() == 0);
  CHECK(BasisVector{MultiIndex({1, 0}), 0}.parity() == 1);
  CHECK(BasisVector{MultiIndex({0, 0}), 3}.parity() == 1);
  CHECK(BasisVector{MultiIndex({1, 2}), 4}.parity() == 0);
  for (const MultiIndex& k : multi_indices_up_to(3, 4)) {
    for (int slot = 0; slot <= 6; ++slot) {
      BasisVector b{k, slot};
      CHECK(b.parity() == (k.degree() + (slot == 0 ? 0 : 1)) % 2);
    }
  }
}

TEST_CASE("classify") {
  WeightClass c1 = classify(w({h, mh}));
  CHECK(c1.kind == WeightClass::Kind::lambda_j);
  CHECK(c1.j == 2);

  WeightClass c2 = classify(w({h, h}));
  CHECK(c2.kind == WeightClass::Kind::lambda_c);
  CHECK(c2.C == 0);

  WeightClass c3 = classify(w({Rational(3, 2), h}));
  CHECK(c3.kind == WeightClass::Kind::lambda_c);
  CHECK(c3.C == 1);
  CHECK(c3.positions == std::vector<int>{1});

  // Not weights of the module at all.
  CHECK_THROWS_AS(classify(w({Rational(1), h})), weight_error);
  CHECK_THROWS_AS(classify(w({Rational(-3, 2), h})), weight_error);
  CHECK_THROWS_AS(classify(w({mh, mh})), weight_error);
  // A weight of the module, but outside the two classes: its space is the
  // line through Z((1,0);4) and both intertwiners fix it.
  CHECK_THROWS_AS(classify(w({Rational(3, 2), mh})), weight_error);
}

TEST_CASE("basis_of matches the tabulated lists") {
  auto b1 = basis_of(w({h, mh}));
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == BasisVector{MultiIndex({0, 0}), 4});

  auto b2 = basis_of(w({h, h}));
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == BasisVector{MultiIndex({0, 0}), 0});
  CHECK(b2[1] == BasisVector{MultiIndex({1, 0}), 3});
  CHECK(b2[2] == BasisVector{MultiIndex({0, 1}), 4});

  auto b3 = basis_of(w({Rational(3, 2), h}));
  REQUIRE(b3.size() == 4);
  CHECK(b3[0] == BasisVector{MultiIndex({1, 0}), 0});
  CHECK(b3[1] == BasisVector{MultiIndex({2, 0}), 3});
  CHECK(b3[2] == BasisVector{MultiIndex({1, 1}), 4});
  CHECK(b3[3] == BasisVector{MultiIndex({0, 0}), 1});
}

TEST_CASE("basis_of agrees with brute force over the scan range") {
  for (int n = 1; n <= 3; ++n) {
    const int max_deg = 6;
    for (const Weight& lambda : enumerate_weights(n, max_deg)) {
      auto listed = basis_of(lambda);
      auto brute = brute_force_weight_space(n, lambda, max_deg + 2);
      CHECK(listed.size() == brute.size());
      std::set<BasisVector> a(listed.begin(), listed.end());
      std::set<BasisVector> b(brute.begin(), brute.end());
      CHECK(a == b);
      // Dimension formula: 1 for LambdaJ, C+n+1 otherwise.
      WeightClass cls = classify(lambda);
      size_t expected =
          cls.kind == WeightClass::Kind::lambda_j ? 1 : static_cast<size_t>(cls.C + n + 1);
      CHECK(listed.size() == expected);
    }
  }
}

TEST_CASE("enumerate_weights") {
  auto w10 = enumerate_weights(1, 0);
  REQUIRE(w10.size() == 2);
  CHECK(w10[0] == w({mh}));
  CHECK(w10[1] == w({h}));

  auto w20 = enumerate_weights(2, 0);
  REQUIRE(w20.size() == 3);
  CHECK(w20[0] == w({h, mh}));
  CHECK(w20[1] == w({mh, h}));
  CHECK(w20[2] == w({h, h}));

  auto w12 = enumerate_weights(1, 2);
  REQUIRE(w12.size() == 4);
  CHECK(w12[0] == w({mh}));
  CHECK(w12[1] == w({h}));
  CHECK(w12[2] == w({Rational(3, 2)}));
  CHECK(w12[3] == w({Rational(5, 2)}));

  auto w23 = enumerate_weights(2, 3);
  std::set<std::string> seen;
  for (const auto& lambda : w23) CHECK(seen.insert(lambda.to_string()).second);

  CHECK_THROWS_AS(enumerate_weights(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_weights(2, -1), std::invalid_argument);
}

TEST_CASE("sparse vector arithmetic") {
  const BasisVector y0{MultiIndex({0, 0}), 0};
  const BasisVector z1{MultiIndex({1, 0}), 3};
  SparseVector v = SparseVector::term(y0, QSqrt2(1));
  v.add_term(z1, QSqrt2::sqrt2());
  SparseVector u = v + v;
  CHECK(u.coefficient(y0) == QSqrt2(2));
  CHECK((u - v) == v);
  CHECK((v - v).is_zero());
  CHECK(v.scaled(QSqrt2(0)).is_zero());

  prop::Rng rng;
  for (int trial = 0; trial < 50; ++trial) {
    SparseVector a, b;
    for (int t = 0; t < 4; ++t) {
      a.add_term(BasisVector{MultiIndex({static_cast<int>(rng.range(0, 2)),
                                         static_cast<int>(rng.range(0, 2))}),
                             static_cast<int>(rng.range(0, 4))},
                 rng.qsqrt2());
      b.add_term(BasisVector{MultiIndex({static_cast<int>(rng.range(0, 2)),
                                         static_cast<int>(rng.range(0, 2))}),
                             static_cast<int>(rng.range(0, 4))},
                 rng.qsqrt2());
    }
    const QSqrt2 c = rng.qsqrt2();
    CHECK(a + b == b + a);
    CHECK((a + b).scaled(c) == a.scaled(c) + b.scaled(c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("sparse vector weight and normalization") {
  SparseVector v;
  v.add_term(BasisVector{MultiIndex({0, 0}), 0}, -QSqrt2::sqrt2());
  v.add_term(BasisVector{MultiIndex({1, 0}), 3}, QSqrt2(1));
  CHECK(v.weight().has_value());
  CHECK(*v.weight() == w({h, h}));
  // First coefficient in canonical (slot, k) order becomes 1.
  SparseVector norm = v.normalized();
  CHECK(norm.coefficient(BasisVector{MultiIndex({0, 0}), 0}) == QSqrt2(1));

  SparseVector mixed = v;
  mixed.add_term(BasisVector{MultiIndex({3, 0}), 0}, QSqrt2(1));
  CHECK(!mixed.weight().has_value());
}
