#include <doctest.h>

#include "ospkit/verify.hpp"

using namespace ospkit;

TEST_CASE("bracket suite passes at small sizes") {
  SuiteReport r1 = suite_brackets(Action(1), 4);
  CHECK(r1.passed());
  CHECK(r1.checks > 0);
  SuiteReport r2 = suite_brackets(Action(2), 3);
  CHECK(r2.passed());
}

TEST_CASE("bracket suite is deterministic across thread counts") {
  SuiteReport a = suite_brackets(Action(2), 2);
  SuiteReport b = suite_brackets(Action(2), 2);
  CHECK(a.checks == b.checks);
  CHECK(a.failures.size() == b.failures.size());
}

TEST_CASE("expansion suite calibrates to the standard convention") {
  SuiteReport r = suite_proof_expansions(Operators::standard(2), 3);
  CHECK(r.passed());
  REQUIRE(r.calibration.has_value());
  CHECK(*r.calibration == "standard");
  // The weight-inhomogeneous transcriptions are reported in the notes.
  bool noted = false;
  for (const auto& note : r.notes) {
    if (note.find("weight-inhomogeneous") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("expansion example: gamma_w2 of Y(1,0)") {
  // Display 2 at n=2, k=(0,0), j=1: Gamma_w2 Y(1,0) = Y(1,0)
  //   - sqrt2 [ Z(0,0;1) + Z(2,0;3) + Z(1,1;4) ].
  const Operators ops = Operators::standard(2);
  SparseVector got = ops.gamma_w2.apply(BasisVector{MultiIndex({1, 0}), 0});
  SparseVector expected = SparseVector::unit(BasisVector{MultiIndex({1, 0}), 0});
  const QSqrt2 mr2 = -QSqrt2::sqrt2();
  expected.add_term(BasisVector{MultiIndex({0, 0}), 1}, mr2);
  expected.add_term(BasisVector{MultiIndex({2, 0}), 3}, mr2);
  expected.add_term(BasisVector{MultiIndex({1, 1}), 4}, mr2);
  CHECK(got == expected);
}

TEST_CASE("intertwine suite passes") {
  CHECK(suite_intertwine(Operators::standard(2), 4).passed());
  CHECK(suite_intertwine(Operators::standard(3), 2).passed());
}

TEST_CASE("decomposition suite passes and logs the determinant question") {
  SuiteReport r = suite_decomposition(Operators::standard(2), 4);
  CHECK(r.passed());
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("0/") != std::string::npos);  // closed form never matches
}

TEST_CASE("singular suite: clean at n=1, reports the odd-lowering discrepancy at n=2") {
  CHECK(suite_singular(Action(1), 5).passed());

  // The suite compares the odd-lowering total against 2n+1 and looks for the
  // three-term w3 vectors; direct computation gives n+1 without them, so
  // exactly those checks fail and everything else stays green.
  SuiteReport r = suite_singular(Action(2), 4);
  CHECK(!r.passed());
  CHECK(r.failures.size() == 3);  // the total plus the two w3 lines
  for (const auto& f : r.failures) {
    const bool lemma_related = f.context.find("odd-lowering") != std::string::npos ||
                               f.context.find("w3") != std::string::npos;
    CHECK(lemma_related);
  }
  bool noted = false;
  for (const auto& note : r.notes) {
    if (note.find("n+1") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("negative control: flipped oscillator sign fails suites 4-6") {
  Operators broken = Operators::standard(2);
  broken.action = Action(2, ActionPerturbation::flip_oscillator_of(Generator::odd_raise(1)));
  CHECK(!suite_brackets(broken.action, 2).passed());
  CHECK(!suite_proof_expansions(broken, 2).passed());
  CHECK(!suite_intertwine(broken, 2).passed());
}

TEST_CASE("negative control: flipped matrix sign fails the bracket suite") {
  const Action broken(2, ActionPerturbation::flip_matrix_of(Generator::odd_lower(2)));
  CHECK(!suite_brackets(broken, 2).passed());
}

TEST_CASE("negative control: flipped gamma lowering sum fails suites 5-6") {
  Operators broken = Operators::standard(2);
  broken.gamma_w1 = broken.gamma_w1.with_flipped_lowering_sum();
  broken.gamma_w2 = broken.gamma_w2.with_flipped_lowering_sum();
  SuiteReport expansions = suite_proof_expansions(broken, 2);
  CHECK(!expansions.passed());
  CHECK(expansions.calibration == "failed");
  CHECK(!suite_intertwine(broken, 2).passed());
}

TEST_CASE("alternate convention swaps the two intertwiners") {
  // Under the alternate sign rule the non-identity part flips, so gamma_w1
  // built with it coincides with the standard gamma_w2.
  const GammaOperator alt_w1 =
      GammaOperator(2, IntertwinerKind::w1).with_convention(KoszulConvention::alternate);
  const GammaOperator std_w2(2, IntertwinerKind::w2);
  for (const MultiIndex& k : multi_indices_up_to(2, 3)) {
    for (int slot = 0; slot <= 4; ++slot) {
      CHECK(alt_w1.apply(BasisVector{k, slot}) == std_w2.apply(BasisVector{k, slot}));
    }
  }
}
