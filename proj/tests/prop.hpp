#pragma once

#include <cstdint>
#include <cstdlib>

#include "ospkit/exact_matrix.hpp"
#include "ospkit/qsqrt2.hpp"

// Tiny deterministic generator for property-style tests. The seed comes from
// OSPKIT_TEST_SEED when set, so failing cases can be replayed.
namespace prop {

inline uint64_t default_seed() {
  if (const char* env = std::getenv("OSPKIT_TEST_SEED")) {
    return static_cast<uint64_t>(std::strtoull(env, nullptr, 10));
  }
  return 0x5eedc0de2024ull;
}

class Rng {
 public:
  explicit Rng(uint64_t seed = default_seed()) : state_(seed ? seed : 1) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  ospkit::Rational rational() {
    return ospkit::Rational(range(-9, 9), range(1, 9));
  }

  ospkit::QSqrt2 qsqrt2() { return ospkit::QSqrt2(rational(), rational()); }

  ospkit::QSqrt2 nonzero_qsqrt2() {
    for (;;) {
      ospkit::QSqrt2 x = qsqrt2();
      if (!x.is_zero()) return x;
    }
  }

  ospkit::ExactMatrix matrix(int rows, int cols) {
    ospkit::ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        // Sparse-ish entries keep the rank structure interesting.
        if (range(0, 2) == 0) continue;
        m.at(i, j) = qsqrt2();
      }
    }
    return m;
  }

 private:
  uint64_t state_;
};

}  // namespace prop
