#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ospkit/exact_matrix.hpp"
#include "ospkit/generators.hpp"
#include "ospkit/sparse_vector.hpp"

namespace ospkit {

/// Matrix of a generator in the standard representation on C^{1|2n}, in the
/// block form [alpha r; c A] with alpha = 0, c^T = (r_{n+1..2n}, -r_{1..n})
/// and A symplectic. Rows and columns are indexed 0..2n by the basis slots.
inline ExactMatrix standard_matrix(const Generator& g, int n) {
  if (g.j > n || g.i > n) throw std::invalid_argument("standard_matrix: index out of range");
  ExactMatrix m(2 * n + 1, 2 * n + 1);
  const QSqrt2 one(1);
  switch (g.type) {
    case Generator::Type::odd_lower:  // r = (delta_j, 0)
      m.at(0, g.j) = one;
      m.at(n + g.j, 0) = -one;
      break;
    case Generator::Type::odd_raise:  // r = (0, delta_j)
      m.at(0, n + g.j) = one;
      m.at(g.j, 0) = one;
      break;
    case Generator::Type::even_double:
      if (g.sign > 0) {
        m.at(g.j, n + g.j) = one;  // A = [0 E_jj; 0 0]
      } else {
        m.at(n + g.j, g.j) = one;  // A = [0 0; E_jj 0]
      }
      break;
    case Generator::Type::even_pair:
      if (g.sign > 0) {  // A = [0 E_ij+E_ji; 0 0]
        m.at(g.i, n + g.j) = one;
        m.at(g.j, n + g.i) = one;
      } else {  // A = [0 0; E_ij+E_ji 0]
        m.at(n + g.i, g.j) = one;
        m.at(n + g.j, g.i) = one;
      }
      break;
    case Generator::Type::mixed:  // A = [E_ij 0; 0 -E_ji]
      m.at(g.i, g.j) = one;
      m.at(n + g.j, n + g.i) = -one;
      break;
    case Generator::Type::cartan:  // A = [E_jj 0; 0 -E_jj]
      m.at(g.j, g.j) = one;
      m.at(n + g.j, n + g.j) = -one;
      break;
  }
  return m;
}

/// Membership test for the standard-matrix constraints: alpha = 0, the c-r
/// coupling, and A in sp(2n) (Q, R symmetric blocks, S = -P^T).
inline bool satisfies_osp_constraints(const ExactMatrix& m, int n) {
  if (m.rows() != 2 * n + 1 || m.cols() != 2 * n + 1) return false;
  if (!m.at(0, 0).is_zero()) return false;
  for (int i = 1; i <= n; ++i) {
    if (m.at(i, 0) != m.at(0, n + i)) return false;
    if (m.at(n + i, 0) != -m.at(0, i)) return false;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (m.at(i, n + j) != m.at(j, n + i)) return false;          // Q symmetric
      if (m.at(n + i, j) != m.at(n + j, i)) return false;          // R symmetric
      if (m.at(n + i, n + j) != -m.at(j, i)) return false;         // S = -P^T
    }
  }
  return true;
}

/// Image of the monomial x^m under the polynomial-differential-operator
/// realization:
///   X_{+delta_j}        -> (1/sqrt2) x_j
///   X_{-delta_j}        -> (1/sqrt2) d_j
///   X_{+2delta_j}       -> (1/2) x_j^2
///   X_{-2delta_j}       -> -(1/2) d_j^2
///   X_{delta_i+delta_j} -> x_i x_j
///   X_{-delta_i-delta_j}-> -d_i d_j
///   X_{delta_i-delta_j} -> x_i d_j
///   H_{2delta_j}        -> x_j d_j + 1/2
inline std::map<MultiIndex, QSqrt2> oscillator_apply(const Generator& g, const MultiIndex& m) {
  std::map<MultiIndex, QSqrt2> out;
  auto put = [&out](const std::optional<MultiIndex>& k, QSqrt2 c) {
    if (!k.has_value() || c.is_zero()) return;
    out[*k] += c;
    if (out[*k].is_zero()) out.erase(*k);
  };
  auto shift2 = [](const MultiIndex& k, int i, int di, int j, int dj) -> std::optional<MultiIndex> {
    std::optional<MultiIndex> first = k.shifted(i, di);
    if (!first.has_value()) return std::nullopt;
    return first->shifted(j, dj);
  };
  switch (g.type) {
    case Generator::Type::odd_raise:
      put(m.shifted(g.j, +1), QSqrt2::inv_sqrt2());
      break;
    case Generator::Type::odd_lower:
      put(m.shifted(g.j, -1), QSqrt2::inv_sqrt2() * QSqrt2(m[g.j]));
      break;
    case Generator::Type::even_double:
      if (g.sign > 0) {
        put(shift2(m, g.j, +1, g.j, +1), QSqrt2(Rational(1, 2)));
      } else {
        put(shift2(m, g.j, -1, g.j, -1),
            QSqrt2(Rational(-static_cast<long>(m[g.j]) * (m[g.j] - 1), 2)));
      }
      break;
    case Generator::Type::even_pair:
      if (g.sign > 0) {
        put(shift2(m, g.i, +1, g.j, +1), QSqrt2(1));
      } else {
        put(shift2(m, g.i, -1, g.j, -1), QSqrt2(-static_cast<long>(m[g.i]) * m[g.j]));
      }
      break;
    case Generator::Type::mixed:
      put(shift2(m, g.j, -1, g.i, +1), QSqrt2(m[g.j]));
      break;
    case Generator::Type::cartan:
      put(m, QSqrt2(Rational(m[g.j]) + Rational(1, 2)));
      break;
  }
  return out;
}

/// Test-only single-sign perturbations, used by the negative controls to
/// demonstrate that the verification suites actually detect sign errors.
struct ActionPerturbation {
  enum class Kind { none, flip_oscillator, flip_matrix };
  Kind kind = Kind::none;
  Generator target;

  static ActionPerturbation none_() { return {}; }
  static ActionPerturbation flip_oscillator_of(Generator g) {
    return {Kind::flip_oscillator, g};
  }
  static ActionPerturbation flip_matrix_of(Generator g) { return {Kind::flip_matrix, g}; }
};

/// The tensor-product action of osp(1|2n) on C[x] (x) C^{1|2n}:
///   X(x^k (x) v_j) = phi(X)(x^k) (x) v_j + (-1)^{|X||k|} x^k (x) T_X(v_j).
/// The sparse columns of every standard matrix are precomputed once, so
/// applying a generator is allocation-light. Pure functions of immutable
/// inputs; safe to use from many threads.
class Action {
 public:
  explicit Action(int n, ActionPerturbation perturb = ActionPerturbation::none_())
      : n_(n), perturb_(perturb) {
    if (n < 1) throw std::invalid_argument("Action: n must be >= 1");
    columns_.resize(key_bound());
    for (const Generator& g : all_generators(n)) cache_columns(g);
  }

  int n() const { return n_; }

  /// Every generator and Cartan element for the given rank.
  static std::vector<Generator> all_generators(int n) {
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
    return gens;
  }

  SparseVector apply(const Generator& g, const BasisVector& b) const {
    if (b.n() != n_) throw std::invalid_argument("Action: basis vector has wrong n");
    SparseVector out;
    const bool osc_flip =
        perturb_.kind == ActionPerturbation::Kind::flip_oscillator && perturb_.target == g;
    for (const auto& [mono, c] : oscillator_apply(g, b.k)) {
      out.add_term(BasisVector{mono, b.slot}, osc_flip ? -c : c);
    }
    const bool mat_flip =
        perturb_.kind == ActionPerturbation::Kind::flip_matrix && perturb_.target == g;
    const bool negate = (g.is_odd() && b.k.degree() % 2 != 0) != mat_flip;
    for (const auto& [row, e] : column(g, b.slot)) {
      out.add_term(BasisVector{b.k, row}, negate ? -e : e);
    }
    return out;
  }

  SparseVector apply(const Generator& g, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [b, c] : v.terms()) {
      out += apply(g, b).scaled(c);
    }
    return out;
  }

  /// Super commutator [g1, g2] v = g1 g2 v - (-1)^{|g1||g2|} g2 g1 v.
  SparseVector bracket(const Generator& g1, const Generator& g2, const SparseVector& v) const {
    SparseVector out = apply(g1, apply(g2, v));
    SparseVector swapped = apply(g2, apply(g1, v));
    if (g1.is_odd() && g2.is_odd()) {
      out += swapped;
    } else {
      out -= swapped;
    }
    return out;
  }

 private:
  using Column = std::vector<std::pair<int, QSqrt2>>;

  size_t key_of(const Generator& g) const {
    if (g.i > n_ || g.j > n_) throw std::invalid_argument("Action: generator index out of range");
    const size_t t = static_cast<size_t>(g.type);
    return (((t * (n_ + 1) + g.i) * (n_ + 1) + g.j) * 2 + (g.sign > 0 ? 1 : 0)) *
               (2 * n_ + 1);
  }

  size_t key_bound() const {
    return ((6 * static_cast<size_t>(n_ + 1) + n_) * (n_ + 1) + n_ + 1) * 2 * (2 * n_ + 1);
  }

  void cache_columns(const Generator& g) {
    const ExactMatrix t = standard_matrix(g, n_);
    const size_t base = key_of(g);
    for (int slot = 0; slot <= 2 * n_; ++slot) {
      Column& col = columns_[base + slot];
      for (int row = 0; row <= 2 * n_; ++row) {
        if (!t.at(row, slot).is_zero()) col.emplace_back(row, t.at(row, slot));
      }
    }
  }

  const Column& column(const Generator& g, int slot) const {
    return columns_.at(key_of(g) + slot);
  }

  int n_;
  ActionPerturbation perturb_;
  std::vector<Column> columns_;
};

}  // namespace ospkit
