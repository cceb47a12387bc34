#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ospkit/action.hpp"
#include "ospkit/exact_matrix.hpp"
#include "ospkit/sparse_vector.hpp"
#include "ospkit/weights.hpp"

namespace ospkit {

/// The two intertwining automorphisms of C[x] (x) C^{1|2n}:
///   Gamma = 1 (x) 1 + s*sqrt2 Sum_i d_i (x) T_{+i} - s*sqrt2 Sum_i x_i (x) T_{-i}
/// with s = +1 for w2 (fixes the Y-side singular vector) and s = -1 for w1.
enum class IntertwinerKind { w1, w2 };

inline int kind_sign(IntertwinerKind k) { return k == IntertwinerKind::w2 ? +1 : -1; }

inline const char* kind_name(IntertwinerKind k) { return k == IntertwinerKind::w2 ? "w2" : "w1"; }

/// Sign rule for applying an elementary operator tensor S (x) A to v (x) w
/// when both factors are odd. `standard` is (S (x) A)(v (x) w) =
/// (-1)^{|A||v|} S(v) (x) A(w); `alternate` carries an extra (-1)^{|S||A|}.
/// The expansion suite calibrates which rule reproduces the transcribed
/// formulas; `standard` is the one that does.
enum class KoszulConvention { standard, alternate };

class GammaOperator {
 public:
  GammaOperator(int n, IntertwinerKind kind,
                KoszulConvention conv = KoszulConvention::standard,
                bool flip_lowering_sum = false)
      : n_(n), kind_(kind), conv_(conv), flip_lowering_sum_(flip_lowering_sum) {
    if (n < 1) throw std::invalid_argument("GammaOperator: n must be >= 1");
  }

  int n() const { return n_; }
  IntertwinerKind kind() const { return kind_; }
  KoszulConvention convention() const { return conv_; }

  GammaOperator with_convention(KoszulConvention c) const {
    return GammaOperator(n_, kind_, c, flip_lowering_sum_);
  }

  /// Test-only single-sign perturbation: negates the x_i (x) T_{-i} sum.
  GammaOperator with_flipped_lowering_sum() const {
    return GammaOperator(n_, kind_, conv_, true);
  }

  SparseVector apply(const BasisVector& b) const {
    if (b.n() != n_) throw std::invalid_argument("GammaOperator: basis vector has wrong n");
    SparseVector out = SparseVector::unit(b);
    QSqrt2 s = QSqrt2(kind_sign(kind_)) * QSqrt2::sqrt2();
    if (b.k.degree() % 2 != 0) s = -s;          // Koszul sign (-1)^{|k|}, T odd
    if (conv_ == KoszulConvention::alternate) s = -s;
    const QSqrt2 lower_sign = flip_lowering_sum_ ? QSqrt2(-1) : QSqrt2(1);
    if (b.slot == 0) {
      for (int i = 1; i <= n_; ++i) {
        // + s sqrt2 d_i (x) T_{+i}:  v_0 -> v_i
        out.add_term_checked(b.k.shifted(i, -1), i, s * QSqrt2(b.k[i]));
        // - s sqrt2 x_i (x) T_{-i}:  v_0 -> -v_{n+i}
        out.add_term_checked(b.k.shifted(i, +1), n_ + i, lower_sign * s);
      }
    } else if (b.slot <= n_) {
      // - s sqrt2 x_j (x) T_{-j}:  v_j -> v_0
      out.add_term_checked(b.k.shifted(b.slot, +1), 0, lower_sign * -s);
    } else {
      // + s sqrt2 d_i (x) T_{+i}:  v_{n+i} -> v_0
      const int i = b.slot - n_;
      out.add_term_checked(b.k.shifted(i, -1), 0, s * QSqrt2(b.k[i]));
    }
    return out;
  }

  SparseVector apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [b, c] : v.terms()) out += apply(b).scaled(c);
    return out;
  }

 private:
  int n_;
  IntertwinerKind kind_;
  KoszulConvention conv_;
  bool flip_lowering_sum_;
};

/// Action of the odd generators on the Y-basis of the first summand,
/// conjugated through Gamma^{w2}:
///   X_{+j} Y_k = -(1/sqrt2) Y_{k+delta_j}
///   X_{-j} Y_k = -(1/sqrt2) k_j Y_{k-delta_j}
inline SparseVector conjugated_action_lil(const Generator& g, const BasisVector& y) {
  if (!g.is_odd()) throw std::invalid_argument("conjugated_action_lil: odd generators only");
  if (y.slot != 0) throw std::invalid_argument("conjugated_action_lil: slot must be 0");
  SparseVector out;
  const QSqrt2 c = -QSqrt2::inv_sqrt2();
  if (g.type == Generator::Type::odd_raise) {
    out.add_term_checked(y.k.shifted(g.j, +1), 0, c);
  } else {
    out.add_term_checked(y.k.shifted(g.j, -1), 0, c * QSqrt2(y.k[g.j]));
  }
  return out;
}

/// Action of the odd generators on the Z-basis of the second summand,
/// conjugated through Gamma^{w1}:
///   X_{+j} Z_{k,i}   = (1/sqrt2) Z_{k+dj,i}       - sqrt2      Z_{k+di,j}
///   X_{+j} Z_{k,n+i} = (1/sqrt2) Z_{k+dj,n+i}     + sqrt2 k_i  Z_{k-di,j}
///   X_{-j} Z_{k,i}   = (1/sqrt2) k_j Z_{k-dj,i}   + sqrt2      Z_{k+di,n+j}
///   X_{-j} Z_{k,n+i} = (1/sqrt2) k_j Z_{k-dj,n+i} - sqrt2 k_i  Z_{k-di,n+j}
inline SparseVector conjugated_action_big(const Generator& g, const BasisVector& z) {
  if (!g.is_odd()) throw std::invalid_argument("conjugated_action_big: odd generators only");
  if (z.slot < 1) throw std::invalid_argument("conjugated_action_big: slot must be >= 1");
  const int n = z.n();
  const int j = g.j;
  const QSqrt2 half = QSqrt2::inv_sqrt2();
  const QSqrt2 root = QSqrt2::sqrt2();
  SparseVector out;
  if (g.type == Generator::Type::odd_raise) {
    if (z.slot <= n) {
      const int i = z.slot;
      out.add_term_checked(z.k.shifted(j, +1), i, half);
      out.add_term_checked(z.k.shifted(i, +1), j, -root);
    } else {
      const int i = z.slot - n;
      out.add_term_checked(z.k.shifted(j, +1), n + i, half);
      out.add_term_checked(z.k.shifted(i, -1), j, root * QSqrt2(z.k[i]));
    }
  } else {
    if (z.slot <= n) {
      const int i = z.slot;
      out.add_term_checked(z.k.shifted(j, -1), i, half * QSqrt2(z.k[j]));
      out.add_term_checked(z.k.shifted(i, +1), n + j, root);
    } else {
      const int i = z.slot - n;
      out.add_term_checked(z.k.shifted(j, -1), n + i, half * QSqrt2(z.k[j]));
      out.add_term_checked(z.k.shifted(i, -1), n + j, -root * QSqrt2(z.k[i]));
    }
  }
  return out;
}

/// A weight lambda together with its class, its ordered basis, and the
/// matrices of both restricted intertwiners in that basis. a_value is
/// (-1)^{|k|} sqrt2 for LambdaC weights and absent for LambdaJ ones.
struct WeightBlock {
  Weight lambda;
  WeightClass cls;
  std::vector<BasisVector> basis;
  ExactMatrix matrix_w1;
  ExactMatrix matrix_w2;
  std::optional<QSqrt2> a_value;

  const ExactMatrix& matrix(IntertwinerKind kind) const {
    return kind == IntertwinerKind::w1 ? matrix_w1 : matrix_w2;
  }
};

namespace detail {
inline ExactMatrix restriction_matrix(const GammaOperator& gamma,
                                      const std::vector<BasisVector>& basis) {
  const int dim = static_cast<int>(basis.size());
  ExactMatrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    std::vector<QSqrt2> coords = gamma.apply(basis[col]).coordinates_in(basis);
    for (int row = 0; row < dim; ++row) m.at(row, col) = coords[row];
  }
  return m;
}
}  // namespace detail

/// Matrices are always built by applying the operators to the basis vectors;
/// the block is never transcribed from a closed form.
inline WeightBlock weight_block(const GammaOperator& g1, const GammaOperator& g2,
                                const Weight& lambda) {
  WeightBlock block;
  block.lambda = lambda;
  block.cls = classify(lambda);
  block.basis = basis_of(lambda);
  block.matrix_w1 = detail::restriction_matrix(g1, block.basis);
  block.matrix_w2 = detail::restriction_matrix(g2, block.basis);
  if (block.cls.kind == WeightClass::Kind::lambda_c) {
    const MultiIndex k = shadow_of(lambda);
    block.a_value = k.degree() % 2 == 0 ? QSqrt2::sqrt2() : -QSqrt2::sqrt2();
  }
  return block;
}

/// Restriction of one intertwiner to the lambda-weight space (the sibling
/// matrix is populated too, since it costs nothing at these sizes).
inline WeightBlock restrict_block(IntertwinerKind /*kind*/, const Weight& lambda, int n) {
  return weight_block(GammaOperator(n, IntertwinerKind::w1),
                      GammaOperator(n, IntertwinerKind::w2), lambda);
}

}  // namespace ospkit
