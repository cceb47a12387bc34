#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospkit/action.hpp"
#include "ospkit/exact_matrix.hpp"
#include "ospkit/sparse_vector.hpp"
#include "ospkit/weights.hpp"

namespace ospkit {

/// A set of root vectors whose common kernel is computed per weight space.
struct AnnihilatorSpec {
  std::string name;
  std::vector<Generator> generators;

  /// { X_{-delta_i} : 1 <= i <= n } -- the odd positive root vectors.
  static AnnihilatorSpec minus_delta(int n) {
    AnnihilatorSpec s{"minus-delta", {}};
    for (int i = 1; i <= n; ++i) s.generators.push_back(Generator::odd_lower(i));
    return s;
  }

  /// { X_{delta_i - delta_{i+1}} : 1 <= i <= n-1 }; empty for n = 1.
  static AnnihilatorSpec delta_delta(int n) {
    AnnihilatorSpec s{"delta-delta", {}};
    for (int i = 1; i + 1 <= n; ++i) s.generators.push_back(Generator::mixed(i, i + 1));
    return s;
  }

  /// All positive root vectors: X_{-delta_l}, X_{-2delta_l}, and for i < j
  /// X_{delta_i - delta_j} and X_{-delta_i - delta_j}.
  static AnnihilatorSpec full_positive(int n) {
    AnnihilatorSpec s{"full", {}};
    for (int l = 1; l <= n; ++l) {
      s.generators.push_back(Generator::odd_lower(l));
      s.generators.push_back(Generator::even_double(-1, l));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        s.generators.push_back(Generator::mixed(i, j));
        s.generators.push_back(Generator::even_pair(-1, i, j));
      }
    }
    return s;
  }

  /// The simple-root vectors { X_{-delta_1}, X_{delta_i - delta_{i+1}} };
  /// they generate the positive part, so their kernel must coincide with
  /// the full_positive kernel. Used as a cross-check, not assumed.
  static AnnihilatorSpec simple_roots(int n) {
    AnnihilatorSpec s{"simple", {}};
    s.generators.push_back(Generator::odd_lower(1));
    for (int i = 1; i + 1 <= n; ++i) s.generators.push_back(Generator::mixed(i, i + 1));
    return s;
  }
};

/// Basis of the subspace of a weight space annihilated by a generator set.
struct SingularReport {
  Weight lambda;
  int dimension = 0;
  std::vector<SparseVector> basis;  // normalized: first coordinate 1
};

namespace detail {
/// Rows of the stacked constraint matrix for one generator: coordinates of
/// g . b_m over the union of basis vectors appearing in the images. Using
/// the image support directly avoids classifying target weights.
inline void append_constraints(const Action& action, const Generator& g,
                               const std::vector<BasisVector>& basis,
                               std::vector<std::vector<QSqrt2>>& rows) {
  std::vector<SparseVector> images;
  images.reserve(basis.size());
  std::map<BasisVector, size_t> support;
  for (const BasisVector& b : basis) {
    images.push_back(action.apply(g, b));
    for (const auto& [t, c] : images.back().terms()) {
      support.emplace(t, support.size());
    }
  }
  if (support.empty()) return;
  const size_t base = rows.size();
  rows.resize(base + support.size(), std::vector<QSqrt2>(basis.size(), QSqrt2(0)));
  size_t row_of = 0;
  std::map<BasisVector, size_t> row_index;
  for (const auto& [t, idx] : support) row_index.emplace(t, row_of++);
  for (size_t m = 0; m < basis.size(); ++m) {
    for (const auto& [t, c] : images[m].terms()) {
      rows[base + row_index.at(t)][m] = c;
    }
  }
}
}  // namespace detail

/// Exact kernel of the generator set within the lambda-weight space. Each
/// weight space is finite-dimensional, so the per-weight answer carries no
/// truncation error. Every returned vector is re-applied to every generator
/// and checked to vanish before it is reported.
inline SingularReport annihilated_at(const Action& action, const AnnihilatorSpec& spec,
                                     const Weight& lambda) {
  const std::vector<BasisVector> basis = basis_of(lambda);
  std::vector<std::vector<QSqrt2>> rows;
  for (const Generator& g : spec.generators) {
    detail::append_constraints(action, g, basis, rows);
  }
  SingularReport report;
  report.lambda = lambda;
  std::vector<std::vector<QSqrt2>> kernel;
  if (rows.empty()) {
    kernel.resize(basis.size(), std::vector<QSqrt2>(basis.size(), QSqrt2(0)));
    for (size_t m = 0; m < basis.size(); ++m) kernel[m][m] = QSqrt2(1);
  } else {
    kernel = nullspace(ExactMatrix::from_rows(rows));
  }
  for (const auto& coords : kernel) {
    SparseVector v;
    for (size_t m = 0; m < basis.size(); ++m) v.add_term(basis[m], coords[m]);
    v = v.normalized();
    for (const Generator& g : spec.generators) {
      if (!action.apply(g, v).is_zero()) {
        throw std::logic_error("annihilated_at: solver output fails re-verification");
      }
    }
    report.basis.push_back(std::move(v));
  }
  report.dimension = static_cast<int>(report.basis.size());
  return report;
}

/// Runs annihilated_at over enumerate_weights(n, max_deg), in weight order.
inline std::vector<SingularReport> scan_singular(const Action& action, int max_deg,
                                                 const AnnihilatorSpec& spec) {
  std::vector<SingularReport> reports;
  for (const Weight& lambda : enumerate_weights(action.n(), max_deg)) {
    reports.push_back(annihilated_at(action, spec, lambda));
  }
  return reports;
}

inline int total_dimension(const std::vector<SingularReport>& reports) {
  int total = 0;
  for (const auto& r : reports) total += r.dimension;
  return total;
}

/// The five spanning families of the delta-delta kernel, restricted to one
/// weight. Members are, for the admissible exponents:
///   x_1^m (x) v_0
///   x_1^m Sum_j x_j (x) v_{n+j}
///   x_1^m (x) v_{2n}           (only m = 0 lies in the scanned classes)
///   x_1^m (x) v_1
///   x_1^m x_2 (x) v_1 - x_1^{m+1} (x) v_2
/// The last family needs the raised x_1-exponent on the v_2 term to be
/// weight-homogeneous and annihilated; writing both terms with the same
/// exponent fails the kernel equations.
inline std::vector<SparseVector> delta_delta_family_at(int n, const Weight& lambda) {
  std::vector<SparseVector> family;
  const WeightClass cls = classify(lambda);
  if (cls.kind == WeightClass::Kind::lambda_j) {
    if (cls.j == n) {
      family.push_back(SparseVector::unit(BasisVector{MultiIndex::zero(n), 2 * n}));
    }
    return family;
  }
  const MultiIndex k = shadow_of(lambda);
  bool pure_x1 = true;
  for (int i = 2; i <= n; ++i) pure_x1 = pure_x1 && k[i] == 0;
  if (pure_x1) {
    const int m = k[1];
    family.push_back(SparseVector::unit(BasisVector{k, 0}));
    SparseVector sum;
    for (int j = 1; j <= n; ++j) {
      sum.add_term(BasisVector{*k.shifted(j, +1), n + j}, QSqrt2(1));
    }
    family.push_back(sum);
    if (m >= 1) {
      family.push_back(SparseVector::unit(BasisVector{*k.shifted(1, -1), 1}));
    }
  }
  if (n >= 2) {
    bool x1_x2_pattern = k[1] >= 1 && k[2] == 1;
    for (int i = 3; i <= n; ++i) x1_x2_pattern = x1_x2_pattern && k[i] == 0;
    if (x1_x2_pattern) {
      SparseVector v;
      v.add_term(BasisVector{*k.shifted(1, -1), 1}, QSqrt2(1));
      v.add_term(BasisVector{*k.shifted(2, -1), 2}, QSqrt2(-1));
      family.push_back(v);
    }
  }
  return family;
}

struct LemmaSpanEntry {
  Weight lambda;
  int kernel_dim = 0;
  int family_rank = 0;
  int union_rank = 0;
  bool equal = false;
};

struct LemmaSpanReport {
  std::vector<LemmaSpanEntry> entries;
  bool all_equal = true;
};

/// Per scanned weight, checks that the delta-delta kernel equals the span of
/// the five families. Equality of spans is rank-verified on the stacked
/// coordinate matrices.
inline LemmaSpanReport check_lemma_delta_delta(const Action& action, int max_deg) {
  const int n = action.n();
  if (n < 2) throw std::invalid_argument("check_lemma_delta_delta: needs n >= 2");
  const AnnihilatorSpec spec = AnnihilatorSpec::delta_delta(n);
  LemmaSpanReport report;
  for (const Weight& lambda : enumerate_weights(n, max_deg)) {
    const std::vector<BasisVector> basis = basis_of(lambda);
    SingularReport kernel = annihilated_at(action, spec, lambda);
    std::vector<SparseVector> family = delta_delta_family_at(n, lambda);
    std::vector<std::vector<QSqrt2>> kernel_rows;
    for (const auto& v : kernel.basis) kernel_rows.push_back(v.coordinates_in(basis));
    std::vector<std::vector<QSqrt2>> family_rows;
    for (const auto& v : family) family_rows.push_back(v.coordinates_in(basis));
    std::vector<std::vector<QSqrt2>> union_rows = kernel_rows;
    union_rows.insert(union_rows.end(), family_rows.begin(), family_rows.end());
    LemmaSpanEntry entry;
    entry.lambda = lambda;
    entry.kernel_dim = kernel.dimension;
    entry.family_rank =
        family_rows.empty() ? 0 : rank(ExactMatrix::from_rows(family_rows));
    entry.union_rank = union_rows.empty() ? 0 : rank(ExactMatrix::from_rows(union_rows));
    entry.equal = entry.kernel_dim == entry.family_rank && entry.union_rank == entry.kernel_dim;
    report.all_equal = report.all_equal && entry.equal;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace ospkit
