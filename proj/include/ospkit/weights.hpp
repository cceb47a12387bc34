#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ospkit/rational.hpp"

namespace ospkit {

/// Raised when a weight vector is not a weight of C[x] (x) C^{1|2n}, or when
/// it falls outside the Lambda^(j) / Lambda_C classification (see classify()).
class weight_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector k of a monomial x^k in n variables. Entries >= 0.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_) {
      if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }
  }
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i) {
    std::vector<int> e(n, 0);
    e.at(i - 1) = 1;
    return MultiIndex(std::move(e));
  }

  int n() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_.at(i - 1); }  // 1-based, matches index conventions
  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }
  const std::vector<int>& entries() const { return e_; }

  /// k + delta*e_i, or nullopt when an entry would become negative.
  std::optional<MultiIndex> shifted(int i, int delta) const {
    std::vector<int> e = e_;
    e.at(i - 1) += delta;
    if (e[i - 1] < 0) return std::nullopt;
    return MultiIndex(std::move(e));
  }

  friend bool operator==(const MultiIndex& x, const MultiIndex& y) { return x.e_ == y.e_; }
  friend bool operator!=(const MultiIndex& x, const MultiIndex& y) { return x.e_ != y.e_; }
  friend bool operator<(const MultiIndex& x, const MultiIndex& y) { return x.e_ < y.e_; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> e_;
};

/// A weight (lambda_1, ..., lambda_n) of the Cartan subalgebra, stored as
/// exact rationals. Weights of the module at hand are half-integers.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> c) : c_(std::move(c)) {}

  /// k + 1/2 nu_n.
  static Weight from_shadow(const MultiIndex& k) {
    std::vector<Rational> c;
    c.reserve(k.n());
    for (int i = 1; i <= k.n(); ++i) c.push_back(Rational(k[i]) + Rational(1, 2));
    return Weight(std::move(c));
  }

  int n() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_.at(i - 1); }  // 1-based
  const std::vector<Rational>& components() const { return c_; }

  Weight shifted(const std::vector<int>& root) const {
    std::vector<Rational> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += Rational(root.at(i));
    return Weight(std::move(c));
  }

  friend bool operator==(const Weight& x, const Weight& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Weight& x, const Weight& y) { return x.c_ != y.c_; }
  friend bool operator<(const Weight& x, const Weight& y) {
    return std::lexicographical_compare(x.c_.begin(), x.c_.end(), y.c_.begin(), y.c_.end());
  }

  /// "p/q,r/s,...". parse() is the inverse.
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].to_string();
    }
    return s;
  }

  static Weight parse(std::string_view s) {
    std::vector<Rational> c;
    size_t pos = 0;
    while (true) {
      size_t comma = s.find(',', pos);
      std::string_view part =
          comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
      c.push_back(Rational::parse(part));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Weight(std::move(c));
  }

 private:
  std::vector<Rational> c_;
};

/// Elementary tensor x^k (x) v_slot with slot in 0..2n. Slot 0 is the even
/// basis vector of C^{1|2n}; slots 1..2n are the odd ones.
struct BasisVector {
  MultiIndex k;
  int slot = 0;

  int n() const { return k.n(); }

  /// Z2 parity: |x^k| + |v_slot| mod 2, with v_0 even and v_i odd.
  int parity() const { return (k.degree() + (slot == 0 ? 0 : 1)) % 2; }

  /// wt(x^k) + wt(v_slot): shadow weight plus 0, +delta_slot, or -delta_{slot-n}.
  Weight weight() const {
    Weight w = Weight::from_shadow(k);
    const int nn = n();
    if (slot == 0) return w;
    std::vector<int> root(nn, 0);
    if (slot <= nn) {
      root[slot - 1] = 1;
    } else {
      root[slot - nn - 1] = -1;
    }
    return w.shifted(root);
  }

  /// Canonical term order: slot first, then exponent vector lexicographically.
  friend bool operator<(const BasisVector& x, const BasisVector& y) {
    if (x.slot != y.slot) return x.slot < y.slot;
    return x.k < y.k;
  }
  friend bool operator==(const BasisVector& x, const BasisVector& y) {
    return x.slot == y.slot && x.k == y.k;
  }
  friend bool operator!=(const BasisVector& x, const BasisVector& y) { return !(x == y); }

  /// Y(k) for slot 0, Z(k;i) otherwise.
  std::string to_string() const {
    std::string ks = k.to_string();
    ks = ks.substr(1, ks.size() - 2);
    if (slot == 0) return "Y(" + ks + ")";
    return "Z(" + ks + ";" + std::to_string(slot) + ")";
  }
};

/// Classification of a weight of V = C[x] (x) C^{1|2n}:
///   LambdaJ(j):  lambda = 1/2 nu_n - delta_j exactly (lambda_j = -1/2, rest 1/2);
///   LambdaC(C):  all components positive, C of them different from 1/2.
///
/// C is at most n: each component exceeding 1/2 comes from one positive
/// exponent of the monomial shadow.
struct WeightClass {
  enum class Kind { lambda_j, lambda_c };
  Kind kind = Kind::lambda_c;
  int j = 0;                   // for lambda_j
  int C = 0;                   // for lambda_c
  std::vector<int> positions;  // sorted i_1 < ... < i_C with lambda_i != 1/2

  std::string to_string() const {
    if (kind == Kind::lambda_j) return "Lambda^(" + std::to_string(j) + ")";
    std::string s = "Lambda_" + std::to_string(C);
    if (C > 0) {
      s += "[";
      for (size_t i = 0; i < positions.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(positions[i]);
      }
      s += "]";
    }
    return s;
  }
};

namespace detail {
inline bool is_odd_half(const Rational& r) {
  return r.den() == 2;  // canonical form, so den 2 means an odd numerator
}
}  // namespace detail

/// Classifies lambda as LambdaJ(j) or LambdaC(C, positions).
///
/// Weights with lambda_j = -1/2 but a nonzero shadow elsewhere (for example
/// (3/2,-1/2)) are genuine weights of V but fall outside the two classes;
/// their weight spaces are one-dimensional, spanned by a single Z(k;n+j),
/// and both intertwiners restrict to the identity there. They are rejected
/// with a weight_error, as are vectors that are not weights of V at all.
inline WeightClass classify(const Weight& lambda) {
  const int n = lambda.n();
  if (n < 1) throw weight_error("classify: empty weight");
  const Rational half(1, 2);
  const Rational minus_half(-1, 2);
  int neg_at = 0;
  int neg_count = 0;
  for (int i = 1; i <= n; ++i) {
    const Rational& c = lambda[i];
    if (!detail::is_odd_half(c)) {
      throw weight_error("classify: " + lambda.to_string() + " is not a weight of the module");
    }
    if (c < minus_half) {
      throw weight_error("classify: " + lambda.to_string() + " is not a weight of the module");
    }
    if (c == minus_half) {
      neg_at = i;
      ++neg_count;
    }
  }
  if (neg_count > 1) {
    throw weight_error("classify: " + lambda.to_string() + " is not a weight of the module");
  }
  if (neg_count == 1) {
    for (int i = 1; i <= n; ++i) {
      if (i != neg_at && lambda[i] != half) {
        throw weight_error("classify: " + lambda.to_string() +
                           " lies outside the Lambda^(j)/Lambda_C classes (its weight space is "
                           "one-dimensional and fixed by both intertwiners)");
      }
    }
    WeightClass wc;
    wc.kind = WeightClass::Kind::lambda_j;
    wc.j = neg_at;
    return wc;
  }
  WeightClass wc;
  wc.kind = WeightClass::Kind::lambda_c;
  for (int i = 1; i <= n; ++i) {
    if (lambda[i] != half) wc.positions.push_back(i);
  }
  wc.C = static_cast<int>(wc.positions.size());
  return wc;
}

/// Shadow k = lambda - 1/2 nu_n of a LambdaC weight.
inline MultiIndex shadow_of(const Weight& lambda) {
  std::vector<int> e;
  e.reserve(lambda.n());
  for (int i = 1; i <= lambda.n(); ++i) {
    Rational k = lambda[i] - Rational(1, 2);
    if (!k.is_integer() || k.sign() < 0 || !k.num().fits_sint_p()) {
      throw weight_error("shadow_of: " + lambda.to_string() + " has no usable shadow");
    }
    e.push_back(static_cast<int>(k.num().get_si()));
  }
  return MultiIndex(std::move(e));
}

/// Ordered basis B_lambda of the lambda-weight space:
///   LambdaJ(j):  [ Z(0;n+j) ]
///   LambdaC:     [ Y(k), Z(k+delta_j;n+j) for j=1..n, Z(k-delta_i;i) for the
///                  C positions i with lambda_i != 1/2, ascending ]
/// Sizes are 1 and C+n+1. The Y-vector first and the lowered Z-vectors last
/// put the arrowhead of the restricted intertwiners on row/column 1.
inline std::vector<BasisVector> basis_of(const Weight& lambda) {
  const WeightClass wc = classify(lambda);
  const int n = lambda.n();
  std::vector<BasisVector> basis;
  if (wc.kind == WeightClass::Kind::lambda_j) {
    basis.push_back(BasisVector{MultiIndex::zero(n), n + wc.j});
    return basis;
  }
  const MultiIndex k = shadow_of(lambda);
  basis.push_back(BasisVector{k, 0});
  for (int j = 1; j <= n; ++j) {
    basis.push_back(BasisVector{*k.shifted(j, +1), n + j});
  }
  for (int i : wc.positions) {
    basis.push_back(BasisVector{*k.shifted(i, -1), i});
  }
  return basis;
}

namespace detail {
inline void multi_indices_of_degree(int n, int degree, std::vector<int>& prefix,
                                    std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(degree);
    out.push_back(MultiIndex(prefix));
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= degree; ++v) {
    prefix.push_back(v);
    multi_indices_of_degree(n, degree - v, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All exponent vectors with |k| = degree, lexicographically ascending.
inline std::vector<MultiIndex> multi_indices_of_degree(int n, int degree) {
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  detail::multi_indices_of_degree(n, degree, prefix, out);
  return out;
}

/// All exponent vectors with |k| <= max_deg, by degree then lexicographically.
inline std::vector<MultiIndex> multi_indices_up_to(int n, int max_deg) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_deg; ++d) {
    auto layer = multi_indices_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// The scan range used throughout: the n LambdaJ weights (j = n down to 1)
/// followed by every LambdaC weight whose shadow satisfies |k| <= max_deg,
/// ordered by degree then lexicographically. No duplicates. This is the
/// truncation contract of every per-weight scan; per-weight answers within
/// the range are exact.
inline std::vector<Weight> enumerate_weights(int n, int max_deg) {
  if (n < 1) throw std::invalid_argument("enumerate_weights: n must be >= 1");
  if (max_deg < 0) throw std::invalid_argument("enumerate_weights: max_deg must be >= 0");
  std::vector<Weight> out;
  for (int j = n; j >= 1; --j) {
    std::vector<Rational> c(n, Rational(1, 2));
    c[j - 1] = Rational(-1, 2);
    out.push_back(Weight(std::move(c)));
  }
  for (const MultiIndex& k : multi_indices_up_to(n, max_deg)) {
    out.push_back(Weight::from_shadow(k));
  }
  return out;
}

}  // namespace ospkit
