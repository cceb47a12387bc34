#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospkit/qsqrt2.hpp"
#include "ospkit/weights.hpp"

namespace ospkit {

/// Finite Q(sqrt2)-linear combination of elementary tensors. Terms are kept
/// in canonical (slot, exponent) order with no explicit zero coefficients.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector unit(BasisVector b) {
    SparseVector v;
    v.terms_.emplace(std::move(b), QSqrt2(1));
    return v;
  }

  static SparseVector term(BasisVector b, QSqrt2 c) {
    SparseVector v;
    v.add_term(std::move(b), std::move(c));
    return v;
  }

  void add_term(BasisVector b, QSqrt2 c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(b), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds c * x^(k + shift placed via MultiIndex::shifted) (x) v_slot, and
  /// silently drops the term when the exponent would go negative. Monomials
  /// with negative exponents are zero by convention.
  void add_term_checked(const std::optional<MultiIndex>& k, int slot, QSqrt2 c) {
    if (!k.has_value()) return;
    add_term(BasisVector{*k, slot}, std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<BasisVector, QSqrt2>& terms() const { return terms_; }

  QSqrt2 coefficient(const BasisVector& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? QSqrt2(0) : it->second;
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  SparseVector operator-() const {
    SparseVector v;
    for (const auto& [b, c] : terms_) v.terms_.emplace(b, -c);
    return v;
  }
  friend SparseVector operator+(SparseVector x, const SparseVector& y) { return x += y; }
  friend SparseVector operator-(SparseVector x, const SparseVector& y) { return x -= y; }

  SparseVector scaled(const QSqrt2& c) const {
    SparseVector v;
    if (c.is_zero()) return v;
    for (const auto& [b, coeff] : terms_) v.terms_.emplace(b, coeff * c);
    return v;
  }

  friend bool operator==(const SparseVector& x, const SparseVector& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const SparseVector& x, const SparseVector& y) { return !(x == y); }

  /// The common weight of all terms, or nullopt for 0 and for mixed vectors.
  std::optional<Weight> weight() const {
    std::optional<Weight> w;
    for (const auto& [b, c] : terms_) {
      Weight bw = b.weight();
      if (!w) {
        w = bw;
      } else if (*w != bw) {
        return std::nullopt;
      }
    }
    return w;
  }

  /// Divides by the first nonzero coefficient in canonical term order.
  SparseVector normalized() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inv());
  }

  /// Coordinates with respect to an ordered basis of the enclosing weight
  /// space. Every term must lie on one of the listed basis vectors.
  std::vector<QSqrt2> coordinates_in(const std::vector<BasisVector>& basis) const {
    std::vector<QSqrt2> coords(basis.size(), QSqrt2(0));
    for (const auto& [b, c] : terms_) {
      bool found = false;
      for (size_t m = 0; m < basis.size(); ++m) {
        if (basis[m] == b) {
          coords[m] = c;
          found = true;
          break;
        }
      }
      if (!found) {
        throw std::invalid_argument("coordinates_in: term " + b.to_string() +
                                    " is outside the given basis");
      }
    }
    return coords;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      std::string piece = render_term(b, c);
      if (first) {
        out = piece;
        first = false;
      } else if (piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  }

 private:
  static std::string render_term(const BasisVector& b, const QSqrt2& c) {
    if (c == QSqrt2(1)) return b.to_string();
    if (c == QSqrt2(-1)) return "-" + b.to_string();
    if (c.is_composite()) return "(" + c.to_string() + ")*" + b.to_string();
    return c.to_string() + "*" + b.to_string();
  }

  std::map<BasisVector, QSqrt2> terms_;
};

}  // namespace ospkit
