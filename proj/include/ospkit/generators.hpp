#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ospkit {

/// A labeled root vector of osp(1|2n) (or a Cartan element H_{2 delta_j}).
///
///   odd_raise(j)        X_{+delta_j}            odd
///   odd_lower(j)        X_{-delta_j}            odd
///   even_pair(s,i,j)    X_{s(delta_i+delta_j)}  even, i != j
///   even_double(s,j)    X_{s 2 delta_j}         even
///   mixed(i,j)          X_{delta_i-delta_j}     even, i != j
///   cartan(j)           H_{2 delta_j}           even
struct Generator {
  enum class Type { odd_raise, odd_lower, even_pair, even_double, mixed, cartan };

  Type type = Type::cartan;
  int i = 0;      // first index (even_pair, mixed)
  int j = 0;      // main index
  int sign = +1;  // even_pair / even_double only

  static Generator odd_raise(int j) { return {Type::odd_raise, 0, check(j), +1}; }
  static Generator odd_lower(int j) { return {Type::odd_lower, 0, check(j), +1}; }
  static Generator even_pair(int sign, int i, int j) {
    if (i == j) throw std::invalid_argument("Generator: even_pair needs i != j");
    return {Type::even_pair, check(i), check(j), check_sign(sign)};
  }
  static Generator even_double(int sign, int j) {
    return {Type::even_double, 0, check(j), check_sign(sign)};
  }
  static Generator mixed(int i, int j) {
    if (i == j) throw std::invalid_argument("Generator: mixed needs i != j");
    return {Type::mixed, check(i), check(j), +1};
  }
  static Generator cartan(int j) { return {Type::cartan, 0, check(j), +1}; }

  bool is_odd() const { return type == Type::odd_raise || type == Type::odd_lower; }

  /// Root coordinates (beta_1, ..., beta_n); zero for Cartan elements.
  std::vector<int> root(int n) const {
    std::vector<int> r(n, 0);
    switch (type) {
      case Type::odd_raise: r.at(j - 1) = 1; break;
      case Type::odd_lower: r.at(j - 1) = -1; break;
      case Type::even_pair:
        r.at(i - 1) = sign;
        r.at(j - 1) = sign;
        break;
      case Type::even_double: r.at(j - 1) = 2 * sign; break;
      case Type::mixed:
        r.at(i - 1) = 1;
        r.at(j - 1) = -1;
        break;
      case Type::cartan: break;
    }
    return r;
  }

  /// Label grammar (sign then index, 'd' marks doubled roots):
  ///   "X+1" "X-1"  "X+1+2" "X-1-2"  "X+2d1" "X-2d1"  "X1-2"  "H1"
  std::string label() const {
    switch (type) {
      case Type::odd_raise: return "X+" + std::to_string(j);
      case Type::odd_lower: return "X-" + std::to_string(j);
      case Type::even_pair: {
        const char s = sign > 0 ? '+' : '-';
        return std::string("X") + s + std::to_string(i) + s + std::to_string(j);
      }
      case Type::even_double: {
        const char s = sign > 0 ? '+' : '-';
        return std::string("X") + s + "2d" + std::to_string(j);
      }
      case Type::mixed: return "X" + std::to_string(i) + "-" + std::to_string(j);
      case Type::cartan: return "H" + std::to_string(j);
    }
    return {};
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.type == b.type && a.i == b.i && a.j == b.j && a.sign == b.sign;
  }

 private:
  static int check(int idx) {
    if (idx < 1) throw std::invalid_argument("Generator: index must be >= 1");
    return idx;
  }
  static int check_sign(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("Generator: sign must be +-1");
    return s;
  }
};

namespace detail {
inline int parse_index(std::string_view s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw std::invalid_argument("generator label: expected index");
  return std::stoi(std::string(s.substr(start, pos - start)));
}
}  // namespace detail

/// Parses the label grammar above; validates indices against n.
inline Generator parse_generator(std::string_view s, int n) {
  auto bounds = [n](int idx) {
    if (idx < 1 || idx > n) {
      throw std::invalid_argument("generator label: index out of range 1.." + std::to_string(n));
    }
    return idx;
  };
  auto expect_end = [&s](size_t pos) {
    if (pos != s.size()) {
      throw std::invalid_argument("generator label: trailing characters in '" + std::string(s) + "'");
    }
  };
  if (s.empty()) throw std::invalid_argument("generator label: empty");
  size_t pos = 1;
  if (s[0] == 'H') {
    int j = bounds(detail::parse_index(s, pos));
    expect_end(pos);
    return Generator::cartan(j);
  }
  if (s[0] != 'X') {
    throw std::invalid_argument("generator label: must start with 'X' or 'H'");
  }
  if (pos >= s.size()) throw std::invalid_argument("generator label: truncated");
  if (s[pos] == '+' || s[pos] == '-') {
    const int sign = s[pos] == '+' ? +1 : -1;
    ++pos;
    if (pos + 1 < s.size() && s[pos] == '2' && s[pos + 1] == 'd') {
      pos += 2;
      int j = bounds(detail::parse_index(s, pos));
      expect_end(pos);
      return Generator::even_double(sign, j);
    }
    int first = bounds(detail::parse_index(s, pos));
    if (pos == s.size()) {
      return sign > 0 ? Generator::odd_raise(first) : Generator::odd_lower(first);
    }
    if ((s[pos] == '+' && sign > 0) || (s[pos] == '-' && sign < 0)) {
      ++pos;
      int second = bounds(detail::parse_index(s, pos));
      expect_end(pos);
      return Generator::even_pair(sign, first, second);
    }
    throw std::invalid_argument("generator label: malformed '" + std::string(s) + "'");
  }
  int first = bounds(detail::parse_index(s, pos));
  if (pos < s.size() && s[pos] == '-') {
    ++pos;
    int second = bounds(detail::parse_index(s, pos));
    expect_end(pos);
    return Generator::mixed(first, second);
  }
  throw std::invalid_argument("generator label: malformed '" + std::string(s) + "'");
}

}  // namespace ospkit
