#pragma once

#include <json.hpp>

#include "ospkit/exact_matrix.hpp"
#include "ospkit/intertwiner.hpp"
#include "ospkit/singular.hpp"
#include "ospkit/sparse_vector.hpp"
#include "ospkit/verify.hpp"
#include "ospkit/weights.hpp"

namespace ospkit {

using nlohmann::json;

// QSqrt2 <-> {"a": "p/q", "b": "r/s"} with integer strings ("/1" elided).
inline json to_json(const QSqrt2& x) {
  return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}};
}

inline QSqrt2 qsqrt2_from_json(const json& j) {
  return QSqrt2(Rational::parse(j.at("a").get<std::string>()),
                Rational::parse(j.at("b").get<std::string>()));
}

// BasisVector <-> {"k": [ints], "slot": int}
inline json to_json(const BasisVector& b) {
  return json{{"k", b.k.entries()}, {"slot", b.slot}};
}

inline BasisVector basis_vector_from_json(const json& j) {
  return BasisVector{MultiIndex(j.at("k").get<std::vector<int>>()), j.at("slot").get<int>()};
}

// SparseVector <-> {"terms": [{"basis": ..., "coeff": ...}]}; a bare list of
// term objects is accepted on input as well.
inline json to_json(const SparseVector& v) {
  json terms = json::array();
  for (const auto& [b, c] : v.terms()) {
    terms.push_back(json{{"basis", to_json(b)}, {"coeff", to_json(c)}});
  }
  return json{{"terms", std::move(terms)}};
}

inline SparseVector sparse_vector_from_json(const json& j) {
  const json& terms = j.is_array() ? j : j.at("terms");
  SparseVector v;
  for (const json& t : terms) {
    v.add_term(basis_vector_from_json(t.at("basis")), qsqrt2_from_json(t.at("coeff")));
  }
  return v;
}

// ExactMatrix -> {"rows": r, "cols": c, "entries": [[QSqrt2, ...], ...]}
inline json to_json(const ExactMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json to_json(const WeightClass& c) {
  if (c.kind == WeightClass::Kind::lambda_j) {
    return json{{"kind", "lambda_j"}, {"j", c.j}};
  }
  return json{{"kind", "lambda_c"}, {"C", c.C}, {"positions", c.positions}};
}

inline json to_json(const WeightBlock& b) {
  json out{{"weight", b.lambda.to_string()},
           {"class", to_json(b.cls)},
           {"basis", json::array()},
           {"matrix_w1", to_json(b.matrix_w1)},
           {"matrix_w2", to_json(b.matrix_w2)},
           {"det", to_json(det(b.matrix_w1))}};
  for (const auto& bv : b.basis) out["basis"].push_back(to_json(bv));
  if (b.a_value.has_value()) out["a"] = to_json(*b.a_value);
  return out;
}

inline json to_json(const SingularReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(to_json(v));
  return json{{"weight", r.lambda.to_string()},
              {"dimension", r.dimension},
              {"basis", std::move(basis)}};
}

inline json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(json{{"context", f.context}, {"expected", f.expected}, {"got", f.got}});
  }
  json out{{"suite", r.suite},   {"n", r.n},
           {"max_deg", r.max_deg}, {"checks", r.checks},
           {"passed", r.passed()}, {"failures", std::move(failures)},
           {"notes", r.notes}};
  if (r.calibration.has_value()) out["calibration"] = *r.calibration;
  return out;
}

}  // namespace ospkit
