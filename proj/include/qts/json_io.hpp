#pragma once

#include <json.hpp>

#include <string>

#include "qts/rational_fn.hpp"
#include "qts/series.hpp"

namespace qts {

using nlohmann::json;

// Scalar entries of a [re, im] pair are numbers in float mode and "p/r"
// strings in exact mode; the readers accept either form in either mode, so
// exact-mode round trips stay byte-identical.
template <class F>
json entry_to_json(const typename F::Complex& c);

template <>
inline json entry_to_json<FloatField>(const std::complex<double>& c) {
  return json::array({c.real(), c.imag()});
}

template <>
inline json entry_to_json<ExactField>(const RationalComplex& c) {
  return json::array({rational_str(c.re), rational_str(c.im)});
}

template <class F>
typename F::Real real_from_json(const json& v) {
  if (v.is_string()) {
    Rational r{v.get<std::string>()};
    if constexpr (std::is_same_v<F, ExactField>)
      return r;
    else
      return static_cast<double>(r);
  }
  if constexpr (std::is_same_v<F, ExactField>)
    return Rational(v.get<double>());
  else
    return v.get<double>();
}

template <class F>
typename F::Complex entry_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2)
    throw std::invalid_argument("expected a [re, im] pair");
  return {real_from_json<F>(v[0]), real_from_json<F>(v[1])};
}

template <class F>
json series_to_json(const TruncatedSeries<F>& f) {
  json coeffs = json::array();
  for (int k = 0; k <= f.degree_bound(); ++k) coeffs.push_back(entry_to_json<F>(f[k]));
  return json{{"degree_bound", f.degree_bound()}, {"coeffs", coeffs}};
}

template <class F>
TruncatedSeries<F> series_from_json(const json& j) {
  int n = j.at("degree_bound").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != n + 1)
    throw std::invalid_argument("series: coeffs must have degree_bound + 1 entries");
  TruncatedSeries<F> f(n);
  for (int k = 0; k <= n; ++k) f[k] = entry_from_json<F>(coeffs[k]);
  return f;
}

template <class F>
json matrix_series_to_json(const MatrixSeries<F>& s) {
  json coeffs = json::array();
  for (int k = 0; k <= s.degree_bound(); ++k) {
    json mat = json::array();
    for (int i = 0; i < s.rows; ++i) {
      json row = json::array();
      for (int j = 0; j < s.cols; ++j) row.push_back(entry_to_json<F>(s.at(k, i, j)));
      mat.push_back(row);
    }
    coeffs.push_back(mat);
  }
  return json{{"degree_bound", s.degree_bound()},
              {"shape", {s.rows, s.cols}},
              {"coeffs", coeffs}};
}

template <class F>
MatrixSeries<F> matrix_series_from_json(const json& j) {
  int n = j.at("degree_bound").get<int>();
  int rows = j.at("shape").at(0).get<int>();
  int cols = j.at("shape").at(1).get<int>();
  MatrixSeries<F> s(rows, cols, n);
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw std::invalid_argument("matrix series: wrong coefficient count");
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i < rows; ++i)
      for (int c = 0; c < cols; ++c)
        s.at(k, i, c) = entry_from_json<F>(coeffs[k].at(i).at(c));
  return s;
}

inline bool is_matrix_series_json(const json& j) { return j.contains("shape"); }

inline json eigen_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

inline Eigen::MatrixXcd eigen_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m(i, c) = entry_from_json<FloatField>(j.at(i).at(c));
  }
  return m;
}

inline json realization_to_json(const Realization& r) {
  json j{{"C", eigen_to_json(r.C)}, {"A", eigen_to_json(r.A)}, {"B", eigen_to_json(r.B)}};
  j["D"] = r.D ? eigen_to_json(*r.D) : json(nullptr);
  return j;
}

inline Realization realization_from_json(const json& j) {
  Realization r;
  r.C = eigen_from_json(j.at("C"));
  r.A = eigen_from_json(j.at("A"));
  r.B = eigen_from_json(j.at("B"));
  if (j.contains("D") && !j.at("D").is_null()) r.D = eigen_from_json(j.at("D"));
  r.check_shapes();
  return r;
}

}  // namespace qts
