#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <vector>

#include "qts/qparam.hpp"

namespace qts {

// Degree-bounded formal power series. The bound is explicit: trailing zeros
// are distinct from absent coefficients.
template <class F>
struct TruncatedSeries {
  using Complex = typename F::Complex;

  std::vector<Complex> coeffs;  // indices 0..N

  TruncatedSeries() : coeffs(1) {}
  explicit TruncatedSeries(int degree_bound) : coeffs(degree_bound + 1) {}
  explicit TruncatedSeries(std::vector<Complex> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.resize(1);
  }

  int degree_bound() const { return static_cast<int>(coeffs.size()) - 1; }

  const Complex& operator[](int k) const { return coeffs[k]; }
  Complex& operator[](int k) { return coeffs[k]; }

  static TruncatedSeries monomial(int k, int degree_bound) {
    TruncatedSeries s(degree_bound);
    s.coeffs[k] = F::to_complex(F::real(1));
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs == b.coeffs;
  }
};

template <class F>
TruncatedSeries<F> add(const TruncatedSeries<F>& f, const TruncatedSeries<F>& g) {
  int n = std::min(f.degree_bound(), g.degree_bound());
  TruncatedSeries<F> r(n);
  for (int k = 0; k <= n; ++k) r[k] = f[k] + g[k];
  return r;
}

template <class F>
TruncatedSeries<F> sub(const TruncatedSeries<F>& f, const TruncatedSeries<F>& g) {
  int n = std::min(f.degree_bound(), g.degree_bound());
  TruncatedSeries<F> r(n);
  for (int k = 0; k <= n; ++k) r[k] = f[k] - g[k];
  return r;
}

template <class F>
TruncatedSeries<F> scale(const TruncatedSeries<F>& f, const typename F::Complex& c) {
  TruncatedSeries<F> r(f.degree_bound());
  for (int k = 0; k <= f.degree_bound(); ++k) r[k] = c * f[k];
  return r;
}

// Cauchy product, truncated at the smaller bound.
template <class F>
TruncatedSeries<F> mul(const TruncatedSeries<F>& f, const TruncatedSeries<F>& g) {
  int n = std::min(f.degree_bound(), g.degree_bound());
  TruncatedSeries<F> r(n);
  for (int k = 0; k <= n; ++k) {
    typename F::Complex acc{};
    for (int j = 0; j <= k; ++j)
      if (j <= f.degree_bound() && k - j <= g.degree_bound()) acc += f[j] * g[k - j];
    r[k] = acc;
  }
  return r;
}

template <class F>
typename F::Complex eval(const TruncatedSeries<F>& f, const typename F::Complex& z) {
  typename F::Complex acc{};
  for (int k = f.degree_bound(); k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

// f(lambda * z): coefficient k picks up lambda^k.
template <class F>
TruncatedSeries<F> scale_argument(const TruncatedSeries<F>& f,
                                  const typename F::Complex& lambda) {
  TruncatedSeries<F> r(f.degree_bound());
  typename F::Complex p = F::to_complex(F::real(1));
  for (int k = 0; k <= f.degree_bound(); ++k) {
    r[k] = f[k] * p;
    p = p * lambda;
  }
  return r;
}

// Power series with fixed-shape matrix coefficients, stored row-major.
template <class F>
struct MatrixSeries {
  using Complex = typename F::Complex;

  int rows = 0, cols = 0;
  std::vector<std::vector<Complex>> coeffs;  // coeffs[k] has rows*cols entries

  MatrixSeries() = default;
  MatrixSeries(int r, int c, int degree_bound)
      : rows(r), cols(c),
        coeffs(degree_bound + 1, std::vector<Complex>(r * c)) {}

  int degree_bound() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex& at(int k, int i, int j) { return coeffs[k][i * cols + j]; }
  const Complex& at(int k, int i, int j) const { return coeffs[k][i * cols + j]; }

  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
    return a.rows == b.rows && a.cols == b.cols && a.coeffs == b.coeffs;
  }
};

inline Eigen::MatrixXcd coeff_matrix(const MatrixSeries<FloatField>& s, int k) {
  Eigen::MatrixXcd m(s.rows, s.cols);
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) m(i, j) = s.at(k, i, j);
  return m;
}

inline void set_coeff_matrix(MatrixSeries<FloatField>& s, int k,
                             const Eigen::MatrixXcd& m) {
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) s.at(k, i, j) = m(i, j);
}

// Scalar view: a TruncatedSeries as a 1x1 MatrixSeries and back.
template <class F>
MatrixSeries<F> as_matrix_series(const TruncatedSeries<F>& f) {
  MatrixSeries<F> m(1, 1, f.degree_bound());
  for (int k = 0; k <= f.degree_bound(); ++k) m.coeffs[k][0] = f[k];
  return m;
}

template <class F>
TruncatedSeries<F> as_scalar_series(const MatrixSeries<F>& m) {
  TruncatedSeries<F> f(m.degree_bound());
  for (int k = 0; k <= m.degree_bound(); ++k) f[k] = m.coeffs[k][0];
  return f;
}

}  // namespace qts
