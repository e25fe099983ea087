#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <optional>
#include <vector>

#include "qts/operators.hpp"
#include "qts/qcore.hpp"
#include "qts/series.hpp"

namespace qts {

// State-space data for F(z) = C e_q(zA) B (+ D).
struct Realization {
  Eigen::MatrixXcd C;  // n x N
  Eigen::MatrixXcd A;  // N x N
  Eigen::MatrixXcd B;  // N x m
  std::optional<Eigen::MatrixXcd> D;  // n x m

  int state_dim() const { return static_cast<int>(A.rows()); }
  int out_dim() const { return static_cast<int>(C.rows()); }
  int in_dim() const { return static_cast<int>(B.cols()); }

  void check_shapes() const {
    if (A.rows() != A.cols()) throw std::invalid_argument("Realization: A not square");
    if (C.cols() != A.rows() || B.rows() != A.rows())
      throw std::invalid_argument("Realization: shapes do not compose");
    if (D && (D->rows() != C.rows() || D->cols() != B.cols()))
      throw std::invalid_argument("Realization: D shape mismatch");
  }
};

// q-Tsallis Borel transform: coefficient-wise scaling by alpha_k/k!.
template <class F>
MatrixSeries<F> borel(const MatrixSeries<F>& s, const QParam& q) {
  for (long long n = 1; n < s.degree_bound(); ++n) require_nondegenerate<F>(q, n);
  MatrixSeries<F> r = s;
  auto w = kernel_coeffs<F>(q, s.degree_bound());
  for (int k = 0; k <= s.degree_bound(); ++k)
    for (auto& e : r.coeffs[k]) e = e * w[k];
  return r;
}

// Inverse transform: scaling by k!/alpha_k = gamma_k.
template <class F>
MatrixSeries<F> inverse_borel(const MatrixSeries<F>& s, const QParam& q) {
  for (long long n = 1; n < s.degree_bound(); ++n) require_nondegenerate<F>(q, n);
  MatrixSeries<F> r = s;
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 0; k <= s.degree_bound(); ++k) {
    if (k >= 2) a = a * q_factor<F>(q, k - 1);
    if (k >= 1) fact = fact * F::real(k);
    typename F::Complex g = F::to_complex(fact / a);
    for (auto& e : r.coeffs[k]) e = e * g;
  }
  return r;
}

template <class F>
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<typename F::Complex> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(r * c) {}
  typename F::Complex& at(int i, int j) { return a[i * cols + j]; }
  const typename F::Complex& at(int i, int j) const { return a[i * cols + j]; }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline Eigen::MatrixXcd to_eigen(const DenseMatrix<FloatField>& m) {
  Eigen::MatrixXcd e(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) e(i, j) = m.at(i, j);
  return e;
}

// Block Hankel of the inverse-Borel (classically weighted) coefficients:
// block (i, j) = gamma_{i+j} F_{i+j}. Its rank theory is the classical
// Kronecker criterion.
template <class F>
DenseMatrix<F> hankel(const MatrixSeries<F>& s, const QParam& q, int block_rows,
                      int block_cols) {
  int need = block_rows + block_cols - 2;
  if (s.degree_bound() < need)
    throw std::invalid_argument("hankel: degree bound too small for requested size");
  auto g = inverse_borel(s, q);
  DenseMatrix<F> h(block_rows * s.rows, block_cols * s.cols);
  for (int bi = 0; bi < block_rows; ++bi)
    for (int bj = 0; bj < block_cols; ++bj)
      for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j)
          h.at(bi * s.rows + i, bj * s.cols + j) = g.at(bi + bj, i, j);
  return h;
}

// Count of singular values above rel_tol * sigma_max.
inline int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

// Taylor coefficients F_k = (alpha_k/k!) C A^k B of a realization.
inline MatrixSeries<FloatField> taylor_from_realization(const Realization& r,
                                                        const QParam& q, int N) {
  r.check_shapes();
  auto w = kernel_coeffs<FloatField>(q, N);
  MatrixSeries<FloatField> s(r.out_dim(), r.in_dim(), N);
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(r.state_dim(), r.state_dim());
  for (int k = 0; k <= N; ++k) {
    Eigen::MatrixXcd ck = r.state_dim() == 0
                              ? Eigen::MatrixXcd::Zero(r.out_dim(), r.in_dim())
                              : Eigen::MatrixXcd(w[k] * (r.C * pw * r.B));
    if (r.state_dim() == 0 && k == 0) ck = r.C * r.B;
    set_coeff_matrix(s, k, ck);
    if (k < N && r.state_dim() > 0) pw = r.A * pw;
  }
  return s;
}

struct RationalityReport {
  bool is_rational = false;
  int estimated_rank = 0;
  int rank_prev = 0;  // rank at the next-smaller Hankel size
};

// Rank-stabilization test: build the two largest feasible square block
// Hankels and flag rational when their numerical ranks agree.
inline RationalityReport is_q_rational(const MatrixSeries<FloatField>& s,
                                       const QParam& q, double rel_tol) {
  if (s.degree_bound() < 6)
    throw std::invalid_argument("is_q_rational: degree bound must be >= 6");
  int size = s.degree_bound() / 2 + 1;  // largest s with 2(s-1) <= bound
  auto h_big = to_eigen(hankel(s, q, size, size));
  auto h_small = to_eigen(hankel(s, q, size - 1, size - 1));
  RationalityReport rep;
  rep.estimated_rank = numerical_rank(h_big, rel_tol);
  rep.rank_prev = numerical_rank(h_small, rel_tol);
  rep.is_rational = rep.estimated_rank == rep.rank_prev;
  return rep;
}

// MzAdj applied coefficient-wise to a matrix series.
inline MatrixSeries<FloatField> apply_mzadj(const MatrixSeries<FloatField>& s,
                                            const QParam& q) {
  MatrixSeries<FloatField> r(s.rows, s.cols, std::max(0, s.degree_bound() - 1));
  for (int k = 1; k <= s.degree_bound(); ++k) {
    auto f = op_monomial_factor<FloatField>(OpKind::MzAdj, k, q);
    for (int e = 0; e < s.rows * s.cols; ++e)
      r.coeffs[k - 1][e] = f * s.coeffs[k][e];
  }
  return r;
}

// Dimension of span{ columns of (MzAdj)^k F : k = 0..depth }, measured on the
// coefficient window 0..(bound - depth) that stays uncontaminated by
// truncation.
inline int adjoint_span_dimension(const MatrixSeries<FloatField>& s, const QParam& q,
                                  int depth, double rel_tol) {
  int window = s.degree_bound() - depth;
  if (window < 0)
    throw std::invalid_argument("adjoint_span_dimension: depth exceeds degree bound");
  Eigen::MatrixXcd stack((window + 1) * s.rows, (depth + 1) * s.cols);
  MatrixSeries<FloatField> cur = s;
  for (int k = 0; k <= depth; ++k) {
    for (int j = 0; j < s.cols; ++j)
      for (int d = 0; d <= window; ++d)
        for (int i = 0; i < s.rows; ++i)
          stack(d * s.rows + i, k * s.cols + j) =
              d <= cur.degree_bound() ? cur.at(d, i, j) : std::complex<double>{};
    cur = apply_mzadj(cur, q);
  }
  return numerical_rank(stack, rel_tol);
}

// D + Integ(C e_q(zA) B) evaluated at z: coefficient k of the realization
// series moves to degree k+1 with factor 1/(k+1).
inline Eigen::MatrixXcd integration_form_eval(const Realization& r, const QParam& q,
                                              std::complex<double> z, int trunc) {
  r.check_shapes();
  if (r.state_dim() > 0)
    require_in_disk<FloatField>(q, std::abs(z) * r.A.norm());
  auto s = taylor_from_realization(r, q, trunc);
  Eigen::MatrixXcd acc = r.D ? *r.D : Eigen::MatrixXcd::Zero(r.out_dim(), r.in_dim());
  std::complex<double> zp = z;
  for (int k = 0; k <= trunc; ++k) {
    acc += (zp / static_cast<double>(k + 1)) * coeff_matrix(s, k);
    zp *= z;
  }
  return acc;
}

// --- Gelfond-Leontiev generalization ---------------------------------------

// phi_k = alpha_k/k!, the weight sequence that makes the gl_* operations
// coincide with the q-specific ones.
template <class F>
std::vector<typename F::Real> phi_tsallis(const QParam& q, int len) {
  std::vector<typename F::Real> phi;
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 0; k < len; ++k) {
    if (k >= 2) a = a * q_factor<F>(q, k - 1);
    if (k >= 1) fact = fact * F::real(k);
    phi.push_back(a / fact);
  }
  return phi;
}

template <class F>
void require_phi(const std::vector<typename F::Real>& phi, int upto) {
  if (static_cast<int>(phi.size()) <= upto)
    throw std::invalid_argument("phi sequence shorter than the degree bound");
  for (int k = 0; k <= upto; ++k)
    if (F::is_zero_r(phi[k]))
      throw std::domain_error("phi_" + std::to_string(k) + " is zero");
}

// Generalized derivative: a_k -> a_k phi_{k-1}/phi_k at degree k-1.
template <class F>
TruncatedSeries<F> gl_derivative(const TruncatedSeries<F>& f,
                                 const std::vector<typename F::Real>& phi) {
  require_phi<F>(phi, f.degree_bound());
  TruncatedSeries<F> r(std::max(0, f.degree_bound() - 1));
  for (int k = 1; k <= f.degree_bound(); ++k)
    r[k - 1] = f[k] * F::to_complex(phi[k - 1] / phi[k]);
  return r;
}

// Generalized Borel transform: coefficient-wise scaling by phi_k.
template <class F>
MatrixSeries<F> gl_borel(const MatrixSeries<F>& s,
                         const std::vector<typename F::Real>& phi) {
  require_phi<F>(phi, s.degree_bound());
  MatrixSeries<F> r = s;
  for (int k = 0; k <= s.degree_bound(); ++k)
    for (auto& e : r.coeffs[k]) e = e * F::to_complex(phi[k]);
  return r;
}

// Generalized Hankel: block (i, j) = F_{i+j}/phi_{i+j}, so phi-rational
// inputs reduce to the classical finite-rank criterion.
template <class F>
DenseMatrix<F> gl_hankel(const MatrixSeries<F>& s,
                         const std::vector<typename F::Real>& phi, int block_rows,
                         int block_cols) {
  int need = block_rows + block_cols - 2;
  if (s.degree_bound() < need)
    throw std::invalid_argument("gl_hankel: degree bound too small");
  require_phi<F>(phi, need);
  DenseMatrix<F> h(block_rows * s.rows, block_cols * s.cols);
  for (int bi = 0; bi < block_rows; ++bi)
    for (int bj = 0; bj < block_cols; ++bj) {
      typename F::Complex w =
          F::to_complex(F::real(1) / phi[bi + bj]);
      for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j)
          h.at(bi * s.rows + i, bj * s.cols + j) = s.at(bi + bj, i, j) * w;
    }
  return h;
}

}  // namespace qts
