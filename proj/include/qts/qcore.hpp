#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "qts/qparam.hpp"
#include "qts/series.hpp"

namespace qts {

// Tsallis q-exponential: [1+(1-q)x]^{1/(1-q)}, cut off at 0, classical exp
// at q = 1.
inline double q_exp(double x, const QParam& q) {
  if (q.is(1.0)) return std::exp(x);
  double base = 1.0 + (1.0 - q.value()) * x;
  if (base < 0.0) return 0.0;
  return std::pow(base, 1.0 / (1.0 - q.value()));
}

// Tsallis q-logarithm: (x^{1-q} - 1)/(1-q), classical log at q = 1.
inline double q_ln(double x, const QParam& q) {
  if (!(x > 0.0)) throw std::domain_error("q_ln: x must be > 0");
  if (q.is(1.0)) return std::log(x);
  return (std::pow(x, 1.0 - q.value()) - 1.0) / (1.0 - q.value());
}

// alpha_k = q(2q-1)...((k-1)q-(k-2)), alpha_0 = alpha_1 = 1.
template <class F>
typename F::Real alpha(long long k, const QParam& q) {
  typename F::Real a = F::real(1);
  for (long long n = 1; n < k; ++n) a = a * q_factor<F>(q, n);
  return a;
}

template <class F>
typename F::Real factorial(long long k) {
  typename F::Real f = F::real(1);
  for (long long n = 2; n <= k; ++n) f = f * F::real(n);
  return f;
}

// gamma_k = k!/alpha_k; fails naming the first degenerate index.
template <class F>
typename F::Real gamma(long long k, const QParam& q) {
  for (long long n = 1; n < k; ++n) require_nondegenerate<F>(q, n);
  return factorial<F>(k) / alpha<F>(k, q);
}

template <class F>
struct CoeffSequence {
  std::vector<typename F::Real> alphas;
  std::vector<typename F::Real> gammas;  // populated while alpha != 0

  int length() const { return static_cast<int>(alphas.size()); }
};

// alpha_k and gamma_k for k = 0..len-1. Past a degeneracy the alphas are zero
// and the gammas stop.
template <class F>
CoeffSequence<F> coeff_sequence(const QParam& q, int len) {
  CoeffSequence<F> c;
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 0; k < len; ++k) {
    if (k >= 2) a = a * q_factor<F>(q, k - 1);
    if (k >= 1) fact = fact * F::real(k);
    c.alphas.push_back(a);
    if (!q.first_degeneracy(std::max(0, k - 1))) c.gammas.push_back(fact / a);
  }
  return c;
}

// Weight sequence of the (a,b) adjoint theorem:
// gamma~_n = gamma~_0 / prod_{k=1..n} (1 + (b/a)(1 - 1/k)).
template <class F>
typename F::Complex gamma_ab(long long n, const typename F::Complex& a,
                             const typename F::Complex& b,
                             const typename F::Complex& gamma0) {
  if (F::is_zero(a)) throw std::domain_error("gamma_ab: a must be nonzero");
  typename F::Complex ba = b / a;
  typename F::Complex prod = F::to_complex(F::real(1));
  for (long long k = 1; k <= n; ++k) {
    typename F::Complex one = F::to_complex(F::real(1));
    typename F::Complex factor =
        one + ba * F::to_complex(F::real(1) - F::ratio(1, k));
    if (F::is_zero(factor))
      throw std::domain_error("gamma_ab: zero factor at k = " + std::to_string(k));
    prod = prod * factor;
  }
  return gamma0 / prod;
}

// Coefficients alpha_k/k! of the kernel series, as a truncated series in the
// variable z*conj(w).
template <class F>
TruncatedSeries<F> kernel_coeffs(const QParam& q, int trunc) {
  TruncatedSeries<F> s(trunc);
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 0; k <= trunc; ++k) {
    if (k >= 2) a = a * q_factor<F>(q, k - 1);
    if (k >= 1) fact = fact * F::real(k);
    s[k] = F::to_complex(a / fact);
  }
  return s;
}

template <class F>
void require_in_disk(const QParam& q, double abs_arg) {
  if (q.is(1.0)) return;
  double lim = radius(q);
  if (!q.exact()) lim *= (1.0 - kDiskMargin);
  if (!(abs_arg < lim))
    throw out_of_disk_error("argument modulus " + std::to_string(abs_arg) +
                            " is not inside the convergence disk (radius " +
                            std::to_string(radius(q)) + ")");
}

// Partial sum of K_q(z, w) = sum_k (alpha_k/k!) (z*conj(w))^k.
template <class F>
typename F::Complex kernel_eval(const typename F::Complex& z,
                                const typename F::Complex& w, const QParam& q,
                                int trunc) {
  typename F::Complex u = z * F::conj_c(w);
  require_in_disk<F>(q, abs_cd<F>(u));
  return eval(kernel_coeffs<F>(q, trunc), u);
}

struct KreinSignature {
  std::vector<int> signs;  // sign of gamma_k, k = 0..N
  int n_plus = 0;
  int n_minus = 0;
  std::optional<int> first_flip;  // first k with sign -1
};

// Signs of gamma_k computed factor by factor from the alpha product.
inline KreinSignature sign_signature(const QParam& q, int N) {
  KreinSignature sig;
  int s = 1;
  for (int k = 0; k <= N; ++k) {
    if (k >= 2) {
      require_nondegenerate<FloatField>(q, k - 1);
      double f = q.exact() ? static_cast<double>(q_factor<ExactField>(q, k - 1))
                           : q_factor<FloatField>(q, k - 1);
      if (f < 0) s = -s;
    }
    sig.signs.push_back(s);
    if (s > 0) {
      ++sig.n_plus;
    } else {
      ++sig.n_minus;
      if (!sig.first_flip) sig.first_flip = k;
    }
  }
  return sig;
}

struct FhabResult {
  std::complex<double> series_value;
  std::complex<double> closed_form;
};

// Partial sum 1 + sum_n z^n prod_{k=1..n}(1 + alpha(1 - 1/k)) next to its
// closed form (1-(1+alpha)z)^{-1/(alpha+1)}, or e^z when alpha = -1.
inline FhabResult fhab_check(std::complex<double> alpha, std::complex<double> z,
                             int trunc) {
  bool exponential_case = std::abs(alpha + 1.0) < 1e-14;
  if (!exponential_case && !(std::abs((alpha + 1.0) * z) < 1.0))
    throw out_of_disk_error("fhab_check: |(1+alpha) z| must be < 1");
  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  for (int n = 1; n <= trunc; ++n) {
    term *= z * (1.0 + alpha * (1.0 - 1.0 / static_cast<double>(n)));
    sum += term;
  }
  std::complex<double> closed =
      exponential_case ? std::exp(z)
                       : std::pow(1.0 - (alpha + 1.0) * z, -1.0 / (alpha + 1.0));
  return {sum, closed};
}

// sum_k (alpha_k/k!) (zA)^k with a Frobenius-norm disk check.
inline Eigen::MatrixXcd matrix_q_exp(const Eigen::MatrixXcd& A,
                                     std::complex<double> z, const QParam& q,
                                     int trunc) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("matrix_q_exp: A must be square");
  require_in_disk<FloatField>(q, std::abs(z) * A.norm());
  auto coeffs = kernel_coeffs<FloatField>(q, trunc);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(A.rows(), A.cols());
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(A.rows(), A.cols());
  for (int k = 0; k <= trunc; ++k) {
    acc += coeffs[k] * pw;
    if (k < trunc) pw = (z * A) * pw;
  }
  return acc;
}

}  // namespace qts
