#pragma once

#include "qts/operators.hpp"
#include "qts/qcore.hpp"
#include "qts/series.hpp"

namespace qts {

template <class F>
struct JordanSolution {
  typename F::Complex f0;
  typename F::Complex lambda;
  TruncatedSeries<F> coeffs;
  double residual = 0.0;
  // Defect of the scaled closed-form candidate, when one was also built.
  double candidate_defect = 0.0;
};

// Max coefficient defect of (MzAdj - lambda I) f = e_q(lambda z) over degrees
// 0..N-1; the top degree is truncation-contaminated and excluded.
template <class F>
double jordan_residual(const TruncatedSeries<F>& f,
                       const typename F::Complex& lambda, const QParam& q, int N) {
  auto lowered = apply_op(OpKind::MzAdj, f, q);
  auto coeffs = kernel_coeffs<F>(q, N);
  typename F::Complex p = F::to_complex(F::real(1));
  double defect = 0.0;
  for (int k = 0; k <= N - 1; ++k) {
    typename F::Complex lhs = (k <= lowered.degree_bound() ? lowered[k]
                                                           : typename F::Complex{}) -
                              lambda * f[k];
    typename F::Complex rhs = coeffs[k] * p;
    defect = std::max(defect, abs_cd<F>(lhs - rhs));
    p = p * lambda;
  }
  return defect;
}

// Solves (MzAdj - I) f = e_q(z) by the coefficient recursion
//   f_{k+1} = f_k (kq-(k-1))/(k+1) + alpha_{k+1}/(k+1)!
// and cross-checks against the closed form f_k = f0 alpha_k/k! + alpha_k/(k-1)!.
template <class F>
JordanSolution<F> solve_jordan(const typename F::Complex& f0, const QParam& q, int N) {
  for (long long n = 1; n <= N; ++n) require_nondegenerate<F>(q, n);
  JordanSolution<F> sol{f0, F::to_complex(F::real(1)), TruncatedSeries<F>(N)};
  sol.coeffs[0] = f0;
  typename F::Real a = F::real(1);     // alpha_k
  typename F::Real fact = F::real(1);  // k!
  for (int k = 0; k < N; ++k) {
    typename F::Real a_next = (k + 1 >= 2) ? a * q_factor<F>(q, k) : a;
    typename F::Real fact_next = fact * F::real(k + 1);
    sol.coeffs[k + 1] =
        sol.coeffs[k] * F::to_complex(q_factor<F>(q, k) / F::real(k + 1)) +
        F::to_complex(a_next / fact_next);
    a = a_next;
    fact = fact_next;
  }
  sol.residual = jordan_residual(sol.coeffs, sol.lambda, q, N);
  return sol;
}

// Closed-form coefficients f_k = f0 alpha_k/k! + alpha_k/(k-1)!, for the
// recursion/closed-form agreement checks.
template <class F>
TruncatedSeries<F> jordan_closed_form(const typename F::Complex& f0,
                                      const QParam& q, int N) {
  TruncatedSeries<F> f(N);
  f[0] = f0;
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 1; k <= N; ++k) {
    if (k >= 2) a = a * q_factor<F>(q, k - 1);
    fact = fact * F::real(k);
    // alpha_k/(k-1)! = k * alpha_k / k!
    f[k] = f0 * F::to_complex(a / fact) + F::to_complex(F::real(k) * a / fact);
  }
  return f;
}

// Solves (MzAdj - lambda I) f = e_q(lambda z) degree by degree:
//   f_{k+1} = (kq-(k-1))/(k+1) * (lambda f_k + alpha_k lambda^k / k!).
// The corollary's scaled candidate is also built and its residual recorded;
// substitution suggests the candidate solves the lambda-scaled right-hand
// side instead, so only the recurrence solution is returned.
template <class F>
JordanSolution<F> solve_shifted(const typename F::Complex& f0,
                                const typename F::Complex& lambda, const QParam& q,
                                int N) {
  for (long long n = 1; n <= N; ++n) require_nondegenerate<F>(q, n);
  JordanSolution<F> sol{f0, lambda, TruncatedSeries<F>(N)};
  sol.coeffs[0] = f0;
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  typename F::Complex lam_pow = F::to_complex(F::real(1));  // lambda^k
  for (int k = 0; k < N; ++k) {
    typename F::Complex rhs = F::to_complex(a / fact) * lam_pow;
    sol.coeffs[k + 1] = F::to_complex(q_factor<F>(q, k) / F::real(k + 1)) *
                        (lambda * sol.coeffs[k] + rhs);
    a = (k + 1 >= 2) ? a * q_factor<F>(q, k) : a;
    fact = fact * F::real(k + 1);
    lam_pow = lam_pow * lambda;
  }
  sol.residual = jordan_residual(sol.coeffs, lambda, q, N);
  auto candidate = scale_argument(jordan_closed_form<F>(f0, q, N), lambda);
  sol.candidate_defect = jordan_residual(candidate, lambda, q, N);
  return sol;
}

}  // namespace qts
