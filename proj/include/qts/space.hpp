#pragma once

#include <vector>

#include "qts/qcore.hpp"
#include "qts/series.hpp"

namespace qts {

// Inner-product weights gamma_k up to a working bound. For degenerate
// q = (k-1)/k the context covers only degrees 0..k and inner products reject
// coefficients beyond that.
template <class F>
struct InnerProductContext {
  QParam q;
  std::vector<typename F::Real> gammas;
  std::optional<int> finite_dim;  // k for q = (k-1)/k

  static InnerProductContext make(const QParam& q, int degree_bound) {
    InnerProductContext ctx{q, {}, std::nullopt};
    if (auto n = q.first_degeneracy(degree_bound))
      ctx.finite_dim = static_cast<int>(*n);
    int top = ctx.finite_dim ? std::min(degree_bound, *ctx.finite_dim) : degree_bound;
    typename F::Real a = F::real(1);
    typename F::Real fact = F::real(1);
    for (int k = 0; k <= top; ++k) {
      if (k >= 2) a = a * q_factor<F>(q, k - 1);
      if (k >= 1) fact = fact * F::real(k);
      ctx.gammas.push_back(fact / a);
    }
    return ctx;
  }

  int degree_bound() const { return static_cast<int>(gammas.size()) - 1; }

  void require_representable(const TruncatedSeries<F>& f) const {
    for (int k = degree_bound() + 1; k <= f.degree_bound(); ++k)
      if (!F::is_zero(f[k])) {
        if (finite_dim)
          throw finite_dimensional_error(
              *finite_dim, "coefficient at degree " + std::to_string(k) +
                               " lies outside the finite-dimensional space (dim " +
                               std::to_string(*finite_dim + 1) + ")");
        throw std::domain_error("series degree exceeds the context bound");
      }
  }
};

// [f, g] = sum_k gamma_k conj(g_k) f_k.
template <class F>
typename F::Complex indefinite_inner(const TruncatedSeries<F>& f,
                                     const TruncatedSeries<F>& g,
                                     const InnerProductContext<F>& ctx) {
  ctx.require_representable(f);
  ctx.require_representable(g);
  int n = std::min({f.degree_bound(), g.degree_bound(), ctx.degree_bound()});
  typename F::Complex acc{};
  for (int k = 0; k <= n; ++k)
    acc += F::to_complex(ctx.gammas[k]) * F::conj_c(g[k]) * f[k];
  return acc;
}

// <f, g> = sum_k |gamma_k| conj(g_k) f_k, the definite form of the space.
template <class F>
typename F::Complex definite_inner(const TruncatedSeries<F>& f,
                                   const TruncatedSeries<F>& g,
                                   const InnerProductContext<F>& ctx) {
  ctx.require_representable(f);
  ctx.require_representable(g);
  int n = std::min({f.degree_bound(), g.degree_bound(), ctx.degree_bound()});
  typename F::Complex acc{};
  for (int k = 0; k <= n; ++k)
    acc += F::to_complex(F::abs_r(ctx.gammas[k])) * F::conj_c(g[k]) * f[k];
  return acc;
}

// Fundamental symmetry J: flips coefficients where gamma_k < 0.
template <class F>
TruncatedSeries<F> apply_fundamental_symmetry(const TruncatedSeries<F>& f,
                                              const InnerProductContext<F>& ctx) {
  ctx.require_representable(f);
  TruncatedSeries<F> r = f;
  int n = std::min(f.degree_bound(), ctx.degree_bound());
  for (int k = 0; k <= n; ++k)
    if (F::to_double(ctx.gammas[k]) < 0) r[k] = -(r[k]);
  return r;
}

// [f, K_q(., z)], which reproduces f(z) for polynomials within the bound.
template <class F>
typename F::Complex reproduce(const TruncatedSeries<F>& f,
                              const typename F::Complex& z,
                              const InnerProductContext<F>& ctx) {
  ctx.require_representable(f);
  int n = std::min(f.degree_bound(), ctx.degree_bound());
  // Kernel slice K_q(., z): coefficient k is (alpha_k/k!) conj(z)^k.
  TruncatedSeries<F> slice(n);
  typename F::Complex zbar = F::conj_c(z);
  typename F::Complex p = F::to_complex(F::real(1));
  typename F::Real a = F::real(1);
  typename F::Real fact = F::real(1);
  for (int k = 0; k <= n; ++k) {
    if (k >= 2) a = a * q_factor<F>(ctx.q, k - 1);
    if (k >= 1) fact = fact * F::real(k);
    slice[k] = F::to_complex(a / fact) * p;
    p = p * zbar;
  }
  return indefinite_inner(f, slice, ctx);
}

}  // namespace qts
