#pragma once

#include <string>
#include <vector>

#include "qts/qcore.hpp"
#include "qts/series.hpp"
#include "qts/space.hpp"
#include "qts/stirling.hpp"

namespace qts {

// The shift algebra. Every operator acts diagonally on monomials with a
// degree shift of +/-1:
//   Mz       z^k -> z^{k+1}
//   R0       z^k -> z^{k-1}                      (R0 1 = 0)
//   Integ    z^k -> z^{k+1}/(k+1)
//   MzAdj    z^k -> k/((k-1)q-(k-2)) z^{k-1}     (MzAdj 1 = 0)
//   R0Adj    z^k -> (kq-(k-1))/(k+1) z^{k+1}
//   IntegAdj z^k -> 1/((k-1)q-(k-2)) z^{k-1}     (IntegAdj 1 = 0)
enum class OpKind { Mz, R0, Integ, MzAdj, R0Adj, IntegAdj };

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::Mz: return "Mz";
    case OpKind::R0: return "R0";
    case OpKind::Integ: return "Integ";
    case OpKind::MzAdj: return "MzAdj";
    case OpKind::R0Adj: return "R0Adj";
    case OpKind::IntegAdj: return "IntegAdj";
  }
  return "?";
}

inline int op_degree_shift(OpKind k) {
  switch (k) {
    case OpKind::Mz:
    case OpKind::Integ:
    case OpKind::R0Adj:
      return +1;
    default:
      return -1;
  }
}

// Scalar factor of op z^k (the image is factor * z^{k + shift}). For the
// lowering operators k = 0 maps to zero.
template <class F>
typename F::Real op_monomial_factor(OpKind op, long long k, const QParam& q) {
  switch (op) {
    case OpKind::Mz:
      return F::real(1);
    case OpKind::R0:
      return F::real(1);
    case OpKind::Integ:
      return F::real(1) / F::real(k + 1);
    case OpKind::R0Adj:
      return q_factor<F>(q, k) / F::real(k + 1);
    case OpKind::MzAdj:
      if (k >= 2) require_nondegenerate<F>(q, k - 1);
      return F::real(k) / q_factor<F>(q, k - 1);
    case OpKind::IntegAdj:
      if (k >= 2) require_nondegenerate<F>(q, k - 1);
      return F::real(1) / q_factor<F>(q, k - 1);
  }
  return F::real(0);
}

// Linear extension of the monomial action. Raising operators grow the degree
// bound by one, lowering operators shrink it.
template <class F>
TruncatedSeries<F> apply_op(OpKind op, const TruncatedSeries<F>& f, const QParam& q) {
  int n = f.degree_bound();
  // Factors are only evaluated on nonzero coefficients, so a degenerate
  // weight outside the support (e.g. beyond a finite-dimensional space) does
  // not poison the whole series.
  if (op_degree_shift(op) == +1) {
    TruncatedSeries<F> r(n + 1);
    for (int k = 0; k <= n; ++k)
      if (!F::is_zero(f[k]))
        r[k + 1] = F::to_complex(op_monomial_factor<F>(op, k, q)) * f[k];
    return r;
  }
  TruncatedSeries<F> r(std::max(0, n - 1));
  for (int k = 1; k <= n; ++k)
    if (!F::is_zero(f[k]))
      r[k - 1] = F::to_complex(op_monomial_factor<F>(op, k, q)) * f[k];
  return r;
}

struct CheckReport {
  double max_defect = 0.0;
  bool exact_zero = true;  // meaningful in exact mode
  std::string detail;

  void record(double defect) {
    if (defect > max_defect) max_defect = defect;
    if (defect != 0.0) exact_zero = false;
  }
};

// Checks [A z^n, z^k] = [z^n, B z^k] for all n, k <= N.
template <class F>
CheckReport verify_adjoint(OpKind opA, OpKind opB, const QParam& q, int N) {
  CheckReport rep;
  rep.detail = std::string(op_name(opA)) + " vs " + op_name(opB);
  auto ctx = InnerProductContext<F>::make(q, N + 1);
  for (int n = 0; n <= N; ++n) {
    auto zn = TruncatedSeries<F>::monomial(n, N);
    auto Azn = apply_op(opA, zn, q);
    for (int k = 0; k <= N; ++k) {
      auto zk = TruncatedSeries<F>::monomial(k, N);
      auto Bzk = apply_op(opB, zk, q);
      auto lhs = indefinite_inner(Azn, zk, ctx);
      auto rhs = indefinite_inner(zn, Bzk, ctx);
      // relative defect: the pairings themselves grow like gamma_k
      double scale = std::max({1.0, abs_cd<F>(lhs), abs_cd<F>(rhs)});
      rep.record(abs_cd<F>(lhs - rhs) / scale);
    }
  }
  return rep;
}

// R0Adj = (q-1) Mz - (q-2) Integ on monomials through degree N.
template <class F>
CheckReport check_identity_r0adj(const QParam& q, int N) {
  CheckReport rep;
  rep.detail = "R0Adj = (q-1) Mz - (q-2) Integ";
  typename F::Real qv = F::q_of(q);
  for (int k = 0; k <= N; ++k) {
    auto zk = TruncatedSeries<F>::monomial(k, N);
    auto lhs = apply_op(OpKind::R0Adj, zk, q);
    auto rhs = add(scale(apply_op(OpKind::Mz, zk, q), F::to_complex(qv - F::real(1))),
                   scale(apply_op(OpKind::Integ, zk, q),
                         F::to_complex(F::real(2) - qv)));
    for (int j = 0; j <= lhs.degree_bound(); ++j)
      rep.record(abs_cd<F>(lhs[j] - rhs[j]));
  }
  return rep;
}

// (q-1) MzAdj = R0 + (q-2) IntegAdj on monomials through degree N (q != 1).
template <class F>
CheckReport check_identity_mzadj(const QParam& q, int N) {
  if (q.is(1.0))
    throw std::domain_error("check_identity_mzadj: identity requires q != 1");
  CheckReport rep;
  rep.detail = "(q-1) MzAdj = R0 + (q-2) IntegAdj";
  typename F::Real qv = F::q_of(q);
  for (int k = 0; k <= N; ++k) {
    auto zk = TruncatedSeries<F>::monomial(k, N);
    auto lhs = scale(apply_op(OpKind::MzAdj, zk, q), F::to_complex(qv - F::real(1)));
    auto rhs = add(apply_op(OpKind::R0, zk, q),
                   scale(apply_op(OpKind::IntegAdj, zk, q),
                         F::to_complex(qv - F::real(2))));
    for (int j = 0; j <= lhs.degree_bound(); ++j)
      rep.record(abs_cd<F>(lhs[j] - rhs[j]));
  }
  return rep;
}

// MzAdj applied to the truncated kernel slice K_q(., w) against
// conj(w) * slice; compared through degree trunc-1.
template <class F>
CheckReport kernel_eigen_check(const typename F::Complex& w, const QParam& q,
                               int trunc) {
  double r2 = abs_cd<F>(w) * abs_cd<F>(w);
  require_in_disk<F>(q, r2);
  CheckReport rep;
  rep.detail = "MzAdj K_q(., w) = conj(w) K_q(., w)";
  typename F::Complex wbar = F::conj_c(w);
  TruncatedSeries<F> slice(trunc);
  {
    auto coeffs = kernel_coeffs<F>(q, trunc);
    typename F::Complex p = F::to_complex(F::real(1));
    for (int k = 0; k <= trunc; ++k) {
      slice[k] = coeffs[k] * p;
      p = p * wbar;
    }
  }
  auto lowered = apply_op(OpKind::MzAdj, slice, q);
  for (int k = 0; k <= trunc - 1; ++k)
    rep.record(abs_cd<F>(lowered[k] - wbar * slice[k]));
  return rep;
}

struct BoundednessProfile {
  std::vector<double> ratios;  // |gamma_{k+1}|/|gamma_k|, k = 0..K
  double limit;                // 1/|1-q| for q != 1, +inf at q = 1
};

inline BoundednessProfile mz_boundedness_profile(const QParam& q, int K) {
  BoundednessProfile p;
  p.limit = radius(q);
  for (int k = 0; k <= K; ++k) {
    // gamma_{k+1}/gamma_k = (k+1)/(kq-(k-1))
    if (k >= 1) require_nondegenerate<FloatField>(q, k);
    p.ratios.push_back(static_cast<double>(k + 1) /
                       std::abs(static_cast<double>(k) * q.value() -
                                static_cast<double>(k - 1)));
  }
  return p;
}

// Commutator of a lowering/raising pair evaluated on z^k, by three routes:
// the closed-form eigenvalue, direct two-sided application, and the composite
// operator form.
template <class F>
struct CommutatorValues {
  typename F::Real closed_form;
  typename F::Real direct;
  typename F::Real operator_form;
};

// [R0, R0Adj] z^k = z^k for k = 0, ((q-2)/(k(k+1))) z^k = (q-2) R0 Integ^2 R0 z^k
// for k >= 1.
template <class F>
CommutatorValues<F> commutator_r0(int k, const QParam& q) {
  CommutatorValues<F> v{};
  typename F::Real qv = F::q_of(q);
  if (k == 0) {
    v.closed_form = F::real(1);
  } else {
    v.closed_form = (qv - F::real(2)) / (F::real(k) * F::real(k + 1));
  }
  int bound = k + 2;
  auto zk = TruncatedSeries<F>::monomial(k, bound);
  auto ab = apply_op(OpKind::R0, apply_op(OpKind::R0Adj, zk, q), q);
  auto ba = apply_op(OpKind::R0Adj, apply_op(OpKind::R0, zk, q), q);
  auto comm = sub(ab, ba);
  v.direct = F::re_of(comm[k]);
  if (k >= 1) {
    auto t = apply_op(OpKind::R0, zk, q);
    t = apply_op(OpKind::Integ, t, q);
    t = apply_op(OpKind::Integ, t, q);
    t = apply_op(OpKind::R0, t, q);
    v.operator_form = F::re_of(F::to_complex(qv - F::real(2)) * t[k]);
  } else {
    v.operator_form = v.direct;
  }
  return v;
}

// [Mz, MzAdj] z^k: -1 at k = 0, (q-2)/q at k = 1, and
// (q-2)/([kq-(k-1)][(k-1)q-(k-2)]) for k >= 2. The degree-preserving
// operator form is (q-2) Mz IntegAdj^2 Mz (two raisings around the double
// lowering; composing IntegAdj^2 directly after R0^2 would land at degree
// k-4 and cannot reproduce the eigenvalue).
template <class F>
CommutatorValues<F> commutator_mz(int k, const QParam& q) {
  CommutatorValues<F> v{};
  typename F::Real qv = F::q_of(q);
  if (k == 0) {
    v.closed_form = F::real(0) - F::real(1);
  } else {
    v.closed_form =
        (qv - F::real(2)) / (q_factor<F>(q, k) * q_factor<F>(q, k - 1));
  }
  int bound = k + 2;
  auto zk = TruncatedSeries<F>::monomial(k, bound);
  auto ab = apply_op(OpKind::Mz, apply_op(OpKind::MzAdj, zk, q), q);
  auto ba = apply_op(OpKind::MzAdj, apply_op(OpKind::Mz, zk, q), q);
  auto comm = sub(ab, ba);
  v.direct = F::re_of(comm[k]);
  if (k >= 1) {
    auto t = apply_op(OpKind::Mz, zk, q);
    t = apply_op(OpKind::IntegAdj, t, q);
    t = apply_op(OpKind::IntegAdj, t, q);
    t = apply_op(OpKind::Mz, t, q);
    v.operator_form = F::re_of(F::to_complex(qv - F::real(2)) * t[k]);
  } else {
    v.operator_form = v.direct;
  }
  return v;
}

// lambda(k; q), the eigenvalue of [Mz, MzAdj] on z^k for k >= 1. The k = 1
// value (q-2)/q is the general formula's specialization.
template <class F>
typename F::Real commutator_lambda(int k, const QParam& q) {
  typename F::Real qv = F::q_of(q);
  return (qv - F::real(2)) / (q_factor<F>(q, k) * q_factor<F>(q, k - 1));
}

// Defect of (Mz MzAdj)^n z^k = sum_j C(n,j) Mz^j MzAdj^j z^k with
// lambda = lambda(k; q). Informative for n >= 2: the decomposition treats
// lambda as degree-independent while MzAdj moves between degrees.
template <class F>
double stirling_expansion_check(int n, int k, const QParam& q) {
  auto table = stirling_table(n);
  typename F::Real lambda = commutator_lambda<F>(k, q);
  int bound = k + n + 1;
  auto zk = TruncatedSeries<F>::monomial(k, bound);

  auto lhs = zk;
  for (int i = 0; i < n; ++i)
    lhs = apply_op(OpKind::Mz, apply_op(OpKind::MzAdj, lhs, q), q);

  TruncatedSeries<F> rhs(bound);
  for (int j = 1; j <= n; ++j) {
    auto t = zk;
    for (int i = 0; i < j; ++i) t = apply_op(OpKind::MzAdj, t, q);
    for (int i = 0; i < j; ++i) t = apply_op(OpKind::Mz, t, q);
    typename F::Real c = table.entry(n, j).template eval<F>(lambda);
    // pad t to the common bound
    TruncatedSeries<F> tp(bound);
    for (int d = 0; d <= std::min(bound, t.degree_bound()); ++d) tp[d] = t[d];
    rhs = add(rhs, scale(tp, F::to_complex(c)));
  }
  double defect = 0.0;
  for (int d = 0; d <= std::min(lhs.degree_bound(), rhs.degree_bound()); ++d)
    defect = std::max(defect, abs_cd<F>(lhs[d] - rhs[d]));
  return defect;
}

}  // namespace qts
