#include <doctest.h>

#include <cmath>
#include <complex>

#include "qts/operators.hpp"

using namespace qts;
using cd = std::complex<double>;
using FS = TruncatedSeries<FloatField>;
using ES = TruncatedSeries<ExactField>;

namespace {
const std::vector<QParam> kExactSample = {QParam(1, 3), QParam(3, 5), QParam(1, 1),
                                          QParam(3, 2), QParam(2, 1), QParam(3, 1)};
}

TEST_CASE("monomial actions") {
  // Mz z^2 = z^3, R0 z^3 = z^2, R0 1 = 0
  QParam q(0.7);
  auto z2 = FS::monomial(2, 5);
  CHECK(apply_op(OpKind::Mz, z2, q)[3] == cd(1.0));
  CHECK(apply_op(OpKind::R0, FS::monomial(3, 5), q)[2] == cd(1.0));
  auto r0of1 = apply_op(OpKind::R0, FS::monomial(0, 5), q);
  for (int k = 0; k <= r0of1.degree_bound(); ++k) CHECK(r0of1[k] == cd(0.0));

  // Integ z^3 = z^4/4
  CHECK(apply_op(OpKind::Integ, FS::monomial(3, 5), q)[4] == cd(0.25));

  // MzAdj z^2 = (2/q) z
  for (auto& qe : kExactSample) {
    auto v = apply_op(OpKind::MzAdj, ES::monomial(2, 4), qe);
    CHECK(v[1].re == Rational(2) / qe.as_rational());
  }
  // MzAdj 1 = 0, IntegAdj 1 = 0
  CHECK(apply_op(OpKind::MzAdj, FS::monomial(0, 3), q) == FS(2));
  CHECK(apply_op(OpKind::IntegAdj, FS::monomial(0, 3), q) == FS(2));

  // IntegAdj = (1/k) MzAdj on z^k
  for (int k = 1; k <= 8; ++k) {
    auto a = apply_op(OpKind::IntegAdj, ES::monomial(k, 9), QParam(3, 5));
    auto b = apply_op(OpKind::MzAdj, ES::monomial(k, 9), QParam(3, 5));
    CHECK(a[k - 1] * RationalComplex{Rational(k)} == b[k - 1]);
  }

  // R0Adj z^k = (kq-(k-1))/(k+1) z^{k+1}
  auto r = apply_op(OpKind::R0Adj, ES::monomial(3, 5), QParam(3, 5));
  CHECK(r[4].re == (Rational(3) * Rational(3, 5) - 2) / 4);

  // q = 1: MzAdj z^k = k z^{k-1} (classical annihilation)
  for (int k = 1; k <= 6; ++k)
    CHECK(apply_op(OpKind::MzAdj, FS::monomial(k, 7), QParam(1.0))[k - 1] ==
          cd(static_cast<double>(k)));

  // q = 2: MzAdj = R0
  for (int k = 0; k <= 6; ++k)
    CHECK(apply_op(OpKind::MzAdj, ES::monomial(k, 7), QParam(2, 1)) ==
          apply_op(OpKind::R0, ES::monomial(k, 7), QParam(2, 1)));
}

TEST_CASE("degenerate q rejected by adjoint actions") {
  QParam q(3, 4);
  CHECK_THROWS_AS(apply_op(OpKind::MzAdj, ES::monomial(5, 6), q), degenerate_error);
  CHECK_THROWS_AS(apply_op(OpKind::IntegAdj, ES::monomial(5, 6), q), degenerate_error);
  // degrees within the finite-dimensional space are fine
  CHECK(apply_op(OpKind::MzAdj, ES::monomial(4, 6), q)[3].re == Rational(16));
}

TEST_CASE("adjoint pairs have exactly zero defect in rational mode") {
  for (auto& q : kExactSample) {
    if (auto d = q.first_degeneracy(31)) {
      (void)d;
      continue;
    }
    CHECK(verify_adjoint<ExactField>(OpKind::Mz, OpKind::MzAdj, q, 30).exact_zero);
    CHECK(verify_adjoint<ExactField>(OpKind::R0, OpKind::R0Adj, q, 30).exact_zero);
    CHECK(verify_adjoint<ExactField>(OpKind::Integ, OpKind::IntegAdj, q, 30).exact_zero);
  }
  // float mode stays tiny
  CHECK(verify_adjoint<FloatField>(OpKind::Mz, OpKind::MzAdj, QParam(0.6), 20)
            .max_defect < 1e-12);
}

TEST_CASE("operator identities") {
  for (auto& q : kExactSample) {
    CHECK(check_identity_r0adj<ExactField>(q, 30).exact_zero);
    if (!q.is(1.0)) CHECK(check_identity_mzadj<ExactField>(q, 30).exact_zero);
  }
  CHECK_THROWS_AS(check_identity_mzadj<FloatField>(QParam(1.0), 10),
                  std::domain_error);

  // q = 1: R0Adj reduces to Integ, so R0 and Integ are mutually adjoint
  QParam q1(1, 1);
  for (int k = 0; k <= 10; ++k)
    CHECK(apply_op(OpKind::R0Adj, ES::monomial(k, 11), q1) ==
          apply_op(OpKind::Integ, ES::monomial(k, 11), q1));
  CHECK(verify_adjoint<ExactField>(OpKind::R0, OpKind::Integ, q1, 20).exact_zero);

  // q = 2: R0Adj = Mz and MzAdj = R0
  QParam q2(2, 1);
  for (int k = 0; k <= 10; ++k) {
    CHECK(apply_op(OpKind::R0Adj, ES::monomial(k, 11), q2) ==
          apply_op(OpKind::Mz, ES::monomial(k, 11), q2));
  }
  CHECK(verify_adjoint<ExactField>(OpKind::Mz, OpKind::R0, q2, 20).exact_zero);

  // spot value: q = 3/5, k = 5: R0Adj z^5 = (5q-4)/6 z^6 = (-1/6) z^6
  auto lhs = apply_op(OpKind::R0Adj, ES::monomial(5, 7), QParam(3, 5));
  CHECK(lhs[6].re == Rational(-1, 6));
}

TEST_CASE("kernel eigen relation") {
  CHECK(kernel_eigen_check<FloatField>(cd(0.0), QParam(0.7), 32).max_defect == 0.0);
  CHECK(kernel_eigen_check<FloatField>(cd(0.5), QParam(1.0), 48).max_defect < 1e-12);
  CHECK(kernel_eigen_check<FloatField>(cd(0.4, 0.2), QParam(0.7), 48).max_defect <
        1e-10);
  // exact mode: defect is exactly zero
  CHECK(kernel_eigen_check<ExactField>(RationalComplex{Rational(1, 3), Rational(1, 5)},
                                       QParam(3, 5), 24)
            .exact_zero);
  // |w|^2 must lie in the disk (radius 1/0.3 at q = 0.7)
  CHECK_THROWS_AS(kernel_eigen_check<FloatField>(cd(1.9), QParam(0.7), 16),
                  out_of_disk_error);
}

TEST_CASE("boundedness profile") {
  // q = 1: ratios are k+1, unbounded
  auto p1 = mz_boundedness_profile(QParam(1.0), 10);
  for (int k = 0; k <= 10; ++k) CHECK(p1.ratios[k] == doctest::Approx(k + 1.0));
  CHECK(std::isinf(p1.limit));

  // q = 2: ratio tends to 1
  auto p2 = mz_boundedness_profile(QParam(2.0), 50);
  CHECK(p2.ratios[50] == doctest::Approx(51.0 / 51.0));
  CHECK(p2.limit == doctest::Approx(1.0));

  // q = 0.4: limit 1/0.6, and the ratio matches the gamma quotient computed
  // independently from gamma()
  auto p = mz_boundedness_profile(QParam(0.4), 30);
  CHECK(p.limit == doctest::Approx(1.0 / 0.6));
  for (int k = 1; k <= 30; ++k) {
    double quot = std::abs(gamma<FloatField>(k + 1, QParam(0.4)) /
                           gamma<FloatField>(k, QParam(0.4)));
    CHECK(p.ratios[k] == doctest::Approx(quot).epsilon(1e-12));
  }
  // finite supremum over the prefix for q != 1 (the peak sits where
  // kq-(k-1) is closest to zero, here k = 2)
  double sup = 0.0;
  for (double r : p.ratios) sup = std::max(sup, r);
  CHECK(sup == doctest::Approx(15.0));
}

TEST_CASE("commutator [R0, R0Adj]") {
  for (auto& q : kExactSample) {
    if (q.first_degeneracy(27)) continue;
    for (int k = 0; k <= 25; ++k) {
      auto v = commutator_r0<ExactField>(k, q);
      CHECK(v.direct == v.closed_form);
      CHECK(v.operator_form == v.closed_form);
    }
  }
  auto v0 = commutator_r0<ExactField>(0, QParam(3, 5));
  CHECK(v0.closed_form == Rational(1));
  // q = 2: zero for k >= 1
  for (int k = 1; k <= 10; ++k)
    CHECK(commutator_r0<ExactField>(k, QParam(2, 1)).direct == 0);
  // q = 1, k = 3: (1-2)/(3*4) = -1/12
  CHECK(commutator_r0<ExactField>(3, QParam(1, 1)).direct == Rational(-1, 12));
}

TEST_CASE("commutator [Mz, MzAdj]") {
  for (auto& q : kExactSample) {
    if (q.first_degeneracy(27)) continue;
    for (int k = 0; k <= 25; ++k) {
      auto v = commutator_mz<ExactField>(k, q);
      CHECK(v.direct == v.closed_form);
      CHECK(v.operator_form == v.closed_form);
    }
  }
  CHECK(commutator_mz<ExactField>(0, QParam(3, 5)).closed_form == Rational(-1));
  // k = 1 value (q-2)/q
  for (auto& q : kExactSample)
    CHECK(commutator_mz<ExactField>(1, q).direct ==
          (q.as_rational() - 2) / q.as_rational());
  // printed lambda displays: lambda(2,q) = (q-2)/(2(q-1/2)q),
  // lambda(3,q) = (q-2)/(6(q-2/3)(q-1/2))
  Rational q(3, 5);
  CHECK(commutator_lambda<ExactField>(2, QParam(3, 5)) ==
        (q - 2) / (2 * (q - Rational(1, 2)) * q));
  CHECK(commutator_lambda<ExactField>(3, QParam(3, 5)) ==
        (q - 2) / (6 * (q - Rational(2, 3)) * (q - Rational(1, 2))));
  // general formula at k = 1 reduces to (q-2)/q
  CHECK(commutator_lambda<ExactField>(1, QParam(3, 5)) == (q - 2) / q);
}

TEST_CASE("stirling table symbolic rows") {
  auto t = stirling_table(10);
  // row shapes and fixed entries
  for (int n = 1; n <= 10; ++n) {
    CHECK(static_cast<int>(t.rows[n - 1].size()) == n);
    CHECK(t.entry(n, n) == LambdaPoly{{1}});
    // first column is (-lambda)^{n-1}
    LambdaPoly first;
    first.c.assign(n, BigInt(0));
    first.c[n - 1] = (n % 2 == 1) ? 1 : -1;
    CHECK(t.entry(n, 1) == first);
  }
  // row 3: [lambda^2, -3 lambda, 1]
  CHECK(t.entry(3, 1) == LambdaPoly{{0, 0, 1}});
  CHECK(t.entry(3, 2) == LambdaPoly{{0, -3}});
  CHECK(t.entry(3, 3) == LambdaPoly{{1}});
  // row 5: [lambda^4, -15 lambda^3, 25 lambda^2, -10 lambda, 1]
  CHECK(t.entry(5, 1) == LambdaPoly{{0, 0, 0, 0, 1}});
  CHECK(t.entry(5, 2) == LambdaPoly{{0, 0, 0, -15}});
  CHECK(t.entry(5, 3) == LambdaPoly{{0, 0, 25}});
  CHECK(t.entry(5, 4) == LambdaPoly{{0, -10}});
  CHECK(t.entry(5, 5) == LambdaPoly{{1}});
  CHECK(t.entry(5, 2).str() == "-15*lambda^3");
  CHECK(t.entry(3, 1).str() == "lambda^2");
}

TEST_CASE("lambda = -1 reproduces second-kind Stirling numbers") {
  // independent oracle: S(n,j) = j*S(n-1,j) + S(n-1,j-1)
  const int N = 10;
  std::vector<std::vector<long long>> S(N + 1, std::vector<long long>(N + 1, 0));
  S[0][0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int j = 1; j <= n; ++j) S[n][j] = j * S[n - 1][j] + S[n - 1][j - 1];

  auto t = stirling_table(N);
  for (int n = 1; n <= N; ++n)
    for (int j = 1; j <= n; ++j) {
      Rational v = t.entry(n, j).eval<ExactField>(Rational(-1));
      CHECK(v == Rational(S[n][j]));
    }
}

TEST_CASE("stirling expansion defect") {
  // n = 1 is the definition: exactly zero for any k
  for (int k = 1; k <= 8; ++k)
    CHECK(stirling_expansion_check<ExactField>(1, k, QParam(3, 5)) == 0.0);
  // q = 2: lambda = 0 and only the j = n term survives, so both sides are
  // z^k whenever k >= n (below that R0^n annihilates the monomial)
  for (int n = 1; n <= 4; ++n)
    for (int k = n; k <= 6; ++k)
      CHECK(stirling_expansion_check<ExactField>(n, k, QParam(2, 1)) == 0.0);
  // n = 2, k = 4, q = 0.6: defect is finite and reported (informative)
  double d = stirling_expansion_check<FloatField>(2, 4, QParam(0.6));
  CHECK(std::isfinite(d));
}
