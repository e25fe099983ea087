#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qts/space.hpp"

using namespace qts;
using cd = std::complex<double>;
using FS = TruncatedSeries<FloatField>;
using ES = TruncatedSeries<ExactField>;

TEST_CASE("monomials are orthogonal with norms gamma_k") {
  for (auto [num, den] : {std::pair{1LL, 3LL}, {3LL, 5LL}, {1LL, 1LL}, {3LL, 2LL},
                          {2LL, 1LL}}) {
    QParam q(num, den);
    auto ctx = InnerProductContext<ExactField>::make(q, 12);
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= 12; ++k) {
        auto v = indefinite_inner(ES::monomial(n, 12), ES::monomial(k, 12), ctx);
        if (n == k) {
          CHECK(v.re == gamma<ExactField>(k, q));
          CHECK(v.im == 0);
        } else {
          CHECK(v == RationalComplex{});
        }
      }
  }
}

TEST_CASE("specific inner products") {
  auto ctx = InnerProductContext<ExactField>::make(QParam(3, 4), 4);
  CHECK(indefinite_inner(ES::monomial(0, 4), ES::monomial(0, 4), ctx) ==
        RationalComplex{1});
  // [z^2, z^2] = 2!/alpha_2 = 2/(3/4) = 8/3
  CHECK(indefinite_inner(ES::monomial(2, 4), ES::monomial(2, 4), ctx).re ==
        Rational(8, 3));
  // ||z^3||^2 at q = 1 is 3! = 6
  auto ctx1 = InnerProductContext<FloatField>::make(QParam(1.0), 8);
  CHECK(definite_inner(FS::monomial(3, 8), FS::monomial(3, 8), ctx1) == cd(6.0));
}

TEST_CASE("definite form is positive and matches indefinite for q >= 1") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double qq : {1.0, 1.5, 2.0, 3.0}) {
    auto ctx = InnerProductContext<FloatField>::make(QParam(qq), 10);
    for (int trial = 0; trial < 10; ++trial) {
      FS f(10);
      for (int k = 0; k <= 10; ++k) f[k] = cd(u(rng), u(rng));
      cd d = definite_inner(f, f, ctx);
      CHECK(d.real() > 0.0);
      // gamma_k reaches ~10! here, so compare relative to the magnitude
      CHECK(std::abs(d.imag()) < 1e-12 * std::abs(d));
      CHECK(std::abs(d - indefinite_inner(f, f, ctx)) < 1e-12 * std::abs(d));
    }
  }
}

TEST_CASE("fundamental symmetry") {
  // q >= 1: J is the identity
  auto ctx1 = InnerProductContext<FloatField>::make(QParam(1.5), 10);
  FS f(10);
  for (int k = 0; k <= 10; ++k) f[k] = cd(k, -k);
  CHECK(apply_fundamental_symmetry(f, ctx1) == f);

  // Krein case: J flips exactly the negative-weight coefficients, J^2 = id
  QParam q(3, 5);
  auto ctx = InnerProductContext<ExactField>::make(q, 12);
  auto sig = sign_signature(q, 12);
  CHECK(sig.n_minus > 0);
  ES g(12);
  for (int k = 0; k <= 12; ++k) g[k] = RationalComplex{Rational(k + 1, 7)};
  auto jg = apply_fundamental_symmetry(g, ctx);
  for (int k = 0; k <= 12; ++k)
    CHECK(jg[k] == (sig.signs[k] < 0 ? -g[k] : g[k]));
  CHECK(apply_fundamental_symmetry(jg, ctx) == g);

  // J relates the two forms: [f, g] = <f, Jg> and <f, g> = [f, Jg]
  ES h(12);
  for (int k = 0; k <= 12; ++k) h[k] = RationalComplex{Rational(1, k + 2), Rational(k)};
  CHECK(indefinite_inner(g, h, ctx) ==
        definite_inner(g, apply_fundamental_symmetry(h, ctx), ctx));
  CHECK(definite_inner(g, h, ctx) ==
        indefinite_inner(g, apply_fundamental_symmetry(h, ctx), ctx));
}

TEST_CASE("negative squares sit exactly at the sign flips") {
  QParam q(0.6);
  auto ctx = InnerProductContext<FloatField>::make(q, 15);
  auto sig = sign_signature(q, 15);
  for (int k = 0; k <= 15; ++k) {
    double sq = indefinite_inner(FS::monomial(k, 15), FS::monomial(k, 15), ctx).real();
    CHECK((sq < 0) == (sig.signs[k] < 0));
  }
}

TEST_CASE("sesquilinearity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto ctx = InnerProductContext<FloatField>::make(QParam(0.6), 8);
  for (int trial = 0; trial < 10; ++trial) {
    FS f(8), g(8);
    for (int k = 0; k <= 8; ++k) {
      f[k] = cd(u(rng), u(rng));
      g[k] = cd(u(rng), u(rng));
    }
    cd lam(u(rng), u(rng)), mu(u(rng), u(rng));
    cd lhs = indefinite_inner(scale(f, lam), scale(g, mu), ctx);
    cd rhs = lam * std::conj(mu) * indefinite_inner(f, g, ctx);
    // |gamma_8| ~ 1e6 at q = 0.6 sets the roundoff scale
    CHECK(std::abs(lhs - rhs) < 1e-9);
    // hermitian symmetry
    CHECK(std::abs(indefinite_inner(f, g, ctx) -
                   std::conj(indefinite_inner(g, f, ctx))) < 1e-9);
  }
}

TEST_CASE("Cauchy-Schwarz for the definite form") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto ctx = InnerProductContext<FloatField>::make(QParam(0.45), 10);
  for (int trial = 0; trial < 20; ++trial) {
    FS f(10), g(10);
    for (int k = 0; k <= 10; ++k) {
      f[k] = cd(u(rng), u(rng));
      g[k] = cd(u(rng), u(rng));
    }
    double lhs = std::norm(definite_inner(f, g, ctx));
    double rhs = definite_inner(f, f, ctx).real() * definite_inner(g, g, ctx).real();
    CHECK(lhs <= rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("reproducing property") {
  auto ctx = InnerProductContext<FloatField>::make(QParam(0.6), 12);
  // constants and monomials reproduce
  FS one(12);
  one[0] = cd(1.0);
  CHECK(std::abs(reproduce(one, cd(0.3, 0.1), ctx) - cd(1.0)) < 1e-15);
  for (int m = 0; m <= 12; ++m) {
    cd z(0.21, -0.13);
    CHECK(std::abs(reproduce(FS::monomial(m, 12), z, ctx) - std::pow(z, m)) < 1e-14);
  }

  // random polynomials, several q
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double qq : {0.34, 0.6, 1.0, 1.5, 2.0}) {
    auto c = InnerProductContext<FloatField>::make(QParam(qq), 10);
    for (int trial = 0; trial < 20; ++trial) {
      FS f(10);
      for (int k = 0; k <= 10; ++k) f[k] = cd(u(rng), u(rng));
      cd z(0.2 * u(rng), 0.2 * u(rng));
      CHECK(std::abs(reproduce(f, z, c) - eval(f, z)) < 1e-10);
    }
  }

  // exact mode: rational polynomial at a rational point reproduces exactly
  auto ctxe = InnerProductContext<ExactField>::make(QParam(3, 5), 10);
  ES fe(10);
  for (int k = 0; k <= 10; ++k) fe[k] = RationalComplex{Rational(k, 3), Rational(1, k + 1)};
  RationalComplex z{Rational(1, 5), Rational(-1, 7)};
  CHECK(reproduce(fe, z, ctxe) == eval(fe, z));
}

TEST_CASE("finite-dimensional context rejects out-of-space coefficients") {
  QParam q(3, 4);  // dim 5: degrees 0..4
  auto ctx = InnerProductContext<ExactField>::make(q, 12);
  CHECK(ctx.finite_dim.has_value());
  CHECK(*ctx.finite_dim == 4);
  CHECK(ctx.degree_bound() == 4);

  ES ok(12);
  ok[4] = RationalComplex{1};
  CHECK(indefinite_inner(ok, ok, ctx).re == gamma<ExactField>(4, q));

  ES bad(12);
  bad[5] = RationalComplex{1};
  CHECK_THROWS_AS(indefinite_inner(bad, bad, ctx), finite_dimensional_error);
  try {
    reproduce(bad, RationalComplex{Rational(1, 2)}, ctx);
    FAIL("expected finite_dimensional_error");
  } catch (const finite_dimensional_error& e) {
    CHECK(e.dimension() == 4);
  }

  // inside the space the kernel still reproduces, exactly
  CHECK(reproduce(ok, RationalComplex{Rational(1, 3)}, ctx).re ==
        Rational(1, 81));
}
