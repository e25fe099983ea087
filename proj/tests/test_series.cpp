#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qts/qcore.hpp"
#include "qts/series.hpp"

using namespace qts;
using cd = std::complex<double>;
using FS = TruncatedSeries<FloatField>;
using ES = TruncatedSeries<ExactField>;

namespace {

FS random_series(std::mt19937& rng, int bound) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FS s(bound);
  for (int k = 0; k <= bound; ++k) s[k] = cd(u(rng), u(rng));
  return s;
}

double dist(const FS& a, const FS& b) {
  double d = 0.0;
  for (int k = 0; k <= std::min(a.degree_bound(), b.degree_bound()); ++k)
    d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

TEST_CASE("basic arithmetic and truncation rule") {
  FS f(3), g(5);
  f[0] = 1.0; f[1] = 2.0; f[3] = -1.0;
  g[0] = 0.5; g[2] = 4.0; g[5] = 9.0;

  auto s = add(f, g);
  CHECK(s.degree_bound() == 3);
  CHECK(s[0] == cd(1.5));
  CHECK(s[1] == cd(2.0));
  CHECK(s[2] == cd(4.0));
  CHECK(s[3] == cd(-1.0));

  auto p = mul(f, g);
  CHECK(p.degree_bound() == 3);
  CHECK(p[0] == cd(0.5));
  CHECK(p[1] == cd(1.0));
  CHECK(p[2] == cd(4.0));
  CHECK(p[3] == cd(7.5));  // 2*4 + (-1)*0.5

  CHECK(eval(f, cd(2.0)) == cd(1.0 + 4.0 - 8.0));
  CHECK(scale(f, cd(3.0))[1] == cd(6.0));
  CHECK(sub(f, f) == FS(3));
}

TEST_CASE("geometric series convolution oracle") {
  // (sum z^k)(sum z^k) has Cauchy coefficients k+1
  ES one(10);
  for (int k = 0; k <= 10; ++k) one[k] = RationalComplex{1};
  auto sq = mul(one, one);
  for (int k = 0; k <= 10; ++k) CHECK(sq[k] == RationalComplex{k + 1});
}

TEST_CASE("ring axioms on seeded random series") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 12);
    auto b = random_series(rng, 12);
    auto c = random_series(rng, 12);
    CHECK(dist(add(a, b), add(b, a)) == 0.0);
    CHECK(dist(mul(a, b), mul(b, a)) < 1e-14);
    CHECK(dist(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) < 1e-14);
    CHECK(dist(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-13);
    CHECK(dist(add(a, sub(b, b)), a) == 0.0);
  }
}

TEST_CASE("evaluation is a homomorphism up to truncation") {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 16);
    auto b = random_series(rng, 16);
    cd z(u(rng), u(rng));
    CHECK(std::abs(eval(add(a, b), z) - (eval(a, z) + eval(b, z))) < 1e-13);
    // truncation error of the product is O(|z|^{N+1})
    double tail = 20.0 * std::pow(0.15, 17);
    CHECK(std::abs(eval(mul(a, b), z) - eval(a, z) * eval(b, z)) < tail + 1e-13);
  }
}

TEST_CASE("scale_argument") {
  ES f(4);
  for (int k = 0; k <= 4; ++k) f[k] = RationalComplex{Rational(k + 1)};
  RationalComplex lam{Rational(2, 3)};
  auto g = scale_argument(f, lam);
  RationalComplex p{1};
  for (int k = 0; k <= 4; ++k) {
    CHECK(g[k] == f[k] * p);
    p = p * lam;
  }
  // round trip with 1/lambda
  auto back = scale_argument(g, RationalComplex{Rational(3, 2)});
  CHECK(back == f);
}

TEST_CASE("monomial factory") {
  auto m = FS::monomial(3, 6);
  CHECK(m.degree_bound() == 6);
  for (int k = 0; k <= 6; ++k) CHECK(m[k] == (k == 3 ? cd(1.0) : cd(0.0)));
}

TEST_CASE("kernel series eval agrees with kernel_eval") {
  QParam q(0.7);
  auto coeffs = kernel_coeffs<FloatField>(q, 48);
  cd z(0.4, 0.2), w(0.3, -0.5);
  cd via_series = eval(coeffs, z * std::conj(w));
  CHECK(std::abs(via_series - kernel_eval<FloatField>(z, w, q, 48)) == 0.0);
}

TEST_CASE("matrix series storage and scalar view") {
  MatrixSeries<FloatField> m(2, 3, 4);
  m.at(2, 1, 2) = cd(7.0, -1.0);
  CHECK(m.degree_bound() == 4);
  CHECK(coeff_matrix(m, 2)(1, 2) == cd(7.0, -1.0));
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Random(2, 3);
  set_coeff_matrix(m, 3, mm);
  CHECK(coeff_matrix(m, 3).isApprox(mm));

  FS f(5);
  f[2] = cd(0.5, 0.5);
  CHECK(as_scalar_series(as_matrix_series(f)) == f);
}

TEST_CASE("matrix_q_exp") {
  // zero matrix gives the identity (alpha_0/0! = 1)
  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(3, 3);
  CHECK(matrix_q_exp(Z, cd(0.3), QParam(0.6), 16)
            .isApprox(Eigen::MatrixXcd::Identity(3, 3)));

  // 1x1 reduces to the scalar kernel series
  Eigen::MatrixXcd a(1, 1);
  a(0, 0) = cd(0.8);
  cd got = matrix_q_exp(a, cd(0.5), QParam(1.5), 64)(0, 0);
  cd want = eval(kernel_coeffs<FloatField>(QParam(1.5), 64), cd(0.4));
  CHECK(std::abs(got - want) < 1e-15);

  // q = 1: classical matrix exponential, oracle by direct Taylor loop
  Eigen::MatrixXcd A(2, 2);
  A << cd(0.2, 0.1), cd(-0.3), cd(0.05), cd(0.1, -0.2);
  Eigen::MatrixXcd want1 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(2, 2);
  double fact = 1.0;
  for (int k = 0; k <= 40; ++k) {
    want1 += pw / fact;
    pw = A * pw;
    fact *= k + 1.0;
  }
  CHECK((matrix_q_exp(A, cd(1.0), QParam(1.0), 40) - want1).norm() < 1e-13);

  // Frobenius-norm disk check
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(4, 4) * 3.0;
  CHECK_THROWS_AS(matrix_q_exp(big, cd(1.0), QParam(2.0), 8), out_of_disk_error);
  CHECK_THROWS_AS(matrix_q_exp(Eigen::MatrixXcd::Zero(2, 3), cd(0.0), QParam(2.0), 4),
                  std::invalid_argument);
}
