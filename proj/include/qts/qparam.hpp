#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "qts/errors.hpp"
#include "qts/rational.hpp"

namespace qts {

// Relative epsilon used to detect n*q == n-1 in float mode.
inline constexpr double kDegeneracyEps = 1e-12;
// Safety margin for convergence-disk preconditions in float mode.
inline constexpr double kDiskMargin = 1e-6;

// Deformation parameter q >= 0 with an arithmetic mode. Exact mode keeps a
// cpp_rational and makes every coefficient identity exact; float mode is
// plain IEEE double.
class QParam {
 public:
  explicit QParam(double q) : qd_(q), exact_(false) { validate(); }
  QParam(long long num, long long den) : qr_(num, den), exact_(true) {
    qd_ = static_cast<double>(qr_);
    validate();
  }
  explicit QParam(Rational q) : qr_(std::move(q)), exact_(true) {
    qd_ = static_cast<double>(qr_);
    validate();
  }

  // Accepts "p/r" (exact) or a decimal literal (float).
  static QParam parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) return QParam(Rational(std::string(s)));
    return QParam(std::stod(std::string(s)));
  }

  bool exact() const noexcept { return exact_; }
  double value() const noexcept { return qd_; }
  const Rational& rational() const {
    if (!exact_) throw std::logic_error("QParam: rational() requires exact mode");
    return qr_;
  }
  // Exact representation regardless of mode (doubles convert exactly).
  Rational as_rational() const { return exact_ ? qr_ : Rational(qd_); }

  // Whether n*q - (n-1) vanishes (exactly, or within epsilon in float mode).
  bool degenerate_at(long long n) const {
    if (exact_) return n * qr_ == n - 1;
    double f = static_cast<double>(n) * qd_ - static_cast<double>(n - 1);
    double scale = std::max(1.0, std::abs(static_cast<double>(n) * qd_));
    return std::abs(f) < kDegeneracyEps * scale;
  }

  // Smallest n in [1, horizon] with n*q == n-1, if any.
  std::optional<long long> first_degeneracy(long long horizon) const {
    for (long long n = 1; n <= horizon; ++n)
      if (degenerate_at(n)) return n;
    return std::nullopt;
  }

  bool is(double v) const {
    if (exact_) return qr_ == Rational(v);
    return std::abs(qd_ - v) < kDegeneracyEps * std::max(1.0, std::abs(v));
  }

 private:
  void validate() const {
    if (!(qd_ >= 0.0)) throw std::domain_error("QParam: q must be >= 0");
  }

  double qd_;
  bool exact_;
  Rational qr_;
};

struct SpaceClass {
  enum Tag {
    ClassicalFock,     // q = 1
    Hardy,             // q = 2
    FiniteDimensional, // q = (k-1)/k, kernel polynomial of degree k
    HilbertSpace,      // other q > 1
    KreinSpace,        // other q in (0,1)
    DegenerateLinear,  // q = 0
  };
  Tag tag;
  int k = 0;  // set for FiniteDimensional

  std::string name() const {
    switch (tag) {
      case ClassicalFock: return "ClassicalFock";
      case Hardy: return "Hardy";
      case FiniteDimensional: return "FiniteDimensional(" + std::to_string(k) + ")";
      case HilbertSpace: return "HilbertSpace";
      case KreinSpace: return "KreinSpace";
      case DegenerateLinear: return "DegenerateLinear";
    }
    return "?";
  }
};

// q = (k-1)/k is exactly a degeneracy at n = k, so finite-dimensionality is
// detected through the same epsilon as the weights.
inline SpaceClass classify(const QParam& q, long long horizon = 64) {
  if (q.is(0.0)) return {SpaceClass::DegenerateLinear};
  if (q.is(1.0)) return {SpaceClass::ClassicalFock};
  if (q.is(2.0)) return {SpaceClass::Hardy};
  if (q.value() < 1.0) {
    if (auto n = q.first_degeneracy(horizon))
      return {SpaceClass::FiniteDimensional, static_cast<int>(*n)};
    return {SpaceClass::KreinSpace};
  }
  return {SpaceClass::HilbertSpace};
}

// Radius of convergence of the kernel series, 1/|1-q|.
inline double radius(const QParam& q) {
  if (q.is(1.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / std::abs(1.0 - q.value());
}

// --- arithmetic fields -----------------------------------------------------
//
// Generic code is templated on one of these two tag types. Real carries q and
// the coefficient sequences; Complex carries series coefficients.

struct FloatField {
  using Real = double;
  using Complex = std::complex<double>;

  static Real q_of(const QParam& q) { return q.value(); }
  static Real real(long long n) { return static_cast<double>(n); }
  static Real ratio(long long p, long long r) {
    return static_cast<double>(p) / static_cast<double>(r);
  }
  static Complex to_complex(const Real& r) { return {r, 0.0}; }
  static Complex conj_c(const Complex& c) { return std::conj(c); }
  static Real abs_r(const Real& r) { return std::abs(r); }
  static double to_double(const Real& r) { return r; }
  static std::complex<double> to_cd(const Complex& c) { return c; }
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static bool is_zero_r(const Real& r) { return r == 0.0; }
  static Real from_bigint(const BigInt& b) { return static_cast<double>(b); }
  static Real re_of(const Complex& c) { return c.real(); }
};

struct ExactField {
  using Real = Rational;
  using Complex = RationalComplex;

  static Real q_of(const QParam& q) { return q.as_rational(); }
  static Real real(long long n) { return Rational(n); }
  static Real ratio(long long p, long long r) { return Rational(p, r); }
  static Complex to_complex(const Real& r) { return RationalComplex(r); }
  static Complex conj_c(const Complex& c) { return conj(c); }
  static Real abs_r(const Real& r) { return rational_abs(r); }
  static double to_double(const Real& r) { return static_cast<double>(r); }
  static std::complex<double> to_cd(const Complex& c) { return c.to_cd(); }
  static bool is_zero(const Complex& c) { return c.is_zero(); }
  static bool is_zero_r(const Real& r) { return r == 0; }
  static Real from_bigint(const BigInt& b) { return Rational(b); }
  static Real re_of(const Complex& c) { return c.re; }
};

template <class F>
double abs_cd(const typename F::Complex& c) {
  return std::abs(F::to_cd(c));
}

// n*q - (n-1), the n-th alpha factor.
template <class F>
typename F::Real q_factor(const QParam& q, long long n) {
  return F::real(n) * F::q_of(q) - F::real(n - 1);
}

template <class F>
void require_nondegenerate(const QParam& q, long long n) {
  if (q.degenerate_at(n))
    throw degenerate_error(n, "q is degenerate at n = " + std::to_string(n) +
                                  " (n*q = n-1)");
}

}  // namespace qts
