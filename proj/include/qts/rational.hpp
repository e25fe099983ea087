#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace qts {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Complex number over exact rationals. std::complex is unusable here because
// its division path needs floating-point abs.
struct RationalComplex {
  Rational re{};
  Rational im{};

  RationalComplex() = default;
  RationalComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RationalComplex(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("RationalComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  RationalComplex& operator+=(const RationalComplex& o) { return *this = *this + o; }
  RationalComplex& operator-=(const RationalComplex& o) { return *this = *this - o; }
  RationalComplex& operator*=(const RationalComplex& o) { return *this = *this * o; }
  RationalComplex& operator/=(const RationalComplex& o) { return *this = *this / o; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) {
    return !(a == b);
  }

  friend RationalComplex conj(const RationalComplex& a) { return {a.re, -a.im}; }
  // |a|^2, exact.
  friend Rational norm_sq(const RationalComplex& a) { return a.re * a.re + a.im * a.im; }

  std::complex<double> to_cd() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalComplex& a) {
    os << a.re;
    if (a.im != 0) os << (a.im < 0 ? "" : "+") << a.im << "i";
    return os;
  }
};

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace qts
