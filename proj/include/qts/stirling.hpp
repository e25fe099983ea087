#pragma once

#include <string>
#include <vector>

#include "qts/rational.hpp"

namespace qts {

// Polynomial in the symbol lambda with integer coefficients, lowest degree
// first.
struct LambdaPoly {
  std::vector<BigInt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  BigInt coeff(int d) const { return d < static_cast<int>(c.size()) ? c[d] : BigInt(0); }

  void trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
  }

  friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  // multiply by n*lambda
  LambdaPoly times_lambda(const BigInt& n) const {
    LambdaPoly r;
    r.c.resize(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) r.c[i + 1] = n * c[i];
    r.trim();
    return r;
  }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
  }

  // Horner evaluation at lambda; F is one of the arithmetic fields.
  template <class F>
  typename F::Real eval(const typename F::Real& lambda) const {
    typename F::Real acc{};
    for (int d = degree(); d >= 0; --d)
      acc = acc * lambda + F::from_bigint(coeff(d));
    return acc;
  }

  std::string str(const std::string& sym = "lambda") const {
    std::string out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      BigInt v = coeff(d);
      if (v == 0 && !(first && d == 0)) continue;
      BigInt av = v < 0 ? BigInt(-v) : v;
      if (first) {
        if (v < 0) out += "-";
        first = false;
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (d == 0 || av != 1) out += av.str();
      if (d >= 1) {
        if (av != 1) out += "*";
        out += sym;
        if (d >= 2) out += "^" + std::to_string(d);
      }
    }
    if (out.empty()) out = "0";
    return out;
  }
};

// Triangular table of the q-Stirling-like numbers C(n, j):
//   C(1,1) = 1, C(n+1,1) = (-lambda)^n,
//   C(n+1,j) = C(n,j-1) - j*lambda*C(n,j), C(n+1,n+1) = 1.
struct StirlingTable {
  std::vector<std::vector<LambdaPoly>> rows;  // rows[n-1] has n entries, j = 1..n

  const LambdaPoly& entry(int n, int j) const { return rows[n - 1][j - 1]; }
  int n_max() const { return static_cast<int>(rows.size()); }
};

inline StirlingTable stirling_table(int n_max) {
  StirlingTable t;
  t.rows.push_back({LambdaPoly{{1}}});
  for (int n = 1; n < n_max; ++n) {
    const auto& prev = t.rows.back();
    std::vector<LambdaPoly> row(n + 1);
    // (-lambda)^n
    LambdaPoly first;
    first.c.assign(n + 1, BigInt(0));
    first.c[n] = (n % 2 == 0) ? 1 : -1;
    row[0] = first;
    for (int j = 2; j <= n; ++j)
      row[j - 1] = prev[j - 2] - prev[j - 1].times_lambda(j);
    row[n] = LambdaPoly{{1}};
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qts
