#pragma once

#include <stdexcept>
#include <string>

namespace qts {

// Raised when an operation needs gamma_n (equivalently 1/alpha-factor) at an
// index n where n*q == n-1, i.e. the weight does not exist.
class degenerate_error : public std::domain_error {
 public:
  degenerate_error(long long n, const std::string& what)
      : std::domain_error(what), index_(n) {}
  long long index() const noexcept { return index_; }

 private:
  long long index_;
};

// Argument outside the convergence disk of a series evaluation.
class out_of_disk_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Attempt to use coefficients beyond the dimension of a finite-dimensional
// space (q = (k-1)/k).
class finite_dimensional_error : public std::domain_error {
 public:
  finite_dimensional_error(int dim, const std::string& what)
      : std::domain_error(what), dim_(dim) {}
  int dimension() const noexcept { return dim_; }

 private:
  int dim_;
};

}  // namespace qts
