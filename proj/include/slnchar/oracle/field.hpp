#pragma once

// F_{p^k} with elements coded as base-p digit strings (coefficients of a
// polynomial in the primitive root x). Multiplication goes through exp/log
// tables and addition through Zech logarithms; both are then frozen into
// full lookup tables since the fields used here have at most 256 elements.

#include <cstdint>
#include <vector>

namespace slnchar::oracle {

using Elem = std::uint8_t;

class FiniteField {
 public:
  FiniteField(std::int64_t p, int degree);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  int size() const { return size_; }
  /// Coefficients of the monic defining polynomial, constant term first.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem primitive() const { return exp_[1 % exp_.size()]; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * size_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t k) const;
  /// Discrete log base the primitive element; a must be nonzero.
  int log(Elem a) const { return log_[a]; }
  Elem exp(std::int64_t k) const;
  /// Zech logarithm: log(1 + x^k), or -1 when 1 + x^k = 0.
  int zech(int k) const { return zech_[k]; }

  /// x -> x^p.
  Elem frobenius(Elem a) const { return frob_[a]; }
  /// Absolute trace to F_p, returned as an integer in [0, p).
  int trace(Elem a) const { return trace_[a]; }
  /// Image of an integer under Z -> F_p -> F.
  Elem from_int(std::int64_t v) const;
  /// Multiplicative order of a nonzero element.
  std::int64_t order(Elem a) const;

 private:
  std::int64_t p_;
  int degree_;
  int size_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<int> log_;
  std::vector<int> zech_;
  std::vector<Elem> add_, mul_, neg_, frob_;
  std::vector<int> trace_;
};

}  // namespace slnchar::oracle
