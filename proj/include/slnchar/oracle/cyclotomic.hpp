#pragma once

// Exact arithmetic in Q(zeta_N) restricted to Z[zeta_N]. An element is a dense
// coefficient vector over zeta_N^j, 0 <= j < N, kept in canonical form: for
// every prime power p^a || N, coordinates whose p-digit (j mod p^a) / p^{a-1}
// equals p - 1 are rewritten through 1 + zeta_p + ... + zeta_p^{p-1} = 0.
// What remains is a Z-basis of Z[zeta_N] of size phi(N).

#include <cstdint>
#include <string>
#include <vector>

namespace slnchar::oracle {

using Cyc = std::vector<std::int64_t>;

class CyclotomicField {
 public:
  explicit CyclotomicField(std::int64_t N);

  std::int64_t conductor() const { return N_; }
  /// phi(N): the number of coordinates that survive reduction.
  std::int64_t dimension() const;

  Cyc zero() const { return Cyc(N_, 0); }
  Cyc integer(std::int64_t v) const;
  /// zeta_m^j for m | N.
  Cyc root(std::int64_t j, std::int64_t m) const;

  void reduce(Cyc& a) const;
  Cyc add(const Cyc& a, const Cyc& b) const;
  Cyc sub(const Cyc& a, const Cyc& b) const;
  Cyc mul(const Cyc& a, const Cyc& b) const;
  Cyc scale(const Cyc& a, std::int64_t k) const;
  /// Exact division by an integer; throws InvariantViolation if inexact.
  Cyc divide_exact(const Cyc& a, std::int64_t k) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  Cyc conj(const Cyc& a) const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  Cyc galois(const Cyc& a, std::int64_t k) const;

  bool is_integer(const Cyc& a) const;
  /// The rational integer value; throws if a is not an integer.
  std::int64_t to_integer(const Cyc& a) const;
  /// Exponent j with a = zeta_m^j, or -1 when a is not an m-th root of unity.
  std::int64_t root_exponent(const Cyc& a, std::int64_t m) const;

  /// sum_k w_k a_k conj(b_k) computed without intermediate overflow, then reduced;
  /// returns the rational integer result (throws if the sum is not rational).
  __int128 weighted_hermitian_sum(const std::vector<std::int64_t>& w, const std::vector<Cyc>& a,
                                  const std::vector<Cyc>& b) const;

  std::string to_string(const Cyc& a) const;

  /// Image of an element of Q(zeta_M), M | N, under zeta_M -> zeta_N^{N/M}.
  Cyc embed(const CyclotomicField& sub, const Cyc& a) const;
  /// Inverse of embed for elements known to lie in the subfield; throws otherwise.
  Cyc restrict_to(const CyclotomicField& sub, const Cyc& a) const;

 private:
  template <typename T>
  void reduce_impl(std::vector<T>& a) const;

  std::int64_t N_;
  struct PrimeBlock {
    std::int64_t p, pa, pa1;  // p, p^a, p^{a-1}
  };
  std::vector<PrimeBlock> blocks_;
};

}  // namespace slnchar::oracle
