#pragma once

// Exact arithmetic substrate: group parameters, eigenvalues as prime-to-p
// torsion points of Q/Z, Frobenius orbits, partitions and cyclic groups.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slnchar {

using Integer = boost::multiprecision::cpp_int;

/// Largest enumeration depth (orbit degree, rank) accepted at desk scale.
inline constexpr int kMaxDegree = 12;

namespace arith {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Non-negative residue of a modulo m.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m);
/// Inverse of a modulo m; throws InvalidArgument if gcd(a, m) != 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);
/// Multiplicative order of a modulo m (gcd(a, m) must be 1; order 1 for m = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
/// Prime factors with multiplicity collapsed, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace arith

/// Rank, field and twist of the pair SL^eps_n(q) <= GL^eps_n(q).
struct GroupParams {
  int n = 2;
  std::int64_t p = 2;
  int e = 1;
  std::int64_t q = 2;
  int epsilon = 1;

  /// Validates q as a prime power and epsilon as +1/-1.
  static GroupParams make(int n, std::int64_t q, int epsilon);

  /// q - epsilon: order of the centre of GL^eps_n(q).
  std::int64_t q_minus_eps() const { return q - epsilon; }
  /// gcd(n, q - epsilon).
  std::int64_t d() const;
  /// eps * q, the multiplier of the twisted Frobenius on eigenvalues.
  std::int64_t twisted_q() const { return epsilon * q; }
  /// |(eps q)^k - 1|; throws ResourceError if it does not fit in 62 bits.
  std::int64_t torsion_level(int k) const;

  std::string name() const;  // "SL_3(4)", "SU_3(2)"
  std::string gl_name() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// A point of (Q/Z)_{p'} in lowest terms, 0 <= num < den.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  TorsionPoint(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  TorsionPoint operator+(const TorsionPoint& other) const;
  TorsionPoint operator-() const;
  /// Multiplication by an integer, reduced mod 1.
  TorsionPoint times(std::int64_t k) const;

  std::string to_string() const;
  static TorsionPoint parse(std::string_view text);

  /// Total order (den, num).
  friend std::strong_ordering operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// t -> (eps q t) mod 1.
TorsionPoint tau(const TorsionPoint& t, const GroupParams& params);

/// A tau-orbit. Every member shares the denominator, so the orbit is stored as
/// (den, minimal numerator, multiplier) and its points are generated on demand.
class FrobeniusOrbit {
 public:
  FrobeniusOrbit() = default;

  static FrobeniusOrbit of(const TorsionPoint& t, const GroupParams& params);

  std::int64_t den() const { return den_; }
  int degree() const { return degree_; }
  TorsionPoint representative() const { return TorsionPoint(rep_, den_); }
  /// Points in canonical (ascending numerator) order.
  std::vector<TorsionPoint> points() const;
  /// Sum of the members; always has denominator dividing q - eps.
  TorsionPoint sum() const;

  /// Image orbit under global translation by t (t must be tau-fixed).
  FrobeniusOrbit translated(const TorsionPoint& t) const;
  /// Image orbit under multiplication by an integer unit modulo den.
  FrobeniusOrbit scaled(std::int64_t unit) const;

  friend std::strong_ordering operator<=>(const FrobeniusOrbit& a, const FrobeniusOrbit& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.rep_ <=> b.rep_;
  }
  friend bool operator==(const FrobeniusOrbit& a, const FrobeniusOrbit& b) {
    return a.den_ == b.den_ && a.rep_ == b.rep_;
  }

 private:
  FrobeniusOrbit(std::int64_t den, std::int64_t rep, std::int64_t twisted_q, int degree)
      : den_(den), rep_(rep), step_(twisted_q % den < 0 ? twisted_q % den + den : twisted_q % den),
        twisted_q_(twisted_q), degree_(degree) {}
  static std::int64_t min_numerator(std::int64_t num, std::int64_t den, std::int64_t step, int degree);

  std::int64_t den_ = 1;
  std::int64_t rep_ = 0;
  std::int64_t step_ = 0;  // eps q mod den
  std::int64_t twisted_q_ = 1;
  int degree_ = 1;
};

FrobeniusOrbit orbit_of(const TorsionPoint& t, const GroupParams& params);

/// All tau-orbits of degree <= dmax, ordered by (den, num) of their
/// representatives. Rejects dmax > kMaxDegree with ResourceError.
std::vector<FrobeniusOrbit> orbits_of_degree_dividing(int dmax, const GroupParams& params);

/// Orbits of degree exactly k, in canonical order.
std::vector<FrobeniusOrbit> orbits_of_degree(int k, const GroupParams& params);

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts, rejects non-positive parts

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Largest part, 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  /// Every part multiplied by k.
  Partition scaled(int k) const;
  /// Part-wise sum after zero padding.
  Partition operator+(const Partition& other) const;
  /// gcd of the parts (0 for the empty partition).
  std::int64_t parts_gcd() const;
  /// sum (i-1) lambda_i.
  int n_statistic() const;
  /// Hook lengths of all boxes.
  std::vector<int> hook_lengths() const;

  static Partition single_row(int m) { return Partition({m}); }
  static Partition single_column(int m) { return Partition(std::vector<int>(m, 1)); }
  /// All partitions of m in reverse lexicographic order: (m), (m-1,1), ...
  static std::vector<Partition> all(int m);

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An element of Z/modulus.
struct CyclicElt {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  CyclicElt() = default;
  CyclicElt(std::int64_t v, std::int64_t m);

  CyclicElt operator+(const CyclicElt& o) const;
  CyclicElt times(std::int64_t k) const { return CyclicElt(value * k, modulus); }
  /// Reduction to a quotient Z/m with m | modulus.
  CyclicElt reduce(std::int64_t m) const;

  friend bool operator==(const CyclicElt&, const CyclicElt&) = default;
};

}  // namespace slnchar
