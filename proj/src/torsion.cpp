#include "slnchar/torsion.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "slnchar/errors.hpp"

namespace slnchar {

namespace arith {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<std::int64_t>(r);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = mod(a, m), r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::int64_t t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw InvalidArgument("invmod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod(s0, m);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  if (gcd(mod(a, m), m) != 1) throw InvalidArgument("multiplicative_order: not a unit");
  std::int64_t x = mod(a, m);
  std::int64_t k = 1;
  while (x != 1) {
    x = mulmod(x, a, m);
    ++k;
  }
  return k;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t f = 1; f * f <= n; ++f) {
    if (n % f != 0) continue;
    small.push_back(f);
    if (f != n / f) large.push_back(n / f);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace arith

// ---------------------------------------------------------------------------

GroupParams GroupParams::make(int n, std::int64_t q, int epsilon) {
  if (n < 1) throw InvalidArgument("rank n must be >= 1");
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("epsilon must be +1 or -1");
  if (q < 2) throw InvalidArgument("q must be a prime power >= 2");
  auto primes = arith::prime_factors(q);
  if (primes.size() != 1) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  GroupParams out;
  out.n = n;
  out.q = q;
  out.p = primes.front();
  out.epsilon = epsilon;
  out.e = 0;
  for (std::int64_t x = q; x > 1; x /= out.p) ++out.e;
  return out;
}

std::int64_t GroupParams::d() const { return arith::gcd(n, q_minus_eps()); }

std::int64_t GroupParams::torsion_level(int k) const {
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  __int128 v = 1;
  for (int i = 0; i < k; ++i) {
    v *= twisted_q();
    if (v > kLimit || v < -kLimit)
      throw ResourceError("torsion level (eps q)^" + std::to_string(k) + " - 1 exceeds 62 bits");
  }
  v -= 1;
  return static_cast<std::int64_t>(v < 0 ? -v : v);
}

std::string GroupParams::name() const {
  std::ostringstream os;
  os << (epsilon == 1 ? "SL_" : "SU_") << n << "(" << q << ")";
  return os.str();
}

std::string GroupParams::gl_name() const {
  std::ostringstream os;
  os << (epsilon == 1 ? "GL_" : "GU_") << n << "(" << q << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

TorsionPoint::TorsionPoint(std::int64_t num, std::int64_t den) {
  if (den < 1) throw InvalidArgument("torsion point denominator must be positive");
  num = arith::mod(num, den);
  std::int64_t g = arith::gcd(num, den);
  if (num == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& other) const {
  std::int64_t g = arith::gcd(den_, other.den_);
  std::int64_t den = den_ / g * other.den_;
  std::int64_t a = arith::mulmod(num_, other.den_ / g, den);
  std::int64_t b = arith::mulmod(other.num_, den_ / g, den);
  return TorsionPoint(arith::mod(a + b, den), den);
}

TorsionPoint TorsionPoint::operator-() const { return TorsionPoint(den_ - num_, den_); }

TorsionPoint TorsionPoint::times(std::int64_t k) const { return TorsionPoint(arith::mulmod(num_, k, den_), den_); }

std::string TorsionPoint::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

TorsionPoint TorsionPoint::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw MalformedInput("torsion point must be \"num/den\": " + std::string(text));
  std::int64_t num = 0, den = 0;
  auto r1 = std::from_chars(text.data(), text.data() + slash, num);
  auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
  if (r1.ec != std::errc{} || r1.ptr != text.data() + slash || r2.ec != std::errc{} ||
      r2.ptr != text.data() + text.size() || den < 1 || num < 0 || num >= den)
    throw MalformedInput("bad torsion point: " + std::string(text));
  TorsionPoint t(num, den);
  if (t.num() != num || t.den() != den) throw MalformedInput("torsion point not in lowest terms: " + std::string(text));
  return t;
}

TorsionPoint tau(const TorsionPoint& t, const GroupParams& params) { return t.times(params.twisted_q()); }

// ---------------------------------------------------------------------------

std::int64_t FrobeniusOrbit::min_numerator(std::int64_t num, std::int64_t den, std::int64_t step, int degree) {
  std::int64_t best = num, x = num;
  for (int i = 1; i < degree; ++i) {
    x = arith::mulmod(x, step, den);
    best = std::min(best, x);
  }
  return best;
}

FrobeniusOrbit FrobeniusOrbit::of(const TorsionPoint& t, const GroupParams& params) {
  if (t.den() % params.p == 0) throw InvalidArgument("torsion point " + t.to_string() + " is not prime to p");
  std::int64_t den = t.den();
  std::int64_t step = arith::mod(params.twisted_q(), den);
  int degree = static_cast<int>(arith::multiplicative_order(step, den));
  return FrobeniusOrbit(den, min_numerator(t.num(), den, step, degree), params.twisted_q(), degree);
}

std::vector<TorsionPoint> FrobeniusOrbit::points() const {
  std::vector<TorsionPoint> out;
  out.reserve(degree_);
  std::int64_t x = rep_;
  for (int i = 0; i < degree_; ++i) {
    out.emplace_back(x, den_);
    x = arith::mulmod(x, step_, den_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TorsionPoint FrobeniusOrbit::sum() const {
  __int128 total = 0;
  std::int64_t x = rep_;
  for (int i = 0; i < degree_; ++i) {
    total += x;
    x = arith::mulmod(x, step_, den_);
  }
  return TorsionPoint(static_cast<std::int64_t>(total % den_), den_);
}

FrobeniusOrbit FrobeniusOrbit::translated(const TorsionPoint& t) const {
  TorsionPoint moved = TorsionPoint(rep_, den_) + t;
  std::int64_t den = moved.den();
  std::int64_t step = arith::mod(twisted_q_, den);
  // Translation by a tau-fixed point commutes with tau: the degree is unchanged.
  return FrobeniusOrbit(den, min_numerator(moved.num(), den, step, degree_), twisted_q_, degree_);
}

FrobeniusOrbit FrobeniusOrbit::scaled(std::int64_t unit) const {
  std::int64_t x = arith::mulmod(rep_, unit, den_);
  return FrobeniusOrbit(den_, min_numerator(x, den_, step_, degree_), twisted_q_, degree_);
}

FrobeniusOrbit orbit_of(const TorsionPoint& t, const GroupParams& params) { return FrobeniusOrbit::of(t, params); }

std::vector<FrobeniusOrbit> orbits_of_degree(int k, const GroupParams& params) {
  if (k < 1) throw InvalidArgument("orbit degree must be >= 1");
  if (k > kMaxDegree) throw ResourceError("orbit degree " + std::to_string(k) + " exceeds the desk-scale guard");
  std::int64_t level = params.torsion_level(k);
  std::vector<FrobeniusOrbit> out;
  for (std::int64_t den : arith::divisors(level)) {
    std::int64_t step = arith::mod(params.twisted_q(), den);
    if (arith::multiplicative_order(step, den) != k) continue;
    // Orbits are the cosets of <eps q> in (Z/den)^x; keep each at its minimum.
    std::vector<char> seen(static_cast<std::size_t>(den), 0);
    for (std::int64_t num = 0; num < den; ++num) {
      if (seen[num] || arith::gcd(num, den) != 1) continue;
      std::int64_t x = num;
      for (int i = 0; i < k; ++i) {
        seen[x] = 1;
        x = arith::mulmod(x, step, den);
      }
      out.push_back(FrobeniusOrbit::of(TorsionPoint(num, den), params));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FrobeniusOrbit> orbits_of_degree_dividing(int dmax, const GroupParams& params) {
  if (dmax < 1) throw InvalidArgument("dmax must be >= 1");
  if (dmax > kMaxDegree) throw ResourceError("dmax " + std::to_string(dmax) + " exceeds the desk-scale guard of 12");
  std::vector<FrobeniusOrbit> out;
  for (int k = 1; k <= dmax; ++k) {
    auto part = orbits_of_degree(k, params);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x <= 0) throw InvalidArgument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int x : parts_)
    for (int i = 0; i < x; ++i) ++out[i];
  Partition result;
  result.parts_ = std::move(out);
  return result;
}

Partition Partition::scaled(int k) const {
  Partition result = *this;
  for (int& x : result.parts_) x *= k;
  return result;
}

Partition Partition::operator+(const Partition& other) const {
  std::vector<int> out(std::max(parts_.size(), other.parts_.size()), 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] += parts_[i];
  for (std::size_t i = 0; i < other.parts_.size(); ++i) out[i] += other.parts_[i];
  Partition result;
  result.parts_ = std::move(out);
  return result;
}

std::int64_t Partition::parts_gcd() const {
  std::int64_t g = 0;
  for (int x : parts_) g = arith::gcd(g, x);
  return g;
}

int Partition::n_statistic() const {
  int total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<int>(i) * parts_[i];
  return total;
}

std::vector<int> Partition::hook_lengths() const {
  Partition conj = conjugate();
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(parts_[i] - j + conj.parts_[j] - static_cast<int>(i) - 1);
  return out;
}

std::vector<Partition> Partition::all(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      Partition p;
      p.parts_ = current;
      out.push_back(std::move(p));
      return;
    }
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      current.push_back(x);
      self(self, remaining - x, x);
      current.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

CyclicElt::CyclicElt(std::int64_t v, std::int64_t m) : value(0), modulus(m) {
  if (m < 1) throw InvalidArgument("cyclic modulus must be >= 1");
  value = arith::mod(v, m);
}

CyclicElt CyclicElt::operator+(const CyclicElt& o) const {
  if (o.modulus != modulus) throw InvalidArgument("cyclic modulus mismatch");
  return CyclicElt(value + o.value, modulus);
}

CyclicElt CyclicElt::reduce(std::int64_t m) const {
  if (m < 1 || modulus % m != 0) throw InvalidArgument("reduce: target modulus must divide the source modulus");
  return CyclicElt(value, m);
}

}  // namespace slnchar
