#include "slnchar/oracle/cyclotomic.hpp"

#include "slnchar/errors.hpp"
#include "slnchar/torsion.hpp"

namespace slnchar::oracle {

CyclotomicField::CyclotomicField(std::int64_t N) : N_(N) {
  if (N < 1) throw InvalidArgument("cyclotomic conductor must be positive");
  for (std::int64_t p : arith::prime_factors(N)) {
    std::int64_t pa = 1;
    while (N % (pa * p) == 0) pa *= p;
    blocks_.push_back({p, pa, pa / p});
  }
}

std::int64_t CyclotomicField::dimension() const {
  std::int64_t d = 1;
  for (const auto& b : blocks_) d *= b.pa1 * (b.p - 1);
  return d;
}

template <typename T>
void CyclotomicField::reduce_impl(std::vector<T>& a) const {
  for (const auto& b : blocks_) {
    const std::int64_t step = N_ / b.p;
    for (std::int64_t j = 0; j < N_; ++j) {
      if (a[j] == 0 || (j % b.pa) / b.pa1 != b.p - 1) continue;
      T c = a[j];
      a[j] = 0;
      for (std::int64_t t = 1; t < b.p; ++t) a[(j + t * step) % N_] -= c;
    }
  }
}

void CyclotomicField::reduce(Cyc& a) const { reduce_impl(a); }

Cyc CyclotomicField::integer(std::int64_t v) const {
  Cyc a = zero();
  a[0] = v;
  return a;
}

Cyc CyclotomicField::root(std::int64_t j, std::int64_t m) const {
  if (m <= 0 || N_ % m != 0) throw InvalidArgument("root order must divide the conductor");
  Cyc a = zero();
  a[arith::mod(j, m) * (N_ / m)] = 1;
  reduce(a);
  return a;
}

Cyc CyclotomicField::add(const Cyc& a, const Cyc& b) const {
  Cyc c(a);
  for (std::int64_t j = 0; j < N_; ++j) c[j] += b[j];
  return c;
}

Cyc CyclotomicField::sub(const Cyc& a, const Cyc& b) const {
  Cyc c(a);
  for (std::int64_t j = 0; j < N_; ++j) c[j] -= b[j];
  return c;
}

Cyc CyclotomicField::mul(const Cyc& a, const Cyc& b) const {
  std::vector<std::int64_t> ia, ib;
  for (std::int64_t j = 0; j < N_; ++j) {
    if (a[j]) ia.push_back(j);
    if (b[j]) ib.push_back(j);
  }
  Cyc c = zero();
  for (auto i : ia)
    for (auto j : ib) c[(i + j) % N_] += a[i] * b[j];
  reduce(c);
  return c;
}

Cyc CyclotomicField::scale(const Cyc& a, std::int64_t k) const {
  Cyc c(a);
  for (auto& x : c) x *= k;
  return c;
}

Cyc CyclotomicField::divide_exact(const Cyc& a, std::int64_t k) const {
  Cyc c(a);
  for (auto& x : c) {
    if (x % k != 0) throw InvariantViolation("cyclotomic division by " + std::to_string(k) + " is not exact");
    x /= k;
  }
  return c;
}

Cyc CyclotomicField::conj(const Cyc& a) const { return galois(a, -1); }

Cyc CyclotomicField::galois(const Cyc& a, std::int64_t k) const {
  if (arith::gcd(arith::mod(k, N_), N_) != 1 && N_ > 1) throw InvalidArgument("Galois exponent must be a unit");
  Cyc c = zero();
  for (std::int64_t j = 0; j < N_; ++j)
    if (a[j]) c[arith::mulmod(j, arith::mod(k, N_), N_)] += a[j];
  reduce(c);
  return c;
}

bool CyclotomicField::is_integer(const Cyc& a) const {
  for (std::int64_t j = 1; j < N_; ++j)
    if (a[j]) return false;
  return true;
}

std::int64_t CyclotomicField::to_integer(const Cyc& a) const {
  if (!is_integer(a)) throw InvariantViolation("cyclotomic number " + to_string(a) + " is not rational");
  return a[0];
}

std::int64_t CyclotomicField::root_exponent(const Cyc& a, std::int64_t m) const {
  for (std::int64_t j = 0; j < m; ++j)
    if (a == root(j, m)) return j;
  return -1;
}

__int128 CyclotomicField::weighted_hermitian_sum(const std::vector<std::int64_t>& w, const std::vector<Cyc>& a,
                                                 const std::vector<Cyc>& b) const {
  std::vector<__int128> acc(N_, 0);
  std::vector<std::int64_t> ia, ib;
  for (std::size_t k = 0; k < w.size(); ++k) {
    ia.clear();
    ib.clear();
    for (std::int64_t j = 0; j < N_; ++j) {
      if (a[k][j]) ia.push_back(j);
      if (b[k][j]) ib.push_back(j);
    }
    for (auto i : ia)
      for (auto j : ib) acc[(i - j + N_) % N_] += static_cast<__int128>(w[k]) * a[k][i] * b[k][j];
  }
  reduce_impl(acc);
  for (std::int64_t j = 1; j < N_; ++j)
    if (acc[j] != 0) throw InvariantViolation("hermitian sum is not rational");
  return acc[0];
}

std::string CyclotomicField::to_string(const Cyc& a) const {
  std::string s;
  for (std::int64_t j = 0; j < N_; ++j) {
    if (!a[j]) continue;
    if (!s.empty()) s += a[j] > 0 ? "+" : "";
    s += std::to_string(a[j]);
    if (j) s += "*z" + std::to_string(N_) + "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

Cyc CyclotomicField::embed(const CyclotomicField& sub, const Cyc& a) const {
  const std::int64_t M = sub.conductor();
  if (N_ % M != 0) throw InvalidArgument("embed: conductor does not divide");
  Cyc out = zero();
  for (std::int64_t j = 0; j < M; ++j) out[j * (N_ / M)] = a[j];
  reduce(out);
  return out;
}

Cyc CyclotomicField::restrict_to(const CyclotomicField& sub, const Cyc& a) const {
  const std::int64_t M = sub.conductor();
  if (N_ % M != 0) throw InvalidArgument("restrict_to: conductor does not divide");
  const std::int64_t step = N_ / M;
  Cyc out = sub.zero();
  for (std::int64_t j = 0; j < N_; ++j) {
    if (!a[j]) continue;
    if (j % step) throw InvariantViolation("value " + to_string(a) + " is not in Q(zeta_" + std::to_string(M) + ")");
    out[j / step] = a[j];
  }
  sub.reduce(out);
  if (embed(sub, out) != a) throw InvariantViolation("restriction to a subfield is not faithful");
  return out;
}

}  // namespace slnchar::oracle
