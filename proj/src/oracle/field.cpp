#include "slnchar/oracle/field.hpp"

#include <string>

#include "slnchar/errors.hpp"
#include "slnchar/torsion.hpp"

namespace slnchar::oracle {

namespace {

// Digit vectors <-> codes.
std::vector<int> digits(int code, std::int64_t p, int k) {
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = static_cast<int>(code % p);
    code /= static_cast<int>(p);
  }
  return out;
}

int code_of(const std::vector<int>& d, std::int64_t p) {
  int c = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = c * static_cast<int>(p) + d[i];
  return c;
}

// Powers of x modulo f; empty when x is not primitive.
std::vector<Elem> powers_of_x(const std::vector<int>& f, std::int64_t p, int k, int size) {
  std::vector<Elem> out;
  out.reserve(size - 1);
  std::vector<int> cur(k, 0);
  cur[0] = 1;
  for (int i = 0; i < size - 1; ++i) {
    int c = code_of(cur, p);
    if (i > 0 && c == 1) return {};
    out.push_back(static_cast<Elem>(c));
    // multiply by x: shift and reduce with x^k = -sum f_i x^i
    int top = cur[k - 1];
    for (int j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < k; ++j) cur[j] = static_cast<int>(arith::mod(cur[j] - top * f[j], p));
  }
  if (code_of(cur, p) != 1) return {};
  return out;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int degree) : p_(p), degree_(degree) {
  if (!arith::is_prime(p) || degree < 1) throw InvalidArgument("field needs a prime and a positive degree");
  std::int64_t size = 1;
  for (int i = 0; i < degree; ++i) size *= p;
  if (size > 256) throw ResourceError("field of size " + std::to_string(size) + " exceeds the table limit 256");
  size_ = static_cast<int>(size);

  // First monic f (in code order of its lower coefficients) making x primitive.
  for (int c = 0; c < size_ && exp_.empty(); ++c) {
    auto f = digits(c, p, degree);
    if (f[0] == 0) continue;
    exp_ = powers_of_x(f, p, degree, size_);
    if (!exp_.empty()) {
      modulus_ = f;
      modulus_.push_back(1);
    }
  }
  if (exp_.empty()) throw InvariantViolation("no primitive polynomial found");

  const int m = size_ - 1;
  log_.assign(size_, -1);
  for (int i = 0; i < m; ++i) log_[exp_[i]] = i;

  // Zech logs from digit-wise addition of 1.
  zech_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    auto d = digits(exp_[i], p, degree);
    d[0] = static_cast<int>((d[0] + 1) % p);
    int s = code_of(d, p);
    zech_[i] = s == 0 ? -1 : log_[s];
  }

  add_.assign(size_ * size_, 0);
  mul_.assign(size_ * size_, 0);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      Elem s;
      if (a == 0) s = static_cast<Elem>(b);
      else if (b == 0) s = static_cast<Elem>(a);
      else {
        // x^i + x^j = x^i (1 + x^{j-i})
        int i = log_[a], j = log_[b];
        int z = zech_[(j - i + m) % m];
        s = z < 0 ? 0 : exp_[(i + z) % m];
      }
      add_[a * size_ + b] = s;
      mul_[a * size_ + b] = (a == 0 || b == 0) ? 0 : exp_[(log_[a] + log_[b]) % m];
    }
  neg_.assign(size_, 0);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (add_[a * size_ + b] == 0) neg_[a] = static_cast<Elem>(b);
  frob_.assign(size_, 0);
  for (int a = 0; a < size_; ++a) frob_[a] = pow(static_cast<Elem>(a), p);
  trace_.assign(size_, 0);
  for (int a = 0; a < size_; ++a) {
    Elem t = 0, x = static_cast<Elem>(a);
    for (int i = 0; i < degree; ++i) {
      t = add(t, x);
      x = frob_[x];
    }
    if (t >= p) throw InvariantViolation("trace left the prime field");
    trace_[a] = t;
  }
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

Elem FiniteField::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw InvalidArgument("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  return exp(arith::mulmod(log_[a], arith::mod(k, size_ - 1), size_ - 1));
}

Elem FiniteField::exp(std::int64_t k) const { return exp_[arith::mod(k, size_ - 1)]; }

Elem FiniteField::from_int(std::int64_t v) const { return static_cast<Elem>(arith::mod(v, p_)); }

std::int64_t FiniteField::order(Elem a) const {
  if (a == 0) throw InvalidArgument("order of zero");
  return (size_ - 1) / arith::gcd(log_[a], size_ - 1);
}

}  // namespace slnchar::oracle
