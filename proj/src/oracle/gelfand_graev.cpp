#include "slnchar/oracle/gelfand_graev.hpp"

#include <algorithm>

#include "slnchar/errors.hpp"

namespace slnchar::oracle {

std::vector<std::size_t> upper_unitriangular(const MatrixGroup& g) {
  const int n = g.n();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Mat& m = g.element(x);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j <= i && ok; ++j) ok = m[i * n + j] == (i == j ? 1 : 0);
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> root_blocks(const MatrixGroup& g) {
  const int n = g.n();
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n - 1; ++i) {
    int j = g.unitary() ? n - 2 - i : i;
    if (j < i) continue;
    out.push_back(j == i ? std::vector<int>{i} : std::vector<int>{i, j});
  }
  return out;
}

int psi_exponent(const MatrixGroup& g, const std::vector<Elem>& a, const Mat& u) {
  const int n = g.n();
  const FiniteField& f = g.field();
  Elem s = 0;
  for (int i = 0; i + 1 < n; ++i) s = f.add(s, f.mul(a[i], u[i * n + i + 1]));
  return f.trace(s);
}

bool is_regular_parameter(const MatrixGroup& g, const std::vector<std::size_t>& U, const std::vector<Elem>& a) {
  const int n = g.n();
  for (const auto& block : root_blocks(g)) {
    bool nontrivial = false;
    for (auto x : U) {
      const Mat& u = g.element(x);
      bool inside = true;
      for (int i = 0; i + 1 < n && inside; ++i) {
        bool in_block = std::find(block.begin(), block.end(), i) != block.end();
        if (!in_block && u[i * n + i + 1] != 0) inside = false;
      }
      if (inside && psi_exponent(g, a, u) != 0) {
        nontrivial = true;
        break;
      }
    }
    if (!nontrivial) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> regular_parameters(const MatrixGroup& g, const std::vector<std::size_t>& U) {
  const int m = g.n() - 1;
  const int Q = g.field().size();
  std::vector<std::vector<Elem>> out;
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= Q;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<Elem> a(m);
    std::int64_t x = code;
    for (int i = m - 1; i >= 0; --i) {
      a[i] = static_cast<Elem>(x % Q);
      x /= Q;
    }
    if (is_regular_parameter(g, U, a)) out.push_back(a);
  }
  return out;
}

std::vector<Elem> standard_parameter(const MatrixGroup& g, const std::vector<std::size_t>& U) {
  const int m = g.n() - 1;
  std::vector<Elem> ones(m, 1);
  if (is_regular_parameter(g, U, ones)) return ones;
  const std::int64_t p = g.field().characteristic();
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<Elem> a(m);
    std::int64_t x = code;
    for (int i = m - 1; i >= 0; --i) {
      a[i] = static_cast<Elem>(x % p);
      x /= p;
    }
    if (is_regular_parameter(g, U, a)) return a;
  }
  auto all = regular_parameters(g, U);
  if (all.empty()) throw InvariantViolation(g.name() + " has no regular character of U");
  return all.front();
}

ClassFunction gelfand_graev_character(const MatrixGroup& g, const ClassData& c, const CyclotomicField& field,
                                      const std::vector<std::size_t>& U, const std::vector<Elem>& a) {
  const std::int64_t p = g.field().characteristic();
  const auto order = static_cast<std::int64_t>(g.size());
  const auto u_order = static_cast<std::int64_t>(U.size());
  if (order % u_order != 0) throw InvariantViolation("|U| does not divide |G|");
  std::vector<std::vector<std::int64_t>> counts(c.count(), std::vector<std::int64_t>(p, 0));
  for (auto x : U) ++counts[c.class_of[x]][psi_exponent(g, a, g.element(x))];
  ClassFunction out(c.count());
  for (std::size_t k = 0; k < c.count(); ++k) {
    Cyc v = field.zero();
    for (std::int64_t t = 0; t < p; ++t)
      if (counts[k][t]) v = field.add(v, field.scale(field.root(t, p), counts[k][t]));
    out[k] = field.divide_exact(field.scale(v, order / u_order), c.sizes[k]);
  }
  return out;
}

}  // namespace slnchar::oracle
