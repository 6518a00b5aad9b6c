#include "slnchar/oracle/automorphisms.hpp"

#include <string>

#include "slnchar/errors.hpp"

namespace slnchar::oracle {

MatMap frobenius_map(const MatrixGroup& g, std::int64_t k) {
  const int deg = g.field().degree();
  const std::int64_t kk = arith::mod(k, deg);
  return [&g, kk](const Mat& a) {
    Mat b = a;
    const int nn = g.n() * g.n();
    for (std::int64_t t = 0; t < kk; ++t)
      for (int i = 0; i < nn; ++i) b[i] = g.field().frobenius(b[i]);
    return b;
  };
}

MatMap graph_map(const MatrixGroup& g) {
  if (g.unitary()) throw InvalidArgument("the graph automorphism is only realized for linear groups");
  const int n = g.n();
  const FiniteField& f = g.field();
  Mat J{};
  for (int i = 0; i < n; ++i) J[i * n + (n - 1 - i)] = i % 2 ? f.neg(1) : 1;
  Mat Jinv = g.inverse(J);
  return [&g, J, Jinv](const Mat& a) { return g.multiply(g.multiply(J, g.transpose(g.inverse(a))), Jinv); };
}

MatMap conjugation_map(const MatrixGroup& g, const Mat& h) {
  Mat hinv = g.inverse(h);
  return [&g, h, hinv](const Mat& a) { return g.multiply(g.multiply(h, a), hinv); };
}

MatMap outer_map(const MatrixGroup& g, const OuterAut& sigma) {
  MatMap fr = frobenius_map(g, sigma.field_exp);
  if (!sigma.graph_bit) return fr;
  MatMap gm = graph_map(g);
  return [fr, gm](const Mat& a) { return fr(gm(a)); };
}

MatMap outer_map_inverse(const MatrixGroup& g, const OuterAut& sigma) {
  MatMap fr = frobenius_map(g, -sigma.field_exp);
  if (!sigma.graph_bit) return fr;
  MatMap gm = graph_map(g);  // an involution
  return [fr, gm](const Mat& a) { return gm(fr(a)); };
}

std::vector<std::uint32_t> class_map(const MatrixGroup& g, const ClassData& c, const MatMap& map) {
  std::vector<std::uint32_t> perm(c.count());
  std::vector<char> hit(c.count(), 0);
  for (std::size_t k = 0; k < c.count(); ++k) {
    std::int64_t target = -1;
    for (auto x : c.members[k]) {
      std::int64_t y = g.find(map(g.element(x)));
      if (y < 0) throw InvariantViolation("automorphism leaves " + g.name());
      std::int64_t cls = c.class_of[y];
      if (target < 0) target = cls;
      else if (cls != target) throw InvariantViolation("automorphism splits a conjugacy class");
    }
    if (hit[target]) throw InvariantViolation("automorphism is not a bijection on classes");
    hit[target] = 1;
    perm[k] = static_cast<std::uint32_t>(target);
  }
  return perm;
}

ClassFunction compose(const ClassFunction& f, const std::vector<std::uint32_t>& perm) {
  ClassFunction out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = f[perm[k]];
  return out;
}

std::vector<std::size_t> character_permutation(const CharacterTable& t, const std::vector<std::uint32_t>& inverse_map) {
  std::vector<std::size_t> out(t.count());
  for (std::size_t r = 0; r < t.count(); ++r) {
    std::int64_t img = t.find(compose(t.rows[r], inverse_map));
    if (img < 0) throw InvariantViolation("automorphism image of a character is not irreducible");
    out[r] = static_cast<std::size_t>(img);
  }
  return out;
}

Mat diagonal_generator(const MatrixGroup& full) {
  const FiniteField& f = full.field();
  std::vector<Elem> diag(full.n(), 1);
  Elem alpha = f.primitive();
  diag[0] = alpha;
  if (full.unitary()) {
    if (full.n() < 2) throw InvalidArgument("unitary diagonal generator needs n >= 2");
    diag[full.n() - 1] = f.inv(f.pow(alpha, full.params().q));
  }
  Mat h = full.diagonal(diag);
  if (!full.contains(h)) throw InvariantViolation("diagonal generator is not in " + full.name());
  return h;
}

Elem centre_generator(const MatrixGroup& full) {
  const FiniteField& f = full.field();
  Elem alpha = f.primitive();
  return full.unitary() ? f.pow(alpha, 1 - full.params().q) : alpha;
}

}  // namespace slnchar::oracle
