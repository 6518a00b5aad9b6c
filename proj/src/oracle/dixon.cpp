#include "slnchar/oracle/dixon.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "slnchar/errors.hpp"
#include "slnchar/oracle/parallel.hpp"
#include "slnchar/torsion.hpp"

namespace slnchar::oracle {

namespace {

using Vec = std::vector<std::int64_t>;
using Matrix = std::vector<Vec>;

struct ModP {
  std::int64_t l;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % l; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b + l) % l; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % l; }
  std::int64_t inv(std::int64_t a) const { return arith::invmod(a, l); }
  std::int64_t pow(std::int64_t a, std::int64_t e) const { return arith::powmod(a, e, l); }
};

// Row-reduces in place; returns pivot columns. Zero rows are dropped.
std::vector<int> rref(Matrix& rows, const ModP& F) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::int64_t s = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::int64_t f = rows[i][c];
      for (int k = c; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {y : A y = 0}.
Matrix nullspace(Matrix A, const ModP& F) {
  const int m = static_cast<int>(A.size());
  auto pivots = rref(A, F);
  std::vector<char> is_pivot(m, 0);
  for (int p : pivots) is_pivot[p] = 1;
  Matrix out;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    Vec y(m, 0);
    y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = F.sub(0, A[r][free]);
    out.push_back(y);
  }
  return out;
}

// Characteristic polynomial via Hessenberg form, coefficients low degree first.
Vec charpoly(Matrix H, const ModP& F) {
  const int n = static_cast<int>(H.size());
  for (int c = 0; c + 2 < n; ++c) {
    int piv = c + 1;
    while (piv < n && H[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(H[piv], H[c + 1]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][c + 1]);
    }
    std::int64_t inv = F.inv(H[c + 1][c]);
    for (int i = c + 2; i < n; ++i) {
      if (H[i][c] == 0) continue;
      std::int64_t f = F.mul(H[i][c], inv);
      for (int k = 0; k < n; ++k) H[i][k] = F.sub(H[i][k], F.mul(f, H[c + 1][k]));
      for (int k = 0; k < n; ++k) H[k][c + 1] = F.add(H[k][c + 1], F.mul(f, H[k][i]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (int k = 0; k < m; ++k) {
      cur[k + 1] = F.add(cur[k + 1], p[m - 1][k]);
      cur[k] = F.sub(cur[k], F.mul(H[m - 1][m - 1], p[m - 1][k]));
    }
    std::int64_t t = 1;
    for (int i = 1; i < m; ++i) {
      t = F.mul(t, H[m - i][m - i - 1]);
      std::int64_t f = F.mul(t, H[m - i - 1][m - 1]);
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] = F.sub(cur[k], F.mul(f, p[m - i - 1][k]));
    }
    p[m] = cur;
  }
  return p[n];
}

std::int64_t primitive_root(std::int64_t l) {
  auto factors = arith::prime_factors(l - 1);
  for (std::int64_t g = 2; g < l; ++g) {
    bool ok = true;
    for (auto r : factors) ok = ok && arith::powmod(g, (l - 1) / r, l) != 1;
    if (ok) return g;
  }
  throw InvariantViolation("no primitive root");
}

}  // namespace

std::int64_t CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] == f) return static_cast<std::int64_t>(r);
  return -1;
}

std::vector<std::int64_t> class_constants(const MatrixGroup& g, const ClassData& c, int threads) {
  const std::size_t K = c.count();
  std::vector<std::int64_t> cc(K * K * K, 0);
  parallel_for(K, resolve_threads(threads), [&](std::size_t j) {
    for (std::size_t i = 0; i < K; ++i) {
      const Mat& gi = g.element(c.reps[i]);
      for (auto x : c.members[j]) {
        std::size_t y = g.index_of(g.multiply(g.element(g.inv(x)), gi));
        ++cc[(j * K + c.class_of[y]) * K + i];
      }
    }
  });
  return cc;
}

std::int64_t dixon_prime(std::int64_t N, std::int64_t bound) {
  for (std::int64_t l = N + 1;; l += N)
    if (l > bound && arith::is_prime(l)) {
      if (l >= (std::int64_t(1) << 31)) throw ResourceError("no suitable prime l below 2^31");
      return l;
    }
}

CharacterTable character_table(const MatrixGroup& g, const ClassData& c, int threads) {
  const std::size_t K = c.count();
  const auto order = static_cast<std::int64_t>(g.size());
  const std::int64_t N = c.exponent;
  const std::int64_t root_bound = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(order)));
  const std::int64_t l = dixon_prime(N, 2 * root_bound + 2);
  const ModP F{l};
  auto cc = class_constants(g, c, threads);
  auto M = [&](std::size_t j, std::size_t k, std::size_t i) { return cc[(j * K + k) * K + i] % l; };

  // Split with a random combination first, then each class matrix in turn.
  std::mt19937_64 rng(7);
  std::vector<Vec> weights;
  {
    Vec w(K);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % l);
    weights.push_back(w);
  }
  for (std::size_t j = 1; j < K; ++j) {
    Vec w(K, 0);
    w[j] = 1;
    weights.push_back(w);
  }

  Matrix start(K, Vec(K, 0));
  for (std::size_t i = 0; i < K; ++i) start[i][i] = 1;
  std::vector<std::pair<Matrix, std::vector<int>>> spaces;
  {
    auto piv = rref(start, F);
    spaces.emplace_back(start, piv);
  }
  for (const auto& w : weights) {
    bool all_lines = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.first.size() == 1; });
    if (all_lines) break;
    // The operator sum_j w_j M_j.
    Matrix A(K, Vec(K, 0));
    for (std::size_t j = 0; j < K; ++j) {
      if (!w[j]) continue;
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i) A[k][i] = F.add(A[k][i], F.mul(w[j], M(j, k, i)));
    }
    std::vector<std::pair<Matrix, std::vector<int>>> next;
    for (auto& [B, piv] : spaces) {
      const std::size_t m = B.size();
      if (m == 1) {
        next.emplace_back(B, piv);
        continue;
      }
      Matrix R(m, Vec(m, 0));
      for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t s = 0; s < m; ++s) {
          std::int64_t v = 0;
          for (std::size_t i = 0; i < K; ++i) v = F.add(v, F.mul(A[piv[s]][i], B[t][i]));
          R[s][t] = v;
        }
      }
      Vec poly = charpoly(R, F);
      std::size_t found = 0;
      for (std::int64_t x = 0; x < l && found < m; ++x) {
        std::int64_t val = 0;
        for (std::size_t k = poly.size(); k-- > 0;) val = F.add(F.mul(val, x), poly[k]);
        if (val != 0) continue;
        Matrix shifted = R;
        for (std::size_t s = 0; s < m; ++s) shifted[s][s] = F.sub(shifted[s][s], x);
        Matrix ys = nullspace(shifted, F);
        Matrix vs;
        for (const auto& y : ys) {
          Vec v(K, 0);
          for (std::size_t s = 0; s < m; ++s)
            if (y[s])
              for (std::size_t i = 0; i < K; ++i) v[i] = F.add(v[i], F.mul(y[s], B[s][i]));
          vs.push_back(v);
        }
        found += vs.size();
        auto p2 = rref(vs, F);
        next.emplace_back(vs, p2);
      }
      if (found != m) throw InvariantViolation("class matrix is not diagonalizable over F_l");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != K) throw InvariantViolation("eigenspace not 1-dimensional after all class matrices");

  const std::int64_t zeta_l = F.pow(primitive_root(l), (l - 1) / N);
  auto field = std::make_shared<CyclotomicField>(N);
  CharacterTable table;
  table.field = field;
  table.prime = l;
  for (auto& [B, piv] : spaces) {
    Vec w = B[0];
    if (w[0] == 0) throw InvariantViolation("central character vanishes at the identity");
    std::int64_t s = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s);
    std::int64_t denom = 0;
    for (std::size_t i = 0; i < K; ++i)
      denom = F.add(denom, F.mul(F.mul(w[i], w[c.inverse_class[i]]), F.inv(c.sizes[i] % l)));
    std::int64_t target = F.mul(order % l, F.inv(denom));
    std::int64_t deg = 0;
    for (std::int64_t x = 1; x <= root_bound; ++x)
      if (F.mul(x, x) == target) {
        deg = x;
        break;
      }
    if (deg == 0) throw InvariantViolation("no admissible degree for an eigenvector");
    Vec chi(K);
    for (std::size_t i = 0; i < K; ++i) chi[i] = F.mul(F.mul(deg, w[i]), F.inv(c.sizes[i] % l));

    ClassFunction row(K);
    for (std::size_t i = 0; i < K; ++i) {
      const std::int64_t o = c.orders[i];
      const std::int64_t w_o = F.pow(zeta_l, N / o);
      const std::int64_t o_inv = F.inv(o % l);
      Vec pw(o);
      pw[0] = 1;
      for (std::int64_t t = 1; t < o; ++t) pw[t] = F.mul(pw[t - 1], w_o);
      Cyc value = field->zero();
      for (std::int64_t j = 0; j < o; ++j) {
        std::int64_t mj = 0;
        for (std::int64_t t = 0; t < o; ++t)
          mj = F.add(mj, F.mul(chi[c.power_map[i][t]], pw[arith::mod(-t * j, o)]));
        mj = F.mul(mj, o_inv);
        if (mj > deg) throw InvariantViolation("eigenvalue multiplicity exceeds the degree");
        value[j * (N / o)] += mj;
      }
      field->reduce(value);
      row[i] = value;
    }
    if (row[0] != field->integer(deg)) throw InvariantViolation("lifted degree disagrees");
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    auto trivial = [&](const ClassFunction& f) {
      return std::all_of(f.begin(), f.end(), [&](const Cyc& x) { return x == field->integer(1); });
    };
    bool ta = trivial(a), tb = trivial(b);
    if (ta != tb) return ta;
    if (a[0][0] != b[0][0]) return a[0][0] < b[0][0];
    return a < b;
  });
  Integer total = 0;
  for (const auto& r : table.rows) {
    table.degrees.push_back(r[0][0]);
    total += Integer(r[0][0]) * r[0][0];
  }
  if (total != order) throw InvariantViolation("sum of squared degrees differs from |G|");
  return table;
}

std::int64_t inner_product(const CyclotomicField& field, const ClassData& c, const ClassFunction& f,
                           const ClassFunction& h) {
  std::int64_t order = 0;
  for (auto s : c.sizes) order += s;
  __int128 s = field.weighted_hermitian_sum(c.sizes, f, h);
  if (s % order != 0) throw InvariantViolation("inner product is not an integer");
  return static_cast<std::int64_t>(s / order);
}

bool rows_orthonormal(const CharacterTable& t, const ClassData& c) {
  for (std::size_t i = 0; i < t.count(); ++i)
    for (std::size_t j = i; j < t.count(); ++j)
      if (inner_product(*t.field, c, t.rows[i], t.rows[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace slnchar::oracle
