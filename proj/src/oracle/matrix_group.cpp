#include "slnchar/oracle/matrix_group.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "slnchar/errors.hpp"
#include "slnchar/gl_labels.hpp"

namespace slnchar::oracle {

namespace {

int at(int n, int i, int j) { return i * n + j; }

}  // namespace

MatrixGroup::MatrixGroup(const GroupParams& params, bool special) : params_(params), special_(special) {
  if (params.n < 1 || params.n > kMaxMatrixRank)
    throw ResourceError("matrix groups are limited to rank " + std::to_string(kMaxMatrixRank));
  Integer full = group_order(params);
  if (full > kMaxGroupOrder)
    throw ResourceError(params.gl_name() + " has order " + full.str() + ", above the oracle bound " +
                        std::to_string(kMaxGroupOrder));
  int field_degree = params.epsilon == -1 ? 2 * params.e : params.e;
  field_ = std::make_shared<FiniteField>(params.p, field_degree);
  // Codes live in [0, Q^{n^2}).
  long double span = 1;
  for (int i = 0; i < params.n * params.n; ++i) span *= field_->size();
  if (span >= 18446744073709551615.0L) throw ResourceError("matrix codes do not fit in 64 bits");
  q_ = params.q;
  enumerate();
}

std::string MatrixGroup::name() const {
  std::string head = params_.epsilon == -1 ? (special_ ? "SU" : "GU") : (special_ ? "SL" : "GL");
  return head + "_" + std::to_string(params_.n) + "(" + std::to_string(params_.q) + ")";
}

std::uint64_t MatrixGroup::encode(const Mat& a) const {
  std::uint64_t c = 0;
  const int n = params_.n;
  for (int i = 0; i < n * n; ++i) c = c * static_cast<std::uint64_t>(field_->size()) + a[i];
  return c;
}

std::int64_t MatrixGroup::find(const Mat& m) const {
  auto it = index_.find(encode(m));
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::size_t MatrixGroup::index_of(const Mat& m) const {
  std::int64_t i = find(m);
  if (i < 0) throw InvariantViolation("matrix " + to_string(m, params_.n) + " is not in " + name());
  return static_cast<std::size_t>(i);
}

Mat MatrixGroup::identity() const {
  Mat m{};
  for (int i = 0; i < params_.n; ++i) m[at(params_.n, i, i)] = 1;
  return m;
}

Mat MatrixGroup::scalar(Elem c) const {
  Mat m{};
  for (int i = 0; i < params_.n; ++i) m[at(params_.n, i, i)] = c;
  return m;
}

Mat MatrixGroup::diagonal(const std::vector<Elem>& entries) const {
  if (static_cast<int>(entries.size()) != params_.n) throw InvalidArgument("diagonal: wrong number of entries");
  Mat m{};
  for (int i = 0; i < params_.n; ++i) m[at(params_.n, i, i)] = entries[i];
  return m;
}

Mat MatrixGroup::multiply(const Mat& a, const Mat& b) const {
  const int n = params_.n;
  const FiniteField& f = *field_;
  Mat c{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem s = 0;
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(a[at(n, i, k)], b[at(n, k, j)]));
      c[at(n, i, j)] = s;
    }
  return c;
}

Mat MatrixGroup::inverse(const Mat& a) const {
  const int n = params_.n;
  const FiniteField& f = *field_;
  Mat m = a, r = identity();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[at(n, piv, col)] == 0) ++piv;
    if (piv == n) throw InvalidArgument("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m[at(n, col, j)], m[at(n, piv, j)]);
      std::swap(r[at(n, col, j)], r[at(n, piv, j)]);
    }
    Elem s = f.inv(m[at(n, col, col)]);
    for (int j = 0; j < n; ++j) {
      m[at(n, col, j)] = f.mul(m[at(n, col, j)], s);
      r[at(n, col, j)] = f.mul(r[at(n, col, j)], s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m[at(n, i, col)] == 0) continue;
      Elem factor = m[at(n, i, col)];
      for (int j = 0; j < n; ++j) {
        m[at(n, i, j)] = f.sub(m[at(n, i, j)], f.mul(factor, m[at(n, col, j)]));
        r[at(n, i, j)] = f.sub(r[at(n, i, j)], f.mul(factor, r[at(n, col, j)]));
      }
    }
  }
  return r;
}

Elem MatrixGroup::det(const Mat& a) const {
  const int n = params_.n;
  const FiniteField& f = *field_;
  Mat m = a;
  Elem d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[at(n, piv, col)] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m[at(n, col, j)], m[at(n, piv, j)]);
      d = f.neg(d);
    }
    Elem pv = m[at(n, col, col)];
    d = f.mul(d, pv);
    Elem s = f.inv(pv);
    for (int i = col + 1; i < n; ++i) {
      if (m[at(n, i, col)] == 0) continue;
      Elem factor = f.mul(m[at(n, i, col)], s);
      for (int j = col; j < n; ++j) m[at(n, i, j)] = f.sub(m[at(n, i, j)], f.mul(factor, m[at(n, col, j)]));
    }
  }
  return d;
}

Mat MatrixGroup::bar(const Mat& a) const {
  if (!unitary()) return a;
  Mat b{};
  for (int i = 0; i < params_.n * params_.n; ++i) b[i] = field_->pow(a[i], q_);
  return b;
}

Mat MatrixGroup::transpose(const Mat& a) const {
  const int n = params_.n;
  Mat t{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[at(n, j, i)] = a[at(n, i, j)];
  return t;
}

bool MatrixGroup::contains(const Mat& a) const {
  const int n = params_.n;
  Elem d = det(a);
  if (d == 0) return false;
  if (special_ && d != 1) return false;
  if (!unitary()) return true;
  // g J bar(g)^T = J with J antidiagonal.
  const FiniteField& f = *field_;
  Mat b = bar(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem s = 0;
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(a[at(n, i, k)], b[at(n, j, n - 1 - k)]));
      if (s != (i + j == n - 1 ? 1 : 0)) return false;
    }
  return true;
}

void MatrixGroup::enumerate() {
  const int n = params_.n;
  const FiniteField& f = *field_;
  const int Q = f.size();
  int nvec = 1;
  for (int i = 0; i < n; ++i) nvec *= Q;
  // vecs[c] = digits of c, most significant entry first, so code order is row order.
  std::vector<std::array<Elem, kMaxMatrixRank>> vecs(nvec);
  for (int c = 0; c < nvec; ++c) {
    int x = c;
    for (int j = n - 1; j >= 0; --j) {
      vecs[c][j] = static_cast<Elem>(x % Q);
      x /= Q;
    }
  }
  auto add_vec = [&](int a, int b) {
    int c = 0;
    for (int j = 0; j < n; ++j) c = c * Q + f.add(vecs[a][j], vecs[b][j]);
    return c;
  };
  auto scale_vec = [&](Elem s, int a) {
    int c = 0;
    for (int j = 0; j < n; ++j) c = c * Q + f.mul(s, vecs[a][j]);
    return c;
  };
  // Hermitian pairing B(x, y) = sum_k x_k bar(y_{n-1-k}).
  auto form = [&](int a, int b) {
    Elem s = 0;
    for (int k = 0; k < n; ++k) s = f.add(s, f.mul(vecs[a][k], f.pow(vecs[b][n - 1 - k], q_)));
    return s;
  };

  std::vector<int> rows(n);
  std::vector<std::vector<int>> spans(n + 1);
  spans[0] = {0};
  std::vector<char> in_span(nvec, 0);

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Mat m{};
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) m[at(n, r, j)] = vecs[rows[r]][j];
      if (special_ && det(m) != 1) return;
      elements_.push_back(m);
      return;
    }
    std::fill(in_span.begin(), in_span.end(), 0);
    for (int v : spans[i]) in_span[v] = 1;
    std::vector<int> candidates;
    for (int v = 1; v < nvec; ++v) {
      if (in_span[v]) continue;
      if (unitary()) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = form(v, rows[j]) == (i + j == n - 1 ? 1 : 0);
        if (ok) ok = form(v, v) == (2 * i == n - 1 ? 1 : 0);
        if (!ok) continue;
      }
      candidates.push_back(v);
    }
    for (int v : candidates) {
      rows[i] = v;
      spans[i + 1].clear();
      for (int w : spans[i])
        for (int c = 0; c < Q; ++c) spans[i + 1].push_back(add_vec(w, scale_vec(static_cast<Elem>(c), v)));
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  Integer expected = special_ ? sl_group_order(params_) : group_order(params_);
  if (Integer(elements_.size()) != expected)
    throw InvariantViolation(name() + ": enumerated " + std::to_string(elements_.size()) + " elements, expected " +
                             expected.str());
  std::sort(elements_.begin(), elements_.end(), [&](const Mat& a, const Mat& b) { return encode(a) < encode(b); });
  codes_.resize(elements_.size());
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    codes_[i] = encode(elements_[i]);
    index_.emplace(codes_[i], static_cast<std::uint32_t>(i));
  }
  identity_index_ = index_of(identity());
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = static_cast<std::uint32_t>(index_of(inverse(elements_[i])));
}

std::int64_t MatrixGroup::element_order(std::size_t i) const {
  const Mat id = identity();
  Mat x = elements_[i];
  std::int64_t k = 1;
  while (x != id) {
    x = multiply(x, elements_[i]);
    ++k;
  }
  return k;
}

void MatrixGroup::spot_check(int trials, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, size() - 1);
  for (int t = 0; t < trials; ++t) {
    const Mat& a = elements_[pick(rng)];
    const Mat& b = elements_[pick(rng)];
    const Mat& c = elements_[pick(rng)];
    Mat ab = multiply(a, b);
    if (find(ab) < 0 || !contains(ab)) throw InvariantViolation(name() + " is not closed under products");
    if (multiply(ab, c) != multiply(a, multiply(b, c))) throw InvariantViolation(name() + ": associativity failed");
    if (multiply(a, inverse(a)) != identity()) throw InvariantViolation(name() + ": inverse failed");
  }
}

std::string to_string(const Mat& a, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ";";
    for (int j = 0; j < n; ++j) {
      if (j) s += ",";
      s += std::to_string(a[at(n, i, j)]);
    }
  }
  return s + "]";
}

}  // namespace slnchar::oracle
