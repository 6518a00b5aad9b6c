#include "slnchar/gl_labels.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "slnchar/errors.hpp"

namespace slnchar {

namespace {

Integer ipow(const Integer& base, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

Integer ipow(std::int64_t base, int k) { return ipow(Integer(base), k); }

Integer p_prime_part(Integer x, std::int64_t p) {
  while (x != 0 && x % p == 0) x /= p;
  return x;
}

void check_rank(const GroupParams& params) {
  if (params.n > kMaxDegree)
    throw ResourceError("rank " + std::to_string(params.n) + " exceeds the desk-scale guard of 12");
}

}  // namespace

SemisimpleClassLabel SemisimpleClassLabel::from_components(std::vector<OrbitMultiplicity> components) {
  std::sort(components.begin(), components.end());
  SemisimpleClassLabel out;
  for (auto& c : components) {
    if (c.multiplicity < 1) throw InvalidArgument("orbit multiplicity must be positive");
    if (!out.components.empty() && out.components.back().orbit == c.orbit)
      out.components.back().multiplicity += c.multiplicity;
    else
      out.components.push_back(c);
  }
  return out;
}

int SemisimpleClassLabel::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.multiplicity * c.orbit.degree();
  return r;
}

void GLCharLabel::validate(const GroupParams& params) const {
  if (s.rank() != params.n) throw InvalidArgument("semisimple label has rank " + std::to_string(s.rank()));
  if (lambda.parts.size() != s.components.size()) throw InvalidArgument("multipartition does not match the orbits");
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (lambda.parts[i].weight() != s.components[i].multiplicity)
      throw InvalidArgument("partition weight differs from orbit multiplicity");
    if (i > 0 && !(s.components[i - 1].orbit < s.components[i].orbit))
      throw InvalidArgument("semisimple label is not in canonical order");
  }
}

// ---------------------------------------------------------------------------

Integer gl_order(int m, const Integer& Q, int sign) {
  using Key = std::tuple<int, Integer, int>;
  thread_local std::map<Key, Integer> cache;
  Key key{m, Q, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Integer r = ipow(Q, m * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) r *= ipow(Q, i) - ((i % 2 == 1 && sign == -1) ? -1 : 1);
  cache.emplace(key, r);
  return r;
}

Integer group_order(const GroupParams& params) { return gl_order(params.n, Integer(params.q), params.epsilon); }

Integer sl_group_order(const GroupParams& params) { return group_order(params) / params.q_minus_eps(); }

Integer group_order(const CentralizerShape& shape, const GroupParams& params) {
  Integer r = 1;
  for (const auto& f : shape.factors) r *= gl_order(f.multiplicity, ipow(params.q, f.degree), f.sign);
  return r;
}

// ---------------------------------------------------------------------------

void for_each_semisimple(const GroupParams& params, const std::function<void(const SemisimpleClassLabel&)>& fn) {
  check_rank(params);
  const int n = params.n;
  std::vector<FrobeniusOrbit> orbits = orbits_of_degree_dividing(n, params);
  // Global indices grouped by degree so the recursion only visits orbits that fit.
  std::vector<std::vector<std::size_t>> by_degree(n + 1);
  for (std::size_t i = 0; i < orbits.size(); ++i) by_degree[orbits[i].degree()].push_back(i);

  SemisimpleClassLabel current;
  auto rec = [&](auto&& self, int remaining, std::size_t next_index) -> void {
    if (remaining == 0) {
      fn(current);
      return;
    }
    // Visit candidate orbits in increasing global index across all degrees.
    std::vector<std::pair<std::size_t, int>> frontier;
    for (int k = 1; k <= remaining; ++k) {
      const auto& list = by_degree[k];
      for (auto it = std::lower_bound(list.begin(), list.end(), next_index); it != list.end(); ++it)
        frontier.emplace_back(*it, k);
    }
    std::sort(frontier.begin(), frontier.end());
    for (auto [idx, k] : frontier) {
      for (int m = 1; m * k <= remaining; ++m) {
        current.components.push_back({orbits[idx], m});
        self(self, remaining - m * k, idx + 1);
        current.components.pop_back();
      }
    }
  };
  rec(rec, n, 0);
}

std::vector<SemisimpleClassLabel> enumerate_semisimple(const GroupParams& params) {
  std::vector<SemisimpleClassLabel> out;
  for_each_semisimple(params, [&](const SemisimpleClassLabel& s) { out.push_back(s); });
  return out;
}

void for_each_gl_char(const GroupParams& params, const std::function<void(const GLCharLabel&)>& fn) {
  thread_local std::map<int, std::vector<Partition>> partitions;
  auto parts_of = [&](int m) -> const std::vector<Partition>& {
    auto it = partitions.find(m);
    if (it == partitions.end()) it = partitions.emplace(m, Partition::all(m)).first;
    return it->second;
  };
  for_each_semisimple(params, [&](const SemisimpleClassLabel& s) {
    GLCharLabel chi;
    chi.s = s;
    chi.lambda.parts.resize(s.components.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == s.components.size()) {
        fn(chi);
        return;
      }
      for (const auto& lam : parts_of(s.components[i].multiplicity)) {
        chi.lambda.parts[i] = lam;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  });
}

std::vector<GLCharLabel> enumerate_gl_chars(const GroupParams& params) {
  std::vector<GLCharLabel> out;
  for_each_gl_char(params, [&](const GLCharLabel& chi) { out.push_back(chi); });
  return out;
}

// ---------------------------------------------------------------------------

CentralizerShape centralizer_shape(const SemisimpleClassLabel& s, const GroupParams& params) {
  CentralizerShape shape;
  for (const auto& c : s.components) {
    int deg = c.orbit.degree();
    int sign = (params.epsilon == -1 && deg % 2 == 1) ? -1 : 1;
    shape.factors.push_back({deg, c.multiplicity, sign});
  }
  return shape;
}

Integer unipotent_degree(const Partition& lambda, const Integer& Q, int sign) {
  if (lambda.empty()) throw InvalidArgument("unipotent_degree: empty partition");
  using Key = std::tuple<std::vector<int>, Integer, int>;
  thread_local std::map<Key, Integer> cache;
  Key key{lambda.parts(), Q, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Integer x = sign == -1 ? Integer(-Q) : Q;
  const int m = lambda.weight();
  Integer num = ipow(x, lambda.n_statistic());
  for (int i = 1; i <= m; ++i) num *= ipow(x, i) - 1;
  Integer den = 1;
  for (int h : lambda.hook_lengths()) den *= ipow(x, h) - 1;
  if (num % den != 0) throw InvariantViolation("q-hook formula did not divide exactly");
  Integer r = num / den;
  if (r < 0) r = -r;
  cache.emplace(key, r);
  return r;
}

Integer gl_char_degree(const GLCharLabel& chi, const GroupParams& params) {
  CentralizerShape shape = centralizer_shape(chi.s, params);
  Integer index = group_order(params) / group_order(shape, params);
  Integer deg = p_prime_part(index, params.p);
  for (std::size_t i = 0; i < shape.factors.size(); ++i) {
    const auto& f = shape.factors[i];
    deg *= unipotent_degree(chi.lambda.parts[i], ipow(params.q, f.degree), f.sign);
  }
  return deg;
}

Partition wave_front(const GLCharLabel& chi) {
  Partition nu;
  for (std::size_t i = 0; i < chi.s.components.size(); ++i)
    nu = nu + chi.lambda.parts[i].conjugate().scaled(chi.s.components[i].orbit.degree());
  return nu;
}

Partition unipotent_support(const GLCharLabel& chi) {
  Partition nu;
  for (std::size_t i = 0; i < chi.s.components.size(); ++i)
    nu = nu + chi.lambda.parts[i].scaled(chi.s.components[i].orbit.degree());
  return nu;
}

TorsionPoint central_character_exponent(const GLCharLabel& chi) {
  TorsionPoint total;
  for (const auto& c : chi.s.components) total = total + c.orbit.sum().times(c.multiplicity);
  return total;
}

bool is_regular(const GLCharLabel& chi) {
  for (const auto& lam : chi.lambda.parts)
    if (lam.largest() != 1) return false;
  return true;
}

}  // namespace slnchar
