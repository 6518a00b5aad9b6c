#include "slnchar/oracle/classes.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "slnchar/errors.hpp"

namespace slnchar::oracle {

std::vector<std::size_t> find_generators(const MatrixGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::vector<std::size_t> gens;
  std::vector<char> in_sub(g.size(), 0);
  in_sub[g.identity_index()] = 1;
  std::size_t sub_size = 1;
  while (sub_size < g.size()) {
    std::size_t x = pick(rng);
    if (in_sub[x]) continue;
    gens.push_back(x);
    // Close the subgroup under right multiplication by all generators.
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (in_sub[i]) queue.push_back(i);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t s : gens) {
        std::size_t y = g.mul(queue[head], s);
        if (!in_sub[y]) {
          in_sub[y] = 1;
          queue.push_back(y);
        }
      }
    sub_size = queue.size();
  }
  return gens;
}

namespace {

void finish(const MatrixGroup& g, ClassData& c) {
  const std::size_t k = c.members.size();
  c.reps.resize(k);
  c.sizes.resize(k);
  c.orders.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::sort(c.members[i].begin(), c.members[i].end());
    c.reps[i] = c.members[i].front();  // elements are sorted by code
    c.sizes[i] = static_cast<std::int64_t>(c.members[i].size());
    c.orders[i] = g.element_order(c.reps[i]);
  }
  c.power_map.assign(k, {});
  c.inverse_class.resize(k);
  c.exponent = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c.exponent = std::lcm(c.exponent, c.orders[i]);
    Mat x = g.identity();
    for (std::int64_t e = 0; e < c.orders[i]; ++e) {
      c.power_map[i].push_back(c.class_of[g.index_of(x)]);
      x = g.multiply(x, g.element(c.reps[i]));
    }
    c.inverse_class[i] = c.class_of[g.inv(c.reps[i])];
  }
}

}  // namespace

ClassData conjugacy_classes(const MatrixGroup& g) {
  auto gens = find_generators(g);
  std::vector<Mat> gm, gi;
  for (auto s : gens) {
    gm.push_back(g.element(s));
    gi.push_back(g.inverse(g.element(s)));
  }
  const std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> raw(g.size(), unset);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (raw[start] != unset) continue;
    auto id = static_cast<std::uint32_t>(orbits.size());
    orbits.push_back({static_cast<std::uint32_t>(start)});
    raw[start] = id;
    auto& orbit = orbits.back();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Mat& x = g.element(orbit[head]);
      for (std::size_t s = 0; s < gm.size(); ++s) {
        std::size_t y = g.index_of(g.multiply(g.multiply(gm[s], x), gi[s]));
        if (raw[y] == unset) {
          raw[y] = id;
          orbit.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
  }
  // Order: (element order, size, minimal code).
  std::vector<std::tuple<std::int64_t, std::size_t, std::uint32_t, std::uint32_t>> keys;
  for (std::uint32_t i = 0; i < orbits.size(); ++i) {
    std::uint32_t rep = *std::min_element(orbits[i].begin(), orbits[i].end());
    keys.emplace_back(g.element_order(rep), orbits[i].size(), rep, i);
  }
  std::sort(keys.begin(), keys.end());
  ClassData c;
  c.class_of.assign(g.size(), 0);
  std::vector<std::uint32_t> relabel(orbits.size());
  for (std::uint32_t i = 0; i < keys.size(); ++i) relabel[std::get<3>(keys[i])] = i;
  c.members.resize(orbits.size());
  for (std::uint32_t i = 0; i < orbits.size(); ++i) c.members[relabel[i]] = std::move(orbits[i]);
  for (std::size_t x = 0; x < g.size(); ++x) c.class_of[x] = relabel[raw[x]];
  finish(g, c);
  if (c.reps[0] != g.identity_index()) throw InvariantViolation("identity class is not first");
  return c;
}

ClassData classes_from_map(const MatrixGroup& g, std::vector<std::uint32_t> class_of) {
  if (class_of.size() != g.size()) throw MalformedInput("cached class map has the wrong length");
  ClassData c;
  std::uint32_t k = 0;
  for (auto x : class_of) k = std::max(k, x + 1);
  c.members.assign(k, {});
  for (std::size_t x = 0; x < class_of.size(); ++x) c.members[class_of[x]].push_back(static_cast<std::uint32_t>(x));
  for (const auto& m : c.members)
    if (m.empty()) throw MalformedInput("cached class map skips a class");
  c.class_of = std::move(class_of);
  finish(g, c);
  return c;
}

}  // namespace slnchar::oracle
