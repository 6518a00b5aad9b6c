#include <doctest.h>

#include <map>
#include <set>

#include "slnchar/errors.hpp"
#include "slnchar/sl_labels.hpp"

using namespace slnchar;

namespace {

FrobeniusOrbit orb(std::int64_t num, std::int64_t den, const GroupParams& p) { return orbit_of(TorsionPoint(num, den), p); }

GLCharLabel label(std::vector<std::tuple<FrobeniusOrbit, int, Partition>> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  GLCharLabel chi;
  for (auto& [o, m, l] : rows) {
    chi.s.components.push_back({o, m});
    chi.lambda.parts.push_back(l);
  }
  return chi;
}

SLCharLabel sl(const GLCharLabel& chi, std::int64_t xi, const GroupParams& p) {
  GLCharLabel c = canonical_pair(chi, p);
  return {{c.s}, c.lambda, CyclicElt(xi, lambda_stabilizer_order(c, p))};
}

std::int64_t sl_count(const GroupParams& p) {
  std::int64_t n = 0;
  for_each_sl_char(p, [&](const SLCharRecord&) { ++n; });
  return n;
}

std::int64_t gl_count(const GroupParams& p) {
  std::int64_t n = 0;
  for_each_gl_char(p, [&](const GLCharLabel&) { ++n; });
  return n;
}

// The SL_3(4) split series: three distinct eigenvalues 0, 1/3, 2/3.
GLCharLabel thirds(const GroupParams& p) {
  Partition one({1});
  return label({{orb(0, 1, p), 1, one}, {orb(1, 3, p), 1, one}, {orb(2, 3, p), 1, one}});
}

}  // namespace

TEST_CASE("h1 and component groups") {
  auto p23 = GroupParams::make(2, 3, 1);
  auto p34 = GroupParams::make(3, 4, 1);
  CHECK(h1_order(p23) == 2);
  CHECK(h1_order(p34) == 3);
  CHECK(h1_order(GroupParams::make(3, 2, -1)) == 3);

  auto s = pgl_class(SemisimpleClassLabel::from_components({{orb(0, 1, p23), 1}, {orb(1, 2, p23), 1}}), p23);
  auto a = component_group(s, p23);
  CHECK(a.order == 2);
  CHECK(a.generator == TorsionPoint(1, 2));
  CHECK(component_group(pgl_class(SemisimpleClassLabel::from_components({{orb(0, 1, p23), 2}}), p23), p23).order == 1);
  auto t = component_group({thirds(p34).s}, p34);
  CHECK(t.order == 3);
  CHECK(t.generator == TorsionPoint(1, 3));
}

TEST_CASE("restriction constituents for GL_2(3)") {
  auto p = GroupParams::make(2, 3, 1);
  Partition one({1});
  auto split = restriction_constituents(label({{orb(0, 1, p), 1, one}, {orb(1, 2, p), 1, one}}), p);
  CHECK(split.a_lambda == 2);
  CHECK(split.constituent_degree == 2);
  auto cusp = restriction_constituents(label({{orb(1, 8, p), 1, one}}), p);
  CHECK(cusp.a_lambda == 1);
  CHECK(cusp.constituent_degree == 2);
  auto quarter = restriction_constituents(label({{orb(1, 4, p), 1, one}}), p);
  CHECK(quarter.a_lambda == 2);
  CHECK(quarter.constituent_degree == 1);

  std::multiset<std::int64_t> counts;
  for_each_restriction_fibre(p, [&](const GLCharLabel&, std::int64_t a) { counts.insert(a); });
  CHECK(counts == std::multiset<std::int64_t>{1, 1, 1, 2, 2});
}

TEST_CASE("small SL degree sets") {
  auto to_multiset = [](const std::map<Integer, std::int64_t>& m) {
    std::multiset<Integer> out;
    for (const auto& [deg, mult] : m)
      for (std::int64_t i = 0; i < mult; ++i) out.insert(deg);
    return out;
  };
  CHECK(to_multiset(cd_set(GroupParams::make(2, 3, 1))) == std::multiset<Integer>{1, 1, 1, 2, 2, 2, 3});
  CHECK(to_multiset(cd_set(GroupParams::make(2, 5, 1))) == std::multiset<Integer>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(to_multiset(cd_set(GroupParams::make(3, 2, 1))) == std::multiset<Integer>{1, 3, 3, 6, 7, 8});
  CHECK(sl_count(GroupParams::make(1, 5, 1)) == 1);
}

TEST_CASE("class numbers against closed forms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    auto p2 = GroupParams::make(2, q, 1);
    CHECK_MESSAGE(sl_count(p2) == (q % 2 ? q + 4 : q + 1), p2.name());
    auto p3 = GroupParams::make(3, q, 1);
    CHECK_MESSAGE(sl_count(p3) == q * q + q + (p3.d() == 3 ? 8 : 0), p3.name());
  }
  // With d = 1 the restriction map is a bijection onto Irr(SL) up to central twist.
  for (int n = 2; n <= 5; ++n)
    for (int q : {2, 3, 4, 5, 7, 8})
      for (int eps : {1, -1}) {
        auto p = GroupParams::make(n, q, eps);
        if (p.d() != 1) continue;
        CHECK_MESSAGE(sl_count(p) * p.q_minus_eps() == gl_count(p), p.name());
      }
}

TEST_CASE("degree identity and divisibility") {
  for (int n = 2; n <= 5; ++n)
    for (int q : {2, 3, 4, 5, 7})
      for (int eps : {1, -1}) {
        auto p = GroupParams::make(n, q, eps);
        Integer total = 0;
        bool divides = true;
        for_each_sl_char(p, [&](const SLCharRecord& r) {
          total += r.degree * r.degree;
          divides = divides && r.a % r.a_lambda == 0 && p.d() % r.a == 0 && r.d_nu % r.a_lambda == 0;
        });
        CHECK_MESSAGE(total == sl_group_order(p), p.name());
        CHECK_MESSAGE(divides, p.name());
      }
}

TEST_CASE("omega0 and phi_u") {
  auto p23 = GroupParams::make(2, 3, 1);
  auto p34 = GroupParams::make(3, 4, 1);
  auto s = pgl_class(SemisimpleClassLabel::from_components({{orb(0, 1, p23), 1}, {orb(1, 2, p23), 1}}), p23);
  CHECK(omega0(s, CyclicElt(0, 2), p23).value == 0);
  CHECK(omega0(s, CyclicElt(1, 2), p23) == CyclicElt(1, 2));
  auto triple = pgl_class(SemisimpleClassLabel::from_components({{orb(0, 1, p34), 3}}), p34);
  CHECK(omega0(triple, CyclicElt(1, 3), p34) == CyclicElt(0, 1));
  CHECK(omega0_lambda({thirds(p34).s}, thirds(p34).lambda, CyclicElt(1, 3), p34) == CyclicElt(1, 3));
  CHECK_THROWS_AS(omega0(s, CyclicElt(1, 3), p23), InvalidArgument);

  CHECK(phi_u(Partition({2}), CyclicElt(1, 2), p23) == CyclicElt(1, 2));
  CHECK(phi_u(Partition({1, 1}), CyclicElt(1, 2), p23) == CyclicElt(0, 1));
  CHECK(phi_u(Partition({3}), CyclicElt(2, 3), p34) == CyclicElt(2, 3));
  CHECK(unipotent_h1_order(Partition({2, 2}), GroupParams::make(4, 5, 1)) == 2);
}

TEST_CASE("Gelfand-Graev incidence examples") {
  auto p = GroupParams::make(2, 3, 1);
  Partition one({1});
  auto split = label({{orb(0, 1, p), 1, one}, {orb(1, 2, p), 1, one}});
  UnipotentSLClass g0{Partition({2}), CyclicElt(0, 2)};
  UnipotentSLClass g1{Partition({2}), CyclicElt(1, 2)};
  CHECK(gggc_contains(sl(split, 0, p), g0, p) == Incidence::kContained);
  CHECK(gggc_contains(sl(split, 1, p), g0, p) == Incidence::kNotContained);
  CHECK(gggc_contains(sl(split, 1, p), g1, p) == Incidence::kContained);
  auto steinberg = label({{orb(0, 1, p), 2, Partition({1, 1})}});
  CHECK(gggc_contains(sl(steinberg, 0, p), g0, p) == Incidence::kContained);
  CHECK(gggc_contains(sl(steinberg, 0, p), g1, p) == Incidence::kContained);
  auto trivial = label({{orb(0, 1, p), 2, Partition({2})}});
  CHECK(gggc_contains(sl(trivial, 0, p), g0, p) == Incidence::kNotGoverned);
}

TEST_CASE("fibre structure of the incidence") {
  for (int n = 2; n <= 4; ++n)
    for (int q : {3, 4, 5, 7})
      for (int eps : {1, -1}) {
        auto p = GroupParams::make(n, q, eps);
        bool ok = true;
        for_each_sl_char(p, [&](const SLCharRecord& r) {
          std::int64_t hits = 0;
          for (std::int64_t a = 0; a < r.d_nu; ++a)
            if (gggc_contains(r.label, {r.wave_front, CyclicElt(a, r.d_nu)}, p) == Incidence::kContained) ++hits;
          ok = ok && hits * r.a_lambda == r.d_nu;
        });
        CHECK_MESSAGE(ok, p.name());
      }
}

TEST_CASE("outer automorphisms") {
  auto lin = GroupParams::make(3, 4, 1);
  CHECK(all_outer_auts(lin).size() == 4);
  auto uni = GroupParams::make(3, 4, -1);
  CHECK(all_outer_auts(uni).size() == 4);
  CHECK(OuterAut::normalized(0, 1, uni) == OuterAut{2, 0});
  CHECK(OuterAut::normalized(5, 1, lin) == OuterAut{1, 1});
  CHECK(OuterAut{1, 0}.compose(OuterAut{1, 1}, lin) == OuterAut{0, 1});
  CHECK(OuterAut{1, 1}.multiplier(3, lin) == 1);
}

TEST_CASE("act examples for SL_3(4)") {
  auto p = GroupParams::make(3, 4, 1);
  auto chi1 = sl(thirds(p), 1, p);
  auto img = act({1, 0}, chi1, p);
  CHECK(img.s == chi1.s);
  CHECK(img.lambda == chi1.lambda);
  CHECK(img.xi == CyclicElt(2, 3));
  auto chi0 = sl(thirds(p), 0, p);
  CHECK(act({0, 1}, chi0, p) == chi0);
  CHECK(act({0, 0}, chi1, p) == chi1);
  CHECK(diagonal_act(CyclicElt(1, 3), chi1, p).xi == CyclicElt(2, 3));
}

TEST_CASE("act is a group action and twists the diagonal action") {
  for (auto [n, q, eps] : std::vector<std::tuple<int, int, int>>{{3, 4, 1}, {2, 9, 1}, {3, 8, -1}, {4, 5, 1}, {3, 5, -1}}) {
    auto p = GroupParams::make(n, q, eps);
    auto auts = all_outer_auts(p);
    auto labels = enumerate_sl_chars(p);
    bool action = true, twist = true, closed = true;
    std::set<SLCharLabel> all(labels.begin(), labels.end());
    for (const auto& chi : labels) {
      for (const auto& s1 : auts) {
        auto once = act(s1, chi, p);
        closed = closed && all.count(once);
        for (const auto& s2 : auts) action = action && act(s1.compose(s2, p), chi, p) == act(s1, act(s2, chi, p), p);
        for (std::int64_t z = 0; z < p.d(); ++z) {
          CyclicElt zz(z, p.d());
          CyclicElt sz(z * s1.multiplier(p.d(), p), p.d());
          twist = twist && act(s1, diagonal_act(zz, chi, p), p) == diagonal_act(sz, once, p);
        }
      }
    }
    CHECK_MESSAGE(action, p.name());
    CHECK_MESSAGE(twist, p.name());
    CHECK_MESSAGE(closed, p.name());
  }
}

TEST_CASE("stabilizer factorization") {
  auto p23 = GroupParams::make(2, 3, 1);
  std::int64_t seen = 0;
  for_each_gl_char(p23, [&](const GLCharLabel& chi) {
    if (!is_canonical_pair(chi, p23)) return;
    ++seen;
    CHECK(stabilizer_condition(chi, p23).factorizes);
  });
  CHECK(seen == 5);
  auto p34 = GroupParams::make(3, 4, 1);
  auto r = stabilizer_condition(thirds(p34), p34);
  CHECK(r.factorizes);
  CHECK(r.aut_stabilizer.size() == all_outer_auts(p34).size());
  CHECK(stabilizer_condition(thirds(GroupParams::make(3, 7, 1)), GroupParams::make(3, 7, 1)).factorizes);
  auto p32 = GroupParams::make(3, 2, 1);
  for_each_gl_char(p32, [&](const GLCharLabel& chi) { CHECK(stabilizer_condition(chi, p32).factorizes); });
}

TEST_CASE("translation canonical form") {
  auto p = GroupParams::make(2, 5, 1);
  Partition one({1});
  auto chi = label({{orb(1, 4, p), 1, one}, {orb(3, 4, p), 1, one}});
  auto c = canonical_pair(chi, p);
  CHECK(is_canonical_pair(c, p));
  CHECK(c.s.components.front().orbit == orb(0, 1, p));
  CHECK(translate(translate(chi, TorsionPoint(1, 4)), TorsionPoint(3, 4)) == chi);
}
