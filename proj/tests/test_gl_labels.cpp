#include <doctest.h>

#include <map>
#include <set>

#include "slnchar/errors.hpp"
#include "slnchar/gl_labels.hpp"

using namespace slnchar;

namespace {

// Class numbers from the generating functions
//   prod_i (1 - x^i) / (1 - q x^i)   (linear)
//   prod_i (1 + x^i) / (1 - q x^i)   (unitary)
std::int64_t class_number_series(int n, std::int64_t q, int eps) {
  std::vector<std::int64_t> f(n + 1, 0);
  f[0] = 1;
  for (int i = 1; i <= n; ++i) {
    // multiply by (1 - eps x^i)
    for (int k = n; k >= i; --k) f[k] += (eps == 1 ? -1 : 1) * f[k - i];
    // divide by (1 - q x^i)
    for (int k = i; k <= n; ++k) f[k] += q * f[k - i];
  }
  return f[n];
}

std::multiset<Integer> gl_degrees(const GroupParams& p) {
  std::multiset<Integer> out;
  for_each_gl_char(p, [&](const GLCharLabel& chi) { out.insert(gl_char_degree(chi, p)); });
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(group_order(GroupParams::make(2, 3, 1)) == 48);
  CHECK(sl_group_order(GroupParams::make(2, 3, 1)) == 24);
  CHECK(group_order(GroupParams::make(3, 2, -1)) == 648);
  CHECK(sl_group_order(GroupParams::make(3, 2, -1)) == 216);
  CHECK(group_order(GroupParams::make(3, 4, 1)) == 181440);
  CHECK(sl_group_order(GroupParams::make(3, 4, 1)) == 60480);
  CHECK(gl_order(1, 5, -1) == 6);
}

TEST_CASE("label count equals the class number generating function") {
  for (int n = 1; n <= 6; ++n)
    for (int q : {2, 3, 4, 5, 7, 8})
      for (int eps : {1, -1}) {
        auto p = GroupParams::make(n, q, eps);
        std::int64_t count = 0;
        for_each_gl_char(p, [&](const GLCharLabel&) { ++count; });
        CHECK_MESSAGE(count == class_number_series(n, q, eps), p.gl_name());
      }
}

TEST_CASE("sum of squared degrees equals the group order") {
  for (int n = 1; n <= 5; ++n)
    for (int q : {2, 3, 4, 5, 7, 8})
      for (int eps : {1, -1}) {
        auto p = GroupParams::make(n, q, eps);
        Integer total = 0;
        for_each_gl_char(p, [&](const GLCharLabel& chi) {
          Integer deg = gl_char_degree(chi, p);
          total += deg * deg;
        });
        CHECK_MESSAGE(total == group_order(p), p.gl_name());
      }
}

TEST_CASE("small degree multisets") {
  CHECK(gl_degrees(GroupParams::make(2, 3, 1)) == std::multiset<Integer>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(gl_degrees(GroupParams::make(3, 2, 1)) == std::multiset<Integer>{1, 3, 3, 6, 7, 8});
  CHECK(gl_degrees(GroupParams::make(1, 5, 1)).size() == 4);
  auto gu = gl_degrees(GroupParams::make(2, 2, -1));
  CHECK(gu == std::multiset<Integer>{1, 1, 1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("unipotent degrees") {
  Integer q = 5;
  CHECK(unipotent_degree(Partition({2, 1}), q, 1) == q * q + q);
  CHECK(unipotent_degree(Partition({2, 1}), q, -1) == q * q - q);
  CHECK(unipotent_degree(Partition({1, 1, 1}), q, -1) == q * q * q);
  CHECK(unipotent_degree(Partition({3}), q, -1) == 1);
  // GL_4: (2,2) has degree q^2 (q^2 + 1)
  CHECK(unipotent_degree(Partition({2, 2}), q, 1) == q * q * (q * q + 1));
  CHECK(unipotent_degree(Partition({2, 2}), q, -1) == q * q * (q * q + 1));
  CHECK(unipotent_degree(Partition({3, 1}), q, -1) == q * (q * q - q + 1));
}

TEST_CASE("centralizers") {
  auto p = GroupParams::make(3, 7, 1);
  auto s = SemisimpleClassLabel::from_components({{orbit_of(TorsionPoint(0, 1), p), 1},
                                                  {orbit_of(TorsionPoint(1, 6), p), 1},
                                                  {orbit_of(TorsionPoint(1, 3), p), 1}});
  CHECK(group_order(centralizer_shape(s, p), p) == 216);
  auto u = GroupParams::make(3, 3, -1);
  auto s2 = SemisimpleClassLabel::from_components({{orbit_of(TorsionPoint(0, 1), u), 3}});
  CHECK(group_order(centralizer_shape(s2, u), u) == group_order(u));
  // An orbit of degree 2 for GU gives a GL_1(q^2) factor.
  auto o2 = orbits_of_degree(2, u).front();
  auto s3 = SemisimpleClassLabel::from_components({{o2, 1}, {orbit_of(TorsionPoint(0, 1), u), 1}});
  CHECK(group_order(centralizer_shape(s3, u), u) == 8 * 4);
  CHECK(s3.rank() == 3);
}

TEST_CASE("wave front and unipotent support") {
  auto p = GroupParams::make(2, 3, 1);
  auto zero = orbit_of(TorsionPoint(0, 1), p);
  GLCharLabel steinberg{SemisimpleClassLabel::from_components({{zero, 2}}), {{Partition({1, 1})}}};
  GLCharLabel trivial{SemisimpleClassLabel::from_components({{zero, 2}}), {{Partition({2})}}};
  CHECK(wave_front(steinberg) == Partition({2}));
  CHECK(wave_front(trivial) == Partition({1, 1}));
  CHECK(unipotent_support(trivial) == Partition({2}));
  CHECK(is_regular(steinberg));
  CHECK_FALSE(is_regular(trivial));
  auto o = orbit_of(TorsionPoint(1, 8), p);
  GLCharLabel cusp{SemisimpleClassLabel::from_components({{o, 1}}), {{Partition({1})}}};
  CHECK(wave_front(cusp) == Partition({2}));
  CHECK(gl_char_degree(cusp, p) == 2);
  CHECK(central_character_exponent(cusp) == TorsionPoint(1, 2));
}

TEST_CASE("label validation") {
  auto p = GroupParams::make(2, 3, 1);
  auto zero = orbit_of(TorsionPoint(0, 1), p);
  GLCharLabel bad{SemisimpleClassLabel::from_components({{zero, 2}}), {{Partition({1})}}};
  CHECK_THROWS_AS(bad.validate(p), InvalidArgument);
  CHECK_THROWS_AS(for_each_gl_char(GroupParams::make(13, 2, 1), [](const GLCharLabel&) {}), ResourceError);
}
