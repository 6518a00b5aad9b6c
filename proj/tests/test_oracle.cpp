#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <unistd.h>

#include "slnchar/errors.hpp"
#include "slnchar/oracle/automorphisms.hpp"
#include "slnchar/oracle/cache.hpp"
#include "slnchar/oracle/gelfand_graev.hpp"
#include "slnchar/oracle/matching.hpp"

using namespace slnchar;
using namespace slnchar::oracle;

namespace {

std::multiset<std::int64_t> degrees(const CharacterTable& t) { return {t.degrees.begin(), t.degrees.end()}; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("finite fields") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}, {2, 4}}) {
    FiniteField f(p, k);
    CAPTURE(f.size());
    CHECK(f.order(f.primitive()) == f.size() - 1);
    // Zech addition agrees with digit-wise addition, and Frobenius is a field automorphism.
    std::set<int> images;
    for (int a = 0; a < f.size(); ++a) {
      images.insert(f.frobenius(static_cast<Elem>(a)));
      CHECK(f.add(static_cast<Elem>(a), f.neg(static_cast<Elem>(a))) == 0);
      for (int b = 0; b < f.size(); ++b) {
        Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
        int digit_sum = 0, place = 1;
        for (int i = 0, u = a, v = b; i < k; ++i, u /= p, v /= p, place *= p) digit_sum += ((u % p + v % p) % p) * place;
        CHECK(f.add(x, y) == digit_sum);
        CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
        CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
      }
    }
    CHECK(static_cast<int>(images.size()) == f.size());
  }
  CHECK_THROWS_AS(FiniteField(17, 2), ResourceError);
}

TEST_CASE("cyclotomic arithmetic") {
  CyclotomicField K(12);
  CHECK(K.dimension() == 4);
  Cyc s = K.add(K.add(K.integer(1), K.root(1, 3)), K.root(2, 3));
  CHECK(s == K.zero());
  Cyc i = K.root(1, 4);
  CHECK(K.mul(i, i) == K.integer(-1));
  CHECK(K.root_exponent(K.root(5, 12), 12) == 5);
  CHECK(K.conj(K.root(1, 12)) == K.root(11, 12));

  CyclotomicField big(60), small(15);
  for (std::int64_t j = 0; j < 15; ++j) {
    Cyc x = small.add(small.root(j, 15), small.integer(2));
    CHECK(big.restrict_to(small, big.embed(small, x)) == x);
  }
  CHECK_THROWS_AS(big.restrict_to(small, big.root(1, 4)), InvariantViolation);
}

TEST_CASE("matrix groups have the right orders") {
  CHECK(MatrixGroup(GroupParams::make(2, 3, 1), true).size() == 24);
  CHECK(MatrixGroup(GroupParams::make(2, 3, 1), false).size() == 48);
  CHECK(MatrixGroup(GroupParams::make(3, 2, 1), false).size() == 168);
  MatrixGroup su(GroupParams::make(3, 2, -1), true);
  CHECK(su.size() == 216);
  for (std::size_t i = 0; i < su.size(); i += 7) CHECK(su.contains(su.element(i)));
  CHECK(MatrixGroup(GroupParams::make(3, 4, 1), true).size() == 60480);
  CHECK_THROWS_AS(MatrixGroup(GroupParams::make(4, 3, 1), false), ResourceError);
}

TEST_CASE("conjugacy classes") {
  auto count = [](int n, int q, int eps, bool special) {
    MatrixGroup g(GroupParams::make(n, q, eps), special);
    ClassData c = conjugacy_classes(g);
    CHECK(std::accumulate(c.sizes.begin(), c.sizes.end(), std::int64_t{0}) == static_cast<std::int64_t>(g.size()));
    CHECK(c.sizes[0] == 1);
    return c.count();
  };
  CHECK(count(2, 3, 1, true) == 7);
  CHECK(count(2, 3, 1, false) == 8);
  CHECK(count(3, 2, 1, false) == 6);
  CHECK(count(3, 2, -1, true) == 16);
}

TEST_CASE("character tables") {
  auto table = [](int n, int q, int eps, bool special) {
    MatrixGroup g(GroupParams::make(n, q, eps), special);
    ClassData c = conjugacy_classes(g);
    CharacterTable t = character_table(g, c, 2);
    CHECK(rows_orthonormal(t, c));
    for (const auto& v : t.rows[0]) CHECK(v == t.field->integer(1));
    return t;
  };
  CHECK(degrees(table(2, 3, 1, true)) == std::multiset<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(degrees(table(2, 5, 1, true)) == std::multiset<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(degrees(table(3, 2, 1, false)) == std::multiset<std::int64_t>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("Gelfand-Graev characters of SL_2(3)") {
  auto ctx = make_context(GroupParams::make(2, 3, 1), std::nullopt, 1);
  REQUIRE(ctx.gamma.size() == 2);
  std::multiset<std::int64_t> in_gamma0;
  for (std::size_t s = 0; s < ctx.special.table.count(); ++s)
    if (ctx.gamma_mult[0][s]) in_gamma0.insert(ctx.special.table.degrees[s]);
  CHECK(in_gamma0 == std::multiset<std::int64_t>{3, 2, 2, 1});
  CHECK(ctx.gamma_mult[0][0] == 0);
  CHECK(ctx.gamma_mult[1][0] == 0);

  const auto& F = *ctx.special.table.field;
  ClassFunction sum(ctx.gamma[0].size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = F.add(ctx.gamma[0][k], ctx.gamma[1][k]);
  CHECK(sum == ctx.restrict_to_special(ctx.gl_gamma));
  CHECK(ctx.full.table.field->to_integer(ctx.gl_gamma[0]) == 16);
  CHECK(ctx.gamma[0] != ctx.gamma[1]);
}

TEST_CASE("matching on small groups") {
  SUBCASE("GL_2(3) restrictions") {
    auto ctx = make_context(GroupParams::make(2, 3, 1), std::nullopt, 1);
    auto m = match_gl(ctx);
    REQUIRE(m.consistent);
    auto fibres = restriction_fibres(ctx, m);
    std::multiset<std::size_t> sizes;
    for (const auto& f : fibres) sizes.insert(f.sl_rows.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2, 2});

    // Conjugation by h swaps the two degree-2 constituents of the split series and fixes the other one.
    std::vector<std::size_t> moved;
    for (std::size_t s = 0; s < ctx.special.table.count(); ++s)
      if (ctx.special.table.degrees[s] == 2 && ctx.diagonal[1][s] != s) moved.push_back(s);
    CHECK(moved.size() == 2);

    // Ind_B 1 = 1 + St, nothing outside the unipotent series.
    std::multiset<std::int64_t> flags(ctx.principal_series_mult.begin(), ctx.principal_series_mult.end());
    CHECK(flags.count(1) == 2);
    CHECK(flags.count(0) == 6);
    CHECK(ctx.principal_series_mult[0] == 1);
  }
  SUBCASE("SL_3(2) restrictions are irreducible") {
    auto ctx = make_context(GroupParams::make(3, 2, 1), std::nullopt, 1);
    for (const auto& row : ctx.restriction) CHECK(std::accumulate(row.begin(), row.end(), std::int64_t{0}) == 1);
  }
}

TEST_CASE("cache round trip is byte-identical") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("slnchar_cache_test_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto params = GroupParams::make(3, 2, -1);
  auto a = build_oracle_group(params, true, dir.string(), 1);
  CHECK_FALSE(a.from_cache);
  const fs::path file = dir / cache_key(params, true);
  REQUIRE(fs::exists(file));
  const std::string bytes = slurp(file);
  CHECK(bytes == serialize(a));

  auto b = build_oracle_group(params, true, dir.string(), 3);
  CHECK(b.from_cache);
  CHECK(serialize(b) == bytes);
  CHECK(b.table.degrees == a.table.degrees);

  std::ofstream(file, std::ios::trunc) << "{\"schema\": 1}\n";
  CHECK_THROWS_AS(build_oracle_group(params, true, dir.string(), 1), MalformedInput);
  fs::remove_all(dir);
  CHECK(cache_key(params, true) == "SU_n3_q2_eps-1_antidiagonal.json");
}
