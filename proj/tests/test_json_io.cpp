#include <doctest.h>

#include "slnchar/errors.hpp"
#include "slnchar/json_io.hpp"

using namespace slnchar;
using json_io::Json;

TEST_CASE("scalar encodings") {
  CHECK(json_io::encode(TorsionPoint()) == "0/1");
  CHECK(json_io::encode(TorsionPoint(3, 8)) == "3/8");
  CHECK(json_io::encode(Partition({2, 1, 1})) == Json::array({2, 1, 1}));
  CHECK(json_io::encode(Integer(12)) == 12);
  Integer big = Integer(1) << 80;
  CHECK(json_io::encode(big) == big.str());
  CHECK(json_io::encode(OuterAut{1, 0}).dump() == R"({"field":1,"graph":0})");
}

TEST_CASE("orbit encoding") {
  auto p = GroupParams::make(2, 3, 1);
  auto o = orbit_of(TorsionPoint(1, 8), p);
  CHECK(json_io::encode(o) == Json::array({"1/8", "3/8"}));
  CHECK(json_io::decode_orbit(Json::array({"3/8", "1/8"}), p) == o);
  CHECK_THROWS_AS(json_io::decode_orbit(Json::array({"1/8"}), p), MalformedInput);
  CHECK_THROWS_AS(json_io::decode_orbit(Json::array({"1/3"}), p), MalformedInput);
}

TEST_CASE("labels round trip") {
  for (auto [n, q, eps] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 4, 1}, {3, 2, -1}, {4, 3, -1}}) {
    auto p = GroupParams::make(n, q, eps);
    for (const auto& chi : enumerate_sl_chars(p)) {
      Json j = json_io::encode(chi);
      CHECK(json_io::decode_sl_label(json_io::parse(j.dump()), p) == chi);
    }
  }
}

TEST_CASE("sl label layout") {
  auto p = GroupParams::make(2, 3, 1);
  auto labels = enumerate_sl_chars(p);
  Json j = json_io::encode(labels.front());
  CHECK(j.contains("s"));
  CHECK(j.contains("lambda"));
  CHECK(j["xi"].contains("value"));
  CHECK(j["xi"].contains("mod"));
  CHECK(j["s"][0][0] == Json::array({"0/1"}));
}

TEST_CASE("malformed labels") {
  auto p = GroupParams::make(2, 3, 1);
  CHECK_THROWS_AS(json_io::parse("{"), MalformedInput);
  CHECK_THROWS_AS(json_io::decode_sl_label(Json::object(), p), MalformedInput);
  auto ok = json_io::parse(R"({"s":[[["0/1"],1],[["1/2"],1]],"lambda":[[["0/1"],[1]],[["1/2"],[1]]],"xi":{"value":1,"mod":2}})");
  CHECK(json_io::decode_sl_label(ok, p).xi == CyclicElt(1, 2));
  auto wrong_mod = ok;
  wrong_mod["xi"]["mod"] = 1;
  CHECK_THROWS_AS(json_io::decode_sl_label(wrong_mod, p), MalformedInput);
  auto wrong_rank = ok;
  wrong_rank["s"][0][1] = 2;
  CHECK_THROWS_AS(json_io::decode_sl_label(wrong_rank, p), MalformedInput);
  auto bad_part = ok;
  bad_part["lambda"][0][1] = Json::array({1, 2});
  CHECK_THROWS_AS(json_io::decode_sl_label(bad_part, p), MalformedInput);
  CHECK_THROWS_AS(json_io::decode_outer_aut(json_io::parse(R"({"field":1,"graph":2})"), p), MalformedInput);
}
