#include "slnchar/oracle/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "slnchar/errors.hpp"

namespace slnchar::oracle {

using nlohmann::json;

std::optional<std::string> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SLNCHAR_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string cache_key(const GroupParams& params, bool special) {
  std::string head = params.epsilon == -1 ? (special ? "SU" : "GU") : (special ? "SL" : "GL");
  return head + "_n" + std::to_string(params.n) + "_q" + std::to_string(params.q) + "_eps" +
         (params.epsilon == 1 ? "+1" : "-1") + (params.epsilon == 1 ? "_standard" : "_antidiagonal") + ".json";
}

std::string serialize(const OracleGroup& g) {
  const MatrixGroup& G = *g.group;
  json j;
  j["schema"] = 1;
  j["group"] = G.name();
  j["n"] = G.n();
  j["q"] = G.params().q;
  j["epsilon"] = G.params().epsilon;
  j["special"] = G.special();
  j["form"] = G.unitary() ? "antidiagonal" : "standard";
  j["field_polynomial"] = G.field().modulus();
  j["order"] = G.size();
  j["class_map"] = g.classes.class_of;
  j["exponent"] = g.classes.exponent;
  j["prime"] = g.table.prime;
  json rows = json::array();
  for (const auto& row : g.table.rows) {
    json r = json::array();
    for (const auto& v : row) {
      json entry = json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) entry.push_back(json::array({k, v[k]}));
      r.push_back(entry);
    }
    rows.push_back(r);
  }
  j["table"] = rows;
  return j.dump() + "\n";
}

OracleGroup deserialize(const std::string& text, std::shared_ptr<const MatrixGroup> group) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("cache file is not JSON: ") + e.what());
  }
  const MatrixGroup& G = *group;
  try {
    if (j.at("schema") != 1 || j.at("group") != G.name() || j.at("order") != G.size() ||
        j.at("field_polynomial") != G.field().modulus())
      throw MalformedInput("cache entry belongs to a different group");
    OracleGroup out;
    out.group = group;
    out.classes = classes_from_map(G, j.at("class_map").get<std::vector<std::uint32_t>>());
    if (j.at("exponent") != out.classes.exponent) throw MalformedInput("cached exponent disagrees");
    auto field = std::make_shared<CyclotomicField>(out.classes.exponent);
    out.table.field = field;
    out.table.prime = j.at("prime").get<std::int64_t>();
    const std::size_t K = out.classes.count();
    for (const auto& r : j.at("table")) {
      if (r.size() != K) throw MalformedInput("cached row has the wrong length");
      ClassFunction row;
      for (const auto& entry : r) {
        Cyc v = field->zero();
        for (const auto& kv : entry) {
          auto k = kv.at(0).get<std::int64_t>();
          if (k < 0 || k >= field->conductor()) throw MalformedInput("cached coefficient index out of range");
          v[k] = kv.at(1).get<std::int64_t>();
        }
        Cyc reduced = v;
        field->reduce(reduced);
        if (reduced != v) throw MalformedInput("cached value is not canonically reduced");
        row.push_back(v);
      }
      out.table.degrees.push_back(row[0][0]);
      out.table.rows.push_back(std::move(row));
    }
    if (out.table.rows.size() != K) throw MalformedInput("cached table is not square");
    Integer total = 0;
    for (auto d : out.table.degrees) total += Integer(d) * d;
    if (total != G.size()) throw MalformedInput("cached degrees do not match |G|");
    out.from_cache = true;
    return out;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("cache entry is malformed: ") + e.what());
  }
}

OracleGroup build_oracle_group(const GroupParams& params, bool special, const std::optional<std::string>& cache_dir,
                               int threads) {
  auto group = std::make_shared<const MatrixGroup>(params, special);
  group->spot_check(1000, 42);
  std::filesystem::path path;
  if (cache_dir) {
    path = std::filesystem::path(*cache_dir) / cache_key(params, special);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      return deserialize(ss.str(), group);
    }
  }
  OracleGroup out;
  out.group = group;
  out.classes = conjugacy_classes(*group);
  out.table = character_table(*group, out.classes, threads);
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream o(tmp, std::ios::binary);
      o << serialize(out);
      if (!o) throw ResourceError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
  return out;
}

}  // namespace slnchar::oracle
