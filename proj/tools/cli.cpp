#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "slnchar/errors.hpp"
#include "slnchar/json_io.hpp"
#include "slnchar/oracle/verify.hpp"

namespace slnchar::cli {

namespace {

using json_io::Json;

struct Common {
  int n = 0;
  std::int64_t q = 0;
  std::string epsilon;
  std::string out_path;
  std::string cache;
  int threads = 0;

  GroupParams params() const {
    int eps = 0;
    if (epsilon == "+1" || epsilon == "1") eps = 1;
    else if (epsilon == "-1") eps = -1;
    else throw InvalidArgument("--epsilon must be +1 or -1, got '" + epsilon + "'");
    if (n < 1) throw InvalidArgument("--n must be positive");
    return GroupParams::make(n, q, eps);
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n", c.n, "rank")->required();
  sub->add_option("--q", c.q, "field size (a prime power)")->required();
  sub->add_option("--epsilon", c.epsilon, "+1 (linear) or -1 (unitary)")->required();
  sub->add_option("--out", c.out_path, "write output to this file");
  sub->add_option("--cache", c.cache, "oracle cache directory (default $SLNCHAR_CACHE)");
  sub->add_option("--threads", c.threads, "worker threads (default $SLNCHAR_THREADS or all cores)");
}

Json header(const std::string& command, const GroupParams& p) {
  return {{"schema", 1}, {"command", command}, {"group", p.name()}, {"n", p.n}, {"q", p.q}, {"epsilon", p.epsilon}};
}

std::string partition_csv(const Partition& p) {
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : ".") + std::to_string(x);
  return s;
}

std::string s_csv(const SemisimpleClassLabel& s) {
  std::string out;
  for (const auto& c : s.components) {
    if (!out.empty()) out += " ";
    std::string pts;
    for (const auto& t : c.orbit.points()) pts += (pts.empty() ? "" : ";") + t.to_string();
    out += "{" + pts + "}x" + std::to_string(c.multiplicity);
  }
  return out;
}

std::string lambda_csv(const Multipartition& m) {
  std::string out;
  for (const auto& p : m.parts) out += (out.empty() ? "" : "|") + partition_csv(p);
  return out;
}

Json label_record(const SLCharRecord& r) {
  return {{"label", json_io::encode(r.label)},
          {"degree", json_io::encode(r.degree)},
          {"a", r.a},
          {"a_lambda", r.a_lambda},
          {"wave_front", json_io::encode(r.wave_front)},
          {"d_nu", r.d_nu}};
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("partition must be comma-separated integers, got '" + text + "'");
    }
  }
  return Partition(parts);
}

OuterAut parse_sigma(const std::string& text, const GroupParams& p) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--sigma must be 'k,b'");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    std::int64_t k = std::stoll(a, &u1);
    int bit = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size() || (bit != 0 && bit != 1)) throw std::invalid_argument(text);
    if (bit && p.epsilon == -1) throw InvalidArgument("the graph automorphism is absorbed into F_p^e for unitary groups; use b = 0");
    return OuterAut::normalized(k, bit, p);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidArgument("--sigma must be 'k,b' with b in {0,1}, got '" + text + "'");
  }
}

std::vector<Json> labels_from_input(const std::string& text) {
  Json doc = json_io::parse(text);
  if (doc.is_object() && doc.contains("records")) {
    std::vector<Json> out;
    if (!doc["records"].is_array()) throw MalformedInput("\"records\" must be an array");
    for (const auto& r : doc["records"]) out.push_back(r.is_object() && r.contains("label") ? r["label"] : r);
    return out;
  }
  if (doc.is_array()) return {doc.begin(), doc.end()};
  if (doc.is_object() && doc.contains("label")) return {doc["label"]};
  return {doc};
}

// ---------------------------------------------------------------------------

int cmd_labels(const Common& c, bool csv, const std::string& series, std::ostream& os) {
  const GroupParams p = c.params();
  std::optional<PGLClassLabel> filter;
  if (!series.empty()) {
    Json j = json_io::parse(series);
    GLCharLabel probe;
    // A bare "s" array is accepted as well as a full label object.
    Json s = j.is_object() && j.contains("s") ? j["s"] : j;
    Json lambda = Json::array();
    if (!s.is_array()) throw MalformedInput("--series must be a JSON array of [orbit, multiplicity] pairs");
    for (const auto& comp : s) {
      if (!comp.is_array() || comp.size() != 2 || !comp[1].is_number_integer())
        throw MalformedInput("--series components must be [orbit, multiplicity]");
      lambda.push_back(Json::array({comp[0], Json::array({comp[1]})}));
    }
    probe = json_io::decode_gl_label(Json{{"s", s}, {"lambda", lambda}}, p);
    filter = pgl_class(probe.s, p);
  }

  std::vector<SLCharRecord> records;
  if (p.n == 1) {
    // SL_1 is trivial; report the characters of GL_1 = the q - eps torsion points.
    for (const auto& chi : enumerate_gl_chars(p)) {
      SLCharRecord r;
      r.label = {PGLClassLabel{chi.s}, chi.lambda, CyclicElt(0, 1)};
      r.degree = 1;
      r.wave_front = Partition({1});
      records.push_back(r);
    }
    if (filter) std::erase_if(records, [&](const SLCharRecord& r) { return r.label.s.rep != filter->rep; });
  } else {
    for_each_sl_char(p, [&](const SLCharRecord& r) {
      if (!filter || r.label.s == *filter) records.push_back(r);
    });
  }

  if (csv) {
    os << "s,lambda,xi,xi_mod,degree,a,a_lambda,wave_front,d_nu\n";
    for (const auto& r : records)
      os << '"' << s_csv(r.label.s.rep) << "\"," << '"' << lambda_csv(r.label.lambda) << "\"," << r.label.xi.value << ','
         << r.label.xi.modulus << ',' << r.degree << ',' << r.a << ',' << r.a_lambda << ','
         << partition_csv(r.wave_front) << ',' << r.d_nu << '\n';
    return kOk;
  }
  Json doc = header("labels", p);
  if (p.n == 1) doc["note"] = "n = 1: records are the linear characters of GL_1";
  Json recs = Json::array();
  for (const auto& r : records) {
    Json j = label_record(r);
    if (p.n == 1) j["label"] = json_io::encode(r.label.gl_label());
    recs.push_back(std::move(j));
  }
  doc["count"] = records.size();
  doc["records"] = std::move(recs);
  os << doc.dump() << '\n';
  return kOk;
}

int cmd_act(const Common& c, const std::string& sigma_text, std::istream& in, std::ostream& os) {
  const GroupParams p = c.params();
  const OuterAut sigma = parse_sigma(sigma_text, p);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json recs = Json::array();
  for (const auto& j : labels_from_input(text)) recs.push_back(json_io::encode(act(sigma, json_io::decode_sl_label(j, p), p)));
  Json doc = header("act", p);
  doc["sigma"] = json_io::encode(sigma);
  doc["records"] = std::move(recs);
  os << doc.dump() << '\n';
  return kOk;
}

int cmd_gggc(const Common& c, const std::string& nu_text, std::ostream& os) {
  const GroupParams p = c.params();
  std::optional<Partition> nu_filter;
  if (!nu_text.empty()) {
    nu_filter = parse_partition(nu_text);
    if (nu_filter->weight() != p.n) throw InvalidArgument("--nu must be a partition of n");
  }
  Json recs = Json::array();
  for_each_sl_char(p, [&](const SLCharRecord& r) {
    if (nu_filter && r.wave_front != *nu_filter) return;
    Json in = Json::array();
    for (std::int64_t a = 0; a < r.d_nu; ++a)
      if (gggc_contains(r.label, {r.wave_front, CyclicElt(a, r.d_nu)}, p) == Incidence::kContained) in.push_back(a);
    recs.push_back({{"label", json_io::encode(r.label)},
                    {"wave_front", json_io::encode(r.wave_front)},
                    {"d_nu", r.d_nu},
                    {"a_lambda", r.a_lambda},
                    {"contained_in", std::move(in)}});
  });
  Json doc = header("gggc", p);
  doc["records"] = std::move(recs);
  os << doc.dump() << '\n';
  return kOk;
}

int cmd_degrees(const Common& c, std::ostream& os) {
  const GroupParams p = c.params();
  Json recs = Json::array();
  Integer sum = 0, count = 0;
  for (const auto& [deg, mult] : cd_set(p)) {
    recs.push_back({{"degree", json_io::encode(deg)}, {"multiplicity", mult}});
    sum += deg * deg * mult;
    count += mult;
  }
  Json doc = header("degrees", p);
  doc["order"] = json_io::encode(sl_group_order(p));
  doc["sum_of_squares"] = json_io::encode(sum);
  doc["class_number"] = json_io::encode(count);
  doc["records"] = std::move(recs);
  os << doc.dump() << '\n';
  return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, bool json, std::ostream& os) {
  const GroupParams p = c.params();
  const oracle::Suite s = oracle::parse_suite(suite);
  auto ctx = oracle::make_context(p, oracle::resolve_cache_dir(c.cache), c.threads);
  auto report = oracle::run_verify(ctx, s);
  if (json) {
    Json doc = oracle::to_json(report);
    doc["command"] = "verify";
    os << doc.dump() << '\n';
  } else {
    os << oracle::to_text(report);
  }
  return report.passed() ? kOk : kVerificationFailure;
}

int cmd_oracle_table(const Common& c, const std::string& which, std::ostream& os) {
  const GroupParams p = c.params();
  if (which != "sl" && which != "gl") throw InvalidArgument("--group must be sl or gl");
  auto g = oracle::build_oracle_group(p, which == "sl", oracle::resolve_cache_dir(c.cache), c.threads);
  const auto& K = *g.table.field;
  Json classes = Json::array();
  for (std::size_t k = 0; k < g.classes.count(); ++k)
    classes.push_back({{"representative", oracle::to_string(g.group->element(g.classes.reps[k]), p.n)},
                       {"size", g.classes.sizes[k]},
                       {"order", g.classes.orders[k]}});
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.table.count(); ++r) {
    Json values = Json::array();
    for (const auto& v : g.table.rows[r]) values.push_back(K.to_string(v));
    rows.push_back({{"degree", g.table.degrees[r]}, {"values", std::move(values)}});
  }
  Json doc = header("oracle-table", p);
  doc["table_of"] = g.group->name();
  doc["order"] = g.group->size();
  doc["exponent"] = g.classes.exponent;
  doc["classes"] = std::move(classes);
  doc["records"] = std::move(rows);
  os << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible characters of SL_n(q) and SU_n(q): labels, automorphisms, Gelfand-Graev incidence"};
  app.require_subcommand(1);

  Common common;
  bool csv = false, json_flag = false;
  std::string series, sigma, nu, suite = "all", which = "sl";

  auto* labels = app.add_subcommand("labels", "enumerate SL labels with degrees");
  add_common(labels, common);
  auto* fmt = labels->add_flag("--json", json_flag, "JSON output (default)");
  labels->add_flag("--csv", csv, "flat CSV table")->excludes(fmt);
  labels->add_option("--series", series, "restrict to one semisimple class (JSON \"s\" array)");

  auto* act_cmd = app.add_subcommand("act", "apply F_p^k gamma^b to labels read from stdin");
  add_common(act_cmd, common);
  act_cmd->add_option("--sigma", sigma, "k,b")->required();

  auto* gggc = app.add_subcommand("gggc", "Gelfand-Graev incidence along each wave front");
  add_common(gggc, common);
  gggc->add_option("--nu", nu, "only this wave front, e.g. 3 or 2,1");

  auto* degrees = app.add_subcommand("degrees", "character degrees with multiplicities");
  add_common(degrees, common);

  auto* verify = app.add_subcommand("verify", "check label predictions against computed character tables");
  add_common(verify, common);
  verify->add_option("--suite", suite, "counts | degrees | ggc | auto | all");
  verify->add_flag("--json", json_flag, "JSON report");

  auto* table = app.add_subcommand("oracle-table", "dump the computed character table");
  add_common(table, common);
  table->add_option("--group", which, "sl (default) or gl");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*labels) code = cmd_labels(common, csv, series, buffer);
    else if (*act_cmd) code = cmd_act(common, sigma, in, buffer);
    else if (*gggc) code = cmd_gggc(common, nu, buffer);
    else if (*degrees) code = cmd_degrees(common, buffer);
    else if (*verify) code = cmd_verify(common, suite, json_flag, buffer);
    else if (*table) code = cmd_oracle_table(common, which, buffer);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailure;
  }

  if (common.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!(f << buffer.str())) {
      err << "cannot write " << common.out_path << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace slnchar::cli
