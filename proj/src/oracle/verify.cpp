#include "slnchar/oracle/verify.hpp"

#include <algorithm>
#include <sstream>

#include "slnchar/errors.hpp"
#include "slnchar/oracle/automorphisms.hpp"
#include "slnchar/oracle/gelfand_graev.hpp"

namespace slnchar::oracle {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string multiset_string(const std::map<Integer, std::int64_t>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [deg, mult] : m) {
    if (!first) out += ", ";
    first = false;
    out += str(deg);
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out + "}";
}

std::map<Integer, std::int64_t> oracle_degrees(const CharacterTable& t) {
  std::map<Integer, std::int64_t> out;
  for (auto d : t.degrees) ++out[Integer(d)];
  return out;
}

std::string label_string(const SLCharLabel& chi) { return json_io::encode(chi).dump(); }

std::string set_string(const std::set<SLCharLabel>& s) {
  std::string out = "[";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + label_string(x);
  return out + "]";
}

struct Recorder {
  VerifyReport& report;
  std::string suite;

  void add(std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    report.checks.push_back({suite, std::move(name), std::move(expected), std::move(actual), pass});
  }
  void flag(std::string name, bool ok, std::string detail) {
    report.checks.push_back({suite, std::move(name), "true", ok ? "true" : "false: " + detail, ok});
  }
};

void counts_suite(const OracleContext& ctx, VerifyReport& r) {
  Recorder rec{r, "counts"};
  const auto& P = ctx.params;
  rec.add("sl order", str(sl_group_order(P)), std::to_string(ctx.special.group->size()));
  rec.add("gl order", str(group_order(P)), std::to_string(ctx.full.group->size()));
  rec.add("sl class number", std::to_string(enumerate_sl_chars(P).size()), std::to_string(ctx.special.classes.count()));
  rec.add("gl class number", std::to_string(enumerate_gl_chars(P).size()), std::to_string(ctx.full.classes.count()));
}

void degrees_suite(const OracleContext& ctx, VerifyReport& r) {
  Recorder rec{r, "degrees"};
  const auto& P = ctx.params;
  rec.add("sl degree multiset", multiset_string(cd_set(P)), multiset_string(oracle_degrees(ctx.special.table)));
  std::map<Integer, std::int64_t> gl;
  for_each_gl_char(P, [&](const GLCharLabel& chi) { ++gl[gl_char_degree(chi, P)]; });
  rec.add("gl degree multiset", multiset_string(gl), multiset_string(oracle_degrees(ctx.full.table)));

  Integer sum = 0;
  for_each_sl_char(P, [&](const SLCharRecord& x) { sum += x.degree * x.degree; });
  rec.add("label square sum", str(sl_group_order(P)), str(sum));
  Integer osum = 0;
  for (auto d : ctx.special.table.degrees) osum += Integer(d) * d;
  rec.add("oracle square sum", str(sl_group_order(P)), str(osum));
  rec.flag("sl orthonormal", rows_orthonormal(ctx.special.table, ctx.special.classes), "row orthogonality fails");
  rec.flag("gl orthonormal", rows_orthonormal(ctx.full.table, ctx.full.classes), "row orthogonality fails");
}

void ggc_suite(const OracleContext& ctx, const GLMatching& m, VerifyReport& r) {
  Recorder rec{r, "ggc"};
  const auto& P = ctx.params;
  const std::int64_t d = P.d();
  const auto& S = *ctx.special.group;
  const auto& SF = *ctx.special.table.field;
  const std::size_t K = ctx.special.table.count();

  std::set<ClassFunction> distinct(ctx.gamma.begin(), ctx.gamma.end());
  rec.add("distinct gamma_z", std::to_string(d), std::to_string(distinct.size()));

  std::set<ClassFunction> from_params;
  for (const auto& a : regular_parameters(S, ctx.unipotent_special))
    from_params.insert(gelfand_graev_character(S, ctx.special.classes, SF, ctx.unipotent_special, a));
  rec.add("gamma over all regular parameters", std::to_string(d), std::to_string(from_params.size()));
  rec.flag("regular parameters give some gamma_z",
           std::includes(distinct.begin(), distinct.end(), from_params.begin(), from_params.end()),
           "a regular parameter induces a character outside {gamma_z}");

  std::int64_t worst = 0;
  for (const auto& row : ctx.gamma_mult) worst = std::max(worst, *std::max_element(row.begin(), row.end()));
  rec.add("multiplicity free", "1", std::to_string(worst));

  ClassFunction total(ctx.special.classes.count(), SF.zero());
  for (const auto& g : ctx.gamma)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] = SF.add(total[k], g[k]);
  // Res Ind_U^GL psi has one Mackey term per coset of SL in GL, i.e. (q - eps) / d copies of each gamma_z.
  const std::int64_t copies = P.q_minus_eps() / d;
  for (auto& v : total) v = SF.scale(v, copies);
  rec.flag("restricted gl gamma equals ((q-eps)/d) sum of gamma_z", total == ctx.restrict_to_special(ctx.gl_gamma),
           "scaled sum of gamma_z differs from Res gamma");

  std::string trivial, zeros;
  for (std::int64_t z = 0; z < d; ++z) {
    trivial += (z ? "," : "") + std::to_string(ctx.gamma_mult[z][0]);
    zeros += z ? ",0" : "0";
  }
  rec.add("trivial multiplicity", zeros, trivial);

  // <Gamma_z, Res chi> against the wave front of the matched label.
  std::string bad;
  std::size_t tested = 0;
  if (m.consistent) {
    const Partition top({P.n});
    for (std::size_t row = 0; row < ctx.full.table.count(); ++row) {
      std::set<bool> regular;
      for (auto i : m.label_classes[m.class_of_row[row]]) regular.insert(wave_front(m.labels[i]) == top);
      if (regular.size() != 1) {
        bad += " row " + std::to_string(row) + " has mixed wave fronts;";
        continue;
      }
      const std::int64_t want = *regular.begin() ? 1 : 0;
      for (std::int64_t z = 0; z < d; ++z) {
        std::int64_t ip = 0;
        for (std::size_t s = 0; s < K; ++s) ip += ctx.restriction[row][s] * ctx.gamma_mult[z][s];
        ++tested;
        if (ip != want)
          bad += " row " + std::to_string(row) + " z " + std::to_string(z) + " gives " + std::to_string(ip) + ";";
      }
    }
  } else {
    bad = " gl matching inconsistent";
  }
  rec.flag("wave front governs <gamma_z, Res chi>", bad.empty(), bad);
  rec.add("wave front pairs tested", std::to_string(ctx.full.table.count() * d), std::to_string(tested));
}

// Candidate labels under one unit, with every check that depends on it.
struct UnitOutcome {
  std::vector<std::set<SLCharLabel>> cand;
  std::string assignment, incidence, diagonal, automorphism;
  std::vector<bool> series_ok;  // per fibre
};

UnitOutcome try_unit(const OracleContext& ctx, const std::vector<Fibre>& fibres, std::int64_t u) {
  const auto& P = ctx.params;
  const std::int64_t d = P.d();
  UnitOutcome out;
  out.cand = assign_sl_labels(ctx, fibres, u);
  std::vector<std::size_t> fibre_of(out.cand.size());
  for (std::size_t f = 0; f < fibres.size(); ++f)
    for (auto s : fibres[f].sl_rows) fibre_of[s] = f;
  out.series_ok.assign(fibres.size(), true);
  auto fail = [&](std::string& where, std::size_t s, const std::string& msg) {
    out.series_ok[fibre_of[s]] = false;
    if (where.size() < 2000) where += " row " + std::to_string(s) + ": " + msg + ";";
  };

  // Rows sharing a candidate set must exhaust it; different sets are disjoint.
  std::map<std::set<SLCharLabel>, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < out.cand.size(); ++s) {
    if (out.cand[s].empty()) fail(out.assignment, s, "no candidate label");
    for (const auto& x : out.cand[s])
      if (x.xi.modulus != lambda_stabilizer_order(x.gl_label(), P)) fail(out.assignment, s, "xi modulus");
    groups[out.cand[s]].push_back(s);
  }
  std::set<SLCharLabel> seen;
  for (const auto& [set, rows] : groups) {
    if (set.size() != rows.size()) fail(out.assignment, rows.front(), "candidate set " + set_string(set) + " shared by " + std::to_string(rows.size()) + " rows");
    for (const auto& x : set)
      if (!seen.insert(x).second) fail(out.assignment, rows.front(), "label " + label_string(x) + " offered twice");
  }
  std::set<SLCharLabel> all;
  for (const auto& x : enumerate_sl_chars(P)) all.insert(x);
  if (seen != all) out.assignment += " candidate labels do not cover the label set;";

  // Incidence with Gamma_z in label coordinates a = u z.
  const Partition top({P.n});
  for (std::size_t s = 0; s < out.cand.size(); ++s) {
    for (const auto& x : out.cand[s]) {
      const bool regular = wave_front(x.gl_label()) == top;
      for (std::int64_t z = 0; z < d; ++z) {
        const bool in_oracle = ctx.gamma_mult[z][s] > 0;
        bool predicted = false;
        if (regular) {
          UnipotentSLClass g{top, CyclicElt(u * z, unipotent_h1_order(top, P))};
          predicted = gggc_contains(x, g, P) == Incidence::kContained;
        }
        if (predicted != in_oracle)
          fail(out.incidence, s, label_string(x) + " vs gamma_" + std::to_string(z));
      }
    }
  }

  // Diagonal automorphisms: conjugation by h^w realizes z = u w.
  for (std::int64_t w = 0; w <= d; ++w) {
    for (std::size_t s = 0; s < out.cand.size(); ++s) {
      std::set<SLCharLabel> img;
      for (const auto& x : out.cand[s]) img.insert(diagonal_act(CyclicElt(u * w, d), x, P));
      if (img != out.cand[ctx.diagonal[w][s]])
        fail(out.diagonal, s, "h^" + std::to_string(w) + " predicts " + set_string(img) + ", table gives " +
                                  set_string(out.cand[ctx.diagonal[w][s]]));
    }
  }

  for (const auto& [sigma, perm] : ctx.aut_special) {
    for (std::size_t s = 0; s < out.cand.size(); ++s) {
      std::set<SLCharLabel> img;
      for (const auto& x : out.cand[s]) img.insert(act(sigma, x, P));
      if (img != out.cand[perm[s]])
        fail(out.automorphism, s, "sigma (" + std::to_string(sigma.field_exp) + "," + std::to_string(sigma.graph_bit) +
                                      ") predicts " + set_string(img) + ", table gives " + set_string(out.cand[perm[s]]));
    }
  }
  return out;
}

void auto_suite(const OracleContext& ctx, const GLMatching& m, VerifyReport& r) {
  Recorder rec{r, "auto"};
  const auto& P = ctx.params;
  const std::int64_t d = P.d();

  rec.flag("gl matching", m.consistent, m.failure);
  r.central_unit = m.central_unit;
  for (const auto& c : m.row_classes) r.gl_ambiguity_classes += c.size() > 1;

  // GL-level equivariance on the matched classes.
  if (m.consistent) {
    std::map<GLCharLabel, std::size_t> label_class;
    for (std::size_t c = 0; c < m.label_classes.size(); ++c)
      for (auto i : m.label_classes[c]) label_class[m.labels[i]] = c;
    std::string bad;
    for (const auto& [sigma, perm] : ctx.aut_full)
      for (std::size_t row = 0; row < perm.size(); ++row) {
        const auto& cls = m.label_classes[m.class_of_row[row]];
        std::set<std::size_t> img;
        for (auto i : cls) img.insert(label_class.at(act_gl(sigma, m.labels[i], P)));
        if (img != std::set<std::size_t>{m.class_of_row[perm[row]]}) bad += " row " + std::to_string(row) + ";";
      }
    rec.flag("gl automorphism action", bad.empty(), bad);
  }

  // Restriction: a_lambda constituents of degree deg / a_lambda, multiplicity one.
  const auto fibres = restriction_fibres(ctx, m);
  std::size_t expected_fibres = 0;
  for_each_restriction_fibre(P, [&](const GLCharLabel&, std::int64_t) { ++expected_fibres; });
  rec.add("restriction fibres", std::to_string(expected_fibres), std::to_string(fibres.size()));
  std::string bad;
  for (const auto& f : fibres) {
    const std::string where = " fibre of gl row " + (f.gl_rows.empty() ? std::string("?") : std::to_string(f.gl_rows.front()));
    if (f.a_lambda == 0) {
      bad += where + ": no consistent canonical pair;";
      continue;
    }
    if (static_cast<std::int64_t>(f.sl_rows.size()) != f.a_lambda)
      bad += where + ": " + std::to_string(f.sl_rows.size()) + " constituents, a_lambda " + std::to_string(f.a_lambda) + ";";
    for (auto g : f.gl_rows)
      for (auto s : f.sl_rows) {
        if (ctx.restriction[g][s] != 1) bad += where + ": multiplicity " + std::to_string(ctx.restriction[g][s]) + ";";
        if (ctx.special.table.degrees[s] * f.a_lambda != ctx.full.table.degrees[g]) bad += where + ": degree;";
      }
  }
  rec.flag("restriction constituents", bad.empty(), bad);

  // h^0 and h^d act trivially (h^d is central times an element of SL).
  auto is_identity = [](const std::vector<std::size_t>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) return false;
    return true;
  };
  rec.flag("h^d acts trivially", is_identity(ctx.diagonal[d]) && is_identity(ctx.diagonal[0]), "nontrivial permutation");

  // Unit calibration: try every unit of Z/d and keep those reconciling all series.
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u <= d; ++u)
    if (arith::gcd(u, d) == 1 && (u < d || d == 1)) units.push_back(u);
  std::map<std::int64_t, UnitOutcome> outcomes;
  std::vector<std::set<std::int64_t>> per_series(fibres.size());
  for (auto u : units) {
    outcomes[u] = try_unit(ctx, fibres, u);
    for (std::size_t f = 0; f < fibres.size(); ++f)
      if (outcomes[u].series_ok[f]) per_series[f].insert(u);
  }
  std::set<std::int64_t> common(units.begin(), units.end());
  for (const auto& s : per_series) {
    std::set<std::int64_t> both;
    std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::inserter(both, both.begin()));
    common = std::move(both);
  }
  for (auto u : units) {
    const auto& o = outcomes[u];
    if (o.assignment.empty() && o.incidence.empty() && o.diagonal.empty() && o.automorphism.empty() && common.count(u))
      r.consistent_units.push_back(u);
  }
  r.calibrated_unit = r.consistent_units.empty() ? 0 : r.consistent_units.front();
  rec.flag("single unit reconciles every series", r.calibrated_unit != 0,
           "no unit is consistent with all series and all gamma_z");

  const UnitOutcome& chosen = outcomes[r.calibrated_unit ? r.calibrated_unit : units.front()];
  for (const auto& c : chosen.cand) r.sl_ambiguous_rows += c.size() > 1;
  rec.flag("label assignment", chosen.assignment.empty(), chosen.assignment);
  rec.flag("gamma_z incidence", chosen.incidence.empty(), chosen.incidence);
  rec.flag("diagonal action", chosen.diagonal.empty(), chosen.diagonal);
  rec.flag("automorphism action", chosen.automorphism.empty(), chosen.automorphism);

  std::string stab;
  for_each_restriction_fibre(P, [&](const GLCharLabel& chi, std::int64_t) {
    if (!stabilizer_condition(chi, P).factorizes) stab += " " + json_io::encode(chi).dump() + ";";
  });
  rec.flag("stabilizer factorization", stab.empty(), stab);
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "counts") return Suite::kCounts;
  if (name == "degrees") return Suite::kDegrees;
  if (name == "ggc") return Suite::kGgc;
  if (name == "auto") return Suite::kAuto;
  if (name == "all") return Suite::kAll;
  throw InvalidArgument("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kCounts: return "counts";
    case Suite::kDegrees: return "degrees";
    case Suite::kGgc: return "ggc";
    case Suite::kAuto: return "auto";
    case Suite::kAll: return "all";
  }
  return "all";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<const Check*> VerifyReport::select(const std::string& s, const std::string& prefix) const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (c.suite == s && c.name.rfind(prefix, 0) == 0) out.push_back(&c);
  return out;
}

VerifyReport run_verify(const OracleContext& ctx, Suite suite) {
  VerifyReport r;
  r.params = ctx.params;
  r.suite = suite;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kCounts) counts_suite(ctx, r);
  if (all || suite == Suite::kDegrees) degrees_suite(ctx, r);
  if (all || suite == Suite::kGgc || suite == Suite::kAuto) {
    GLMatching m = match_gl(ctx);
    if (all || suite == Suite::kGgc) ggc_suite(ctx, m, r);
    if (all || suite == Suite::kAuto) auto_suite(ctx, m, r);
  }
  return r;
}

json_io::Json to_json(const VerifyReport& r) {
  json_io::Json records = json_io::Json::array();
  for (const auto& c : r.checks)
    records.push_back({{"suite", c.suite}, {"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  json_io::Json j = {{"schema", 1},
                     {"group", r.params.name()},
                     {"n", r.params.n},
                     {"q", r.params.q},
                     {"epsilon", r.params.epsilon},
                     {"suite", suite_name(r.suite)},
                     {"passed", r.passed()},
                     {"records", records}};
  if (r.suite == Suite::kAuto || r.suite == Suite::kAll) {
    j["central_unit"] = r.central_unit;
    j["calibrated_unit"] = r.calibrated_unit;
    j["consistent_units"] = r.consistent_units;
    j["ambiguity"] = {{"gl_classes", r.gl_ambiguity_classes}, {"sl_rows", r.sl_ambiguous_rows}};
  }
  return j;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    failed += !c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.pass || c.expected != "true") os << " (expected " << c.expected << ", got " << c.actual << ")";
    os << "\n";
  }
  if (r.suite == Suite::kAuto || r.suite == Suite::kAll) {
    os << "central unit " << r.central_unit << ", calibrated unit " << r.calibrated_unit << ", consistent units {";
    for (std::size_t i = 0; i < r.consistent_units.size(); ++i) os << (i ? "," : "") << r.consistent_units[i];
    os << "}, ambiguous gl classes " << r.gl_ambiguity_classes << ", ambiguous sl rows " << r.sl_ambiguous_rows << "\n";
  }
  os << r.params.name() << ": " << (r.checks.size() - failed) << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace slnchar::oracle
