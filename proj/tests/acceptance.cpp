// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any fails. Label-only criteria sweep n <= 6, q <= 8, both signs; oracle
// criteria run the full verification on every group within the size bound.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "slnchar/errors.hpp"
#include "slnchar/oracle/verify.hpp"

using namespace slnchar;
using namespace slnchar::oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
  }
};

const std::vector<std::tuple<int, int, int>> kOracleGroups = {{2, 3, 1}, {2, 5, 1}, {2, 7, 1}, {3, 2, 1}, {3, 3, 1},
                                                              {3, 4, 1}, {3, 2, -1}, {3, 3, -1}, {4, 2, -1}};

std::vector<GroupParams> label_sweep() {
  std::vector<GroupParams> out;
  for (int n = 1; n <= 6; ++n)
    for (int q : {2, 3, 4, 5, 7, 8})
      for (int eps : {1, -1}) out.push_back(GroupParams::make(n, q, eps));
  return out;
}

bool checks_pass(const VerifyReport& r, const std::string& suite, const std::string& prefix, Outcome& o) {
  auto found = r.select(suite, prefix);
  if (found.empty()) {
    o.fail(r.params.name() + ": no check '" + prefix + "'");
    return false;
  }
  bool ok = true;
  for (const auto* c : found)
    if (!c->pass) {
      ok = false;
      o.fail(r.params.name() + " " + c->name + ": expected " + c->expected + ", got " + c->actual.substr(0, 200));
    }
  return ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::map<int, Outcome> crit;
  std::map<int, std::string> summary;
  for (int i = 1; i <= 8; ++i) crit[i] = {};

  // ---- oracle groups ------------------------------------------------------
  auto t0 = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reports;
  std::string counts_line, units_line;
  for (auto [n, q, eps] : kOracleGroups) {
    auto params = GroupParams::make(n, q, eps);
    auto t = std::chrono::steady_clock::now();
    auto ctx = make_context(params, resolve_cache_dir(""), 0);
    auto report = run_verify(ctx, Suite::kAll);
    std::cout << "  " << params.name() << ": " << (report.passed() ? "all checks pass" : "FAILURES") << ", "
              << ctx.special.table.count() << " classes, unit " << report.calibrated_unit << ", ambiguous sl rows "
              << report.sl_ambiguous_rows << " (" << seconds_since(t) << " s)\n";
    if (!report.passed())
      for (const auto& c : report.checks)
        if (!c.pass) std::cout << "    FAIL " << c.suite << ": " << c.name << ": " << c.actual.substr(0, 300) << "\n";

    checks_pass(report, "counts", "sl class number", crit[1]);
    counts_line += " " + params.name() + "=" + std::to_string(ctx.special.classes.count());

    checks_pass(report, "degrees", "sl degree multiset", crit[2]);
    checks_pass(report, "degrees", "oracle square sum", crit[2]);

    checks_pass(report, "ggc", "", crit[3]);
    checks_pass(report, "auto", "restriction", crit[3]);

    checks_pass(report, "auto", "automorphism action", crit[5]);
    checks_pass(report, "auto", "gl automorphism action", crit[5]);
    checks_pass(report, "auto", "label assignment", crit[5]);

    checks_pass(report, "auto", "diagonal action", crit[7]);
    checks_pass(report, "auto", "h^d acts trivially", crit[7]);

    checks_pass(report, "auto", "single unit", crit[8]);
    checks_pass(report, "auto", "gamma_z incidence", crit[8]);
    units_line += " " + params.name() + "=" + std::to_string(report.calibrated_unit);

    if (n == 2 && q == 3) {
      std::multiset<std::int64_t> in_gamma0;
      for (std::size_t s = 0; s < ctx.special.table.count(); ++s)
        if (ctx.gamma_mult[0][s]) in_gamma0.insert(ctx.special.table.degrees[s]);
      if (in_gamma0 != std::multiset<std::int64_t>{1, 2, 2, 3}) crit[3].fail("SL_2(3) gamma_0 degrees differ from {3,2,2,1}");
    }
    if (n == 3 && q == 4 && eps == 1) {
      // The three degree-35 constituents: h cycles them, F_2 fixes one and swaps two.
      std::vector<std::size_t> rows;
      for (std::size_t s = 0; s < ctx.special.table.count(); ++s)
        if (ctx.special.table.degrees[s] == 35) rows.push_back(s);
      std::size_t f2_fixed = 0, h_fixed = 0;
      for (auto s : rows) {
        f2_fixed += ctx.aut_special.at(OuterAut{1, 0})[s] == s;
        h_fixed += ctx.diagonal[1][s] == s;
      }
      if (rows.size() != 3 || f2_fixed != 1 || h_fixed != 0)
        crit[5].fail("SL_3(4) degree-35 constituents: F_2 fixes " + std::to_string(f2_fixed) + ", h fixes " + std::to_string(h_fixed));
    }
    reports.push_back(std::move(report));
  }
  const double oracle_seconds = seconds_since(t0);
  summary[1] = "oracle class numbers equal label counts:" + counts_line;
  summary[5] = "field/graph automorphisms agree with the label action on SL_3(4), SU_3(2), SU_3(3) and the rest";
  summary[7] = "conjugation by h^w realizes xi -> xi + omega0(w) on all oracle groups";
  summary[8] = "calibrated unit per group:" + units_line;

  // ---- label-only sweeps --------------------------------------------------
  auto t1 = std::chrono::steady_clock::now();
  std::size_t sweep_groups = 0, labels_seen = 0, gl_labels_seen = 0;
  for (const auto& params : label_sweep()) {
    ++sweep_groups;
    // Sum over restriction fibres of a_lambda (deg / a_lambda)^2.
    Integer sum = 0;
    for_each_restriction_fibre(params, [&](const GLCharLabel& chi, std::int64_t a_lambda) {
      Integer deg = gl_char_degree(chi, params);
      if (deg % a_lambda != 0) crit[2].fail(params.name() + ": a_lambda does not divide a GL degree");
      Integer part = deg / a_lambda;
      sum += part * part * a_lambda;
    });
    if (sum != sl_group_order(params)) crit[2].fail(params.name() + ": degree square sum " + sum.str());

    // Fibres of phi_u: each xi is hit by d_nu / a_lambda values of a.
    for_each_sl_char(params, [&](const SLCharRecord& r) {
      ++labels_seen;
      if (r.d_nu % r.a_lambda != 0) {
        crit[4].fail(params.name() + ": a_lambda " + std::to_string(r.a_lambda) + " does not divide d_nu " + std::to_string(r.d_nu));
        return;
      }
      std::int64_t hits = 0;
      for (std::int64_t a = 0; a < r.d_nu; ++a)
        hits += gggc_contains(r.label, {r.wave_front, CyclicElt(a, r.d_nu)}, params) == Incidence::kContained;
      if (hits != r.d_nu / r.a_lambda) crit[4].fail(params.name() + ": xi hit " + std::to_string(hits) + " times");
    });

    for_each_gl_char(params, [&](const GLCharLabel& chi) {
      ++gl_labels_seen;
      if (!stabilizer_condition(chi, params).factorizes) crit[6].fail(params.name() + ": stabilizer does not factor");
    });
  }
  const double label_seconds = seconds_since(t1);
  summary[2] = "square-sum identity on " + std::to_string(sweep_groups) + " parameter sets; oracle degree multisets equal";
  summary[3] = "d distinct multiplicity-free gamma_z, scaled sum = Res gamma, wave-front rule, SL_2(3) gamma_0 = {3,2,2,1}";
  summary[4] = "a_lambda | d_nu and d_nu / a_lambda preimages over " + std::to_string(labels_seen) + " SL labels";
  summary[6] = "stabilizer factorization over " + std::to_string(gl_labels_seen) + " GL labels";

  std::cout << "  oracle groups " << oracle_seconds << " s, label sweeps " << label_seconds << " s\n";
  bool all = true;
  for (int i = 1; i <= 8; ++i) {
    const auto& o = crit[i];
    all = all && o.pass;
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << "  " << (o.pass ? summary[i] : o.detail) << "\n";
  }
  return all ? 0 : 1;
}
