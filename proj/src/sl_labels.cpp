#include "slnchar/sl_labels.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "slnchar/errors.hpp"

namespace slnchar {

namespace {

struct Component {
  OrbitMultiplicity om;
  Partition lambda;
};

GLCharLabel assemble(std::vector<Component> comps) {
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.om < b.om; });
  GLCharLabel out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0 && comps[i - 1].om.orbit == comps[i].om.orbit)
      throw InvariantViolation("orbit map was not injective");
    out.s.components.push_back(comps[i].om);
    out.lambda.parts.push_back(std::move(comps[i].lambda));
  }
  return out;
}

/// Scan of all T-translates: canonical flag, |A(s)| and |A(s)_lambda|.
struct TranslationScan {
  bool canonical = true;
  std::int64_t a = 0;
  std::int64_t a_lambda = 0;
};

TranslationScan scan_translates(const GLCharLabel& chi, const GroupParams& params, bool stop_early) {
  TranslationScan scan;
  const std::int64_t t_order = params.q_minus_eps();
  for (std::int64_t j = 0; j < t_order; ++j) {
    GLCharLabel moved = j == 0 ? chi : translate(chi, TorsionPoint(j, t_order));
    if (moved.s == chi.s) {
      ++scan.a;
      if (moved.lambda == chi.lambda) ++scan.a_lambda;
      else if (moved.lambda < chi.lambda) scan.canonical = false;
    } else if (moved.s < chi.s) {
      scan.canonical = false;
    }
    if (stop_early && !scan.canonical) break;
  }
  return scan;
}

}  // namespace

// ---------------------------------------------------------------------------

OuterAut OuterAut::normalized(std::int64_t k, int b, const GroupParams& params) {
  OuterAut out;
  b = ((b % 2) + 2) % 2;
  if (params.epsilon == -1) {
    out.field_exp = arith::mod(k + (b ? params.e : 0), 2 * params.e);
    out.graph_bit = 0;
  } else {
    out.field_exp = arith::mod(k, params.e);
    out.graph_bit = b;
  }
  return out;
}

OuterAut OuterAut::compose(const OuterAut& other, const GroupParams& params) const {
  return normalized(field_exp + other.field_exp, graph_bit ^ other.graph_bit, params);
}

std::int64_t OuterAut::multiplier(std::int64_t m, const GroupParams& params) const {
  std::int64_t v = arith::powmod(params.p, field_exp, m);
  return graph_bit ? arith::mod(-v, m) : v;
}

std::vector<OuterAut> all_outer_auts(const GroupParams& params) {
  std::vector<OuterAut> out;
  if (params.epsilon == -1) {
    for (std::int64_t k = 0; k < 2 * params.e; ++k) out.push_back({k, 0});
  } else {
    for (int b = 0; b < 2; ++b)
      for (std::int64_t k = 0; k < params.e; ++k) out.push_back({k, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

GLCharLabel translate(const GLCharLabel& chi, const TorsionPoint& t) {
  std::vector<Component> comps;
  comps.reserve(chi.s.components.size());
  for (std::size_t i = 0; i < chi.s.components.size(); ++i)
    comps.push_back({{chi.s.components[i].orbit.translated(t), chi.s.components[i].multiplicity}, chi.lambda.parts[i]});
  return assemble(std::move(comps));
}

GLCharLabel canonical_pair(const GLCharLabel& chi, const GroupParams& params) {
  GLCharLabel best = chi;
  const std::int64_t t_order = params.q_minus_eps();
  for (std::int64_t j = 1; j < t_order; ++j) {
    GLCharLabel moved = translate(chi, TorsionPoint(j, t_order));
    if (moved < best) best = std::move(moved);
  }
  return best;
}

bool is_canonical_pair(const GLCharLabel& chi, const GroupParams& params) {
  return scan_translates(chi, params, true).canonical;
}

PGLClassLabel pgl_class(const SemisimpleClassLabel& s, const GroupParams& params) {
  SemisimpleClassLabel best = s;
  const std::int64_t t_order = params.q_minus_eps();
  for (std::int64_t j = 1; j < t_order; ++j) {
    std::vector<OrbitMultiplicity> comps;
    for (const auto& c : s.components) comps.push_back({c.orbit.translated(TorsionPoint(j, t_order)), c.multiplicity});
    auto moved = SemisimpleClassLabel::from_components(std::move(comps));
    if (moved < best) best = std::move(moved);
  }
  return {best};
}

std::int64_t h1_order(const GroupParams& params) { return params.d(); }

ComponentGroupData component_group(const PGLClassLabel& s, const GroupParams& params) {
  ComponentGroupData out;
  out.order = 0;
  const std::int64_t t_order = params.q_minus_eps();
  for (std::int64_t j = 0; j < t_order; ++j) {
    std::vector<OrbitMultiplicity> comps;
    for (const auto& c : s.rep.components) comps.push_back({c.orbit.translated(TorsionPoint(j, t_order)), c.multiplicity});
    if (SemisimpleClassLabel::from_components(std::move(comps)) == s.rep) {
      if (out.order == 0 || (out.generator.is_zero() && j > 0)) out.generator = TorsionPoint(j, t_order);
      ++out.order;
    }
  }
  if (params.d() % out.order != 0) throw InvariantViolation("component group order does not divide d");
  return out;
}

std::int64_t lambda_stabilizer_order(const GLCharLabel& chi, const GroupParams& params) {
  return scan_translates(chi, params, false).a_lambda;
}

RestrictionData restriction_constituents(const GLCharLabel& chi, const GroupParams& params) {
  chi.validate(params);
  GLCharLabel canon = canonical_pair(chi, params);
  RestrictionData out;
  out.s = {canon.s};
  out.lambda = canon.lambda;
  out.a_lambda = lambda_stabilizer_order(canon, params);
  Integer deg = gl_char_degree(chi, params);
  if (deg % out.a_lambda != 0) throw InvariantViolation("a_lambda does not divide the GL degree");
  out.constituent_degree = deg / out.a_lambda;
  return out;
}

void for_each_restriction_fibre(const GroupParams& params,
                                const std::function<void(const GLCharLabel&, std::int64_t)>& fn) {
  for_each_gl_char(params, [&](const GLCharLabel& chi) {
    TranslationScan scan = scan_translates(chi, params, true);
    if (scan.canonical) fn(chi, scan.a_lambda);
  });
}

void for_each_sl_char(const GroupParams& params, const std::function<void(const SLCharRecord&)>& fn) {
  for_each_gl_char(params, [&](const GLCharLabel& chi) {
    TranslationScan scan = scan_translates(chi, params, true);
    if (!scan.canonical) return;
    SLCharRecord rec;
    rec.label.s = {chi.s};
    rec.label.lambda = chi.lambda;
    rec.a = scan.a;
    rec.a_lambda = scan.a_lambda;
    rec.degree = gl_char_degree(chi, params) / scan.a_lambda;
    rec.wave_front = wave_front(chi);
    rec.d_nu = unipotent_h1_order(rec.wave_front, params);
    for (std::int64_t xi = 0; xi < scan.a_lambda; ++xi) {
      rec.label.xi = CyclicElt(xi, scan.a_lambda);
      fn(rec);
    }
  });
}

std::vector<SLCharLabel> enumerate_sl_chars(const GroupParams& params) {
  std::vector<SLCharLabel> out;
  for_each_sl_char(params, [&](const SLCharRecord& rec) { out.push_back(rec.label); });
  return out;
}

// ---------------------------------------------------------------------------

CyclicElt omega0(const PGLClassLabel& s, const CyclicElt& z, const GroupParams& params) {
  if (z.modulus != params.d()) throw InvalidArgument("omega0: z must live in Z/d");
  return z.reduce(component_group(s, params).order);
}

CyclicElt omega0_lambda(const PGLClassLabel& s, const Multipartition& lambda, const CyclicElt& z,
                        const GroupParams& params) {
  if (z.modulus != params.d()) throw InvalidArgument("omega0_lambda: z must live in Z/d");
  return z.reduce(lambda_stabilizer_order({s.rep, lambda}, params));
}

std::int64_t unipotent_h1_order(const Partition& nu, const GroupParams& params) {
  return arith::gcd(nu.parts_gcd(), params.q_minus_eps());
}

CyclicElt phi_u(const Partition& nu, const CyclicElt& z, const GroupParams& params) {
  if (nu.weight() != params.n) throw InvalidArgument("phi_u: nu must be a partition of n");
  if (z.modulus != params.d()) throw InvalidArgument("phi_u: z must live in Z/d");
  return z.reduce(unipotent_h1_order(nu, params));
}

Incidence gggc_contains(const SLCharLabel& chi, const UnipotentSLClass& gamma, const GroupParams& params) {
  if (wave_front(chi.gl_label()) != gamma.nu) return Incidence::kNotGoverned;
  const std::int64_t d_nu = unipotent_h1_order(gamma.nu, params);
  if (gamma.a.modulus != d_nu) throw InvalidArgument("gggc_contains: a must live in Z/d_nu");
  const std::int64_t a_lambda = chi.xi.modulus;
  if (d_nu % a_lambda != 0)
    throw InvariantViolation("a_lambda = " + std::to_string(a_lambda) + " does not divide d_nu = " + std::to_string(d_nu));
  // Any preimage of a under phi_u; the kernel of phi_u lies in the kernel of omega0_lambda.
  CyclicElt z(gamma.a.value, params.d());
  return z.reduce(a_lambda).value == chi.xi.value ? Incidence::kContained : Incidence::kNotContained;
}

SLCharLabel diagonal_act(const CyclicElt& z, const SLCharLabel& chi, const GroupParams& params) {
  if (z.modulus != params.d()) throw InvalidArgument("diagonal_act: z must live in Z/d");
  SLCharLabel out = chi;
  out.xi = chi.xi + z.reduce(chi.xi.modulus);
  return out;
}

GLCharLabel act_gl(const OuterAut& sigma, const GLCharLabel& chi, const GroupParams& params) {
  OuterAut s = OuterAut::normalized(sigma.field_exp, sigma.graph_bit, params);
  if (s.is_identity()) return chi;
  std::vector<Component> comps;
  for (std::size_t i = 0; i < chi.s.components.size(); ++i) {
    const auto& c = chi.s.components[i];
    std::int64_t den = c.orbit.den();
    // sigma*^{-1} multiplies eigenvalues by p^{-k} (-1)^b.
    std::int64_t unit = arith::invmod(arith::powmod(params.p, s.field_exp, den), den);
    if (s.graph_bit) unit = arith::mod(-unit, den);
    comps.push_back({{c.orbit.scaled(unit), c.multiplicity}, chi.lambda.parts[i]});
  }
  return assemble(std::move(comps));
}

SLCharLabel act(const OuterAut& sigma, const SLCharLabel& chi, const GroupParams& params) {
  OuterAut s = OuterAut::normalized(sigma.field_exp, sigma.graph_bit, params);
  if (s.is_identity()) return chi;
  GLCharLabel image = canonical_pair(act_gl(s, chi.gl_label(), params), params);
  SLCharLabel out;
  out.s = {image.s};
  out.lambda = image.lambda;
  const std::int64_t a_lambda = chi.xi.modulus;
  if (params.d() % a_lambda != 0) throw InvalidArgument("act: xi modulus must divide d");
  out.xi = CyclicElt(arith::mulmod(chi.xi.value, s.multiplier(a_lambda, params), a_lambda), a_lambda);
  return out;
}

StabilizerReport stabilizer_condition(const GLCharLabel& chi, const GroupParams& params) {
  RestrictionData res = restriction_constituents(chi, params);
  SLCharLabel chi0{res.s, res.lambda, CyclicElt(0, res.a_lambda)};
  const std::int64_t d = params.d();
  const auto auts = all_outer_auts(params);

  StabilizerReport report;
  report.aut_group_order = static_cast<std::int64_t>(auts.size());
  std::vector<SLCharLabel> images;
  images.reserve(auts.size());
  for (const auto& sigma : auts) {
    images.push_back(act(sigma, chi0, params));
    if (images.back() == chi0) report.aut_stabilizer.push_back(sigma);
  }
  std::set<std::int64_t> diag;
  for (std::int64_t z = 0; z < d; ++z)
    if (diagonal_act(CyclicElt(z, d), chi0, params) == chi0) diag.insert(z);
  report.diagonal_stabilizer = static_cast<std::int64_t>(diag.size());

  std::set<OuterAut> aut_stab(report.aut_stabilizer.begin(), report.aut_stabilizer.end());
  for (std::int64_t z = 0; z < d; ++z) {
    for (std::size_t i = 0; i < auts.size(); ++i) {
      const SLCharLabel& img = images[i];
      bool fixed = false;
      if (img.s == chi0.s && img.lambda == chi0.lambda) fixed = diagonal_act(CyclicElt(z, d), img, params) == chi0;
      bool in_product = diag.count(z) && aut_stab.count(auts[i]);
      if (fixed) ++report.full_stabilizer;
      if (fixed != in_product) report.factorizes = false;
    }
  }
  return report;
}

std::map<Integer, std::int64_t> cd_set(const GroupParams& params) {
  std::map<Integer, std::int64_t> out;
  for_each_sl_char(params, [&](const SLCharRecord& rec) { ++out[rec.degree]; });
  return out;
}

}  // namespace slnchar
