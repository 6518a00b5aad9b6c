#include "slnchar/oracle/matching.hpp"

#include <algorithm>
#include <numeric>

#include "slnchar/errors.hpp"
#include "slnchar/oracle/automorphisms.hpp"
#include "slnchar/oracle/gelfand_graev.hpp"
#include "slnchar/oracle/parallel.hpp"

namespace slnchar::oracle {

namespace {

Mat mat_pow(const MatrixGroup& g, const Mat& a, std::int64_t k) {
  Mat base = k < 0 ? g.inverse(a) : a;
  Mat r = g.identity();
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = g.multiply(r, base);
  return r;
}

// Units of Z/m in increasing order.
std::vector<std::int64_t> units(std::int64_t m) {
  if (m == 1) return {1};
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < m; ++u)
    if (arith::gcd(u, m) == 1) out.push_back(u);
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (x > Integer(INT64_MAX)) throw ResourceError("degree does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

// One round-robin colour refinement over two structures that share a key space.
struct Side {
  std::vector<std::int64_t> colour;
  std::vector<std::vector<std::size_t>> perms;
};

// Cycle length of x under p, for every x.
std::vector<std::int64_t> cycle_lengths(const std::vector<std::size_t>& p) {
  std::vector<std::int64_t> out(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (out[x]) continue;
    std::vector<std::size_t> cyc{x};
    for (std::size_t y = p[x]; y != x; y = p[y]) cyc.push_back(y);
    for (auto y : cyc) out[y] = static_cast<std::int64_t>(cyc.size());
  }
  return out;
}

// f^lambda, the number of standard tableaux; 0 outside the unipotent series.
std::int64_t principal_series_prediction(const GLCharLabel& chi) {
  if (chi.s.components.size() != 1 || !chi.s.components[0].orbit.representative().is_zero()) return 0;
  const Partition& lam = chi.lambda.parts[0];
  Integer f = 1;
  for (int i = 2; i <= lam.weight(); ++i) f *= i;
  for (int h : lam.hook_lengths()) f /= h;
  return static_cast<std::int64_t>(f);
}

std::size_t distinct(const std::vector<std::int64_t>& c) {
  std::set<std::int64_t> s(c.begin(), c.end());
  return s.size();
}

void refine(Side& a, Side& b) {
  std::size_t before = distinct(a.colour) + distinct(b.colour);
  for (;;) {
    std::map<std::vector<std::int64_t>, std::int64_t> ids;
    auto step = [&](Side& s) {
      std::vector<std::int64_t> next(s.colour.size());
      for (std::size_t x = 0; x < s.colour.size(); ++x) {
        std::vector<std::int64_t> key{s.colour[x]};
        for (const auto& p : s.perms) key.push_back(s.colour[p[x]]);
        auto [it, fresh] = ids.emplace(std::move(key), static_cast<std::int64_t>(ids.size()));
        next[x] = it->second;
      }
      return next;
    };
    auto na = step(a);
    auto nb = step(b);
    a.colour = std::move(na);
    b.colour = std::move(nb);
    std::size_t after = distinct(a.colour) + distinct(b.colour);
    if (after == before) return;
    before = after;
  }
}

}  // namespace

ClassFunction OracleContext::restrict_to_special(const ClassFunction& f) const {
  ClassFunction out(special.classes.count());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = full.table.field->restrict_to(*special.table.field, f[full_class_of[k]]);
  return out;
}

OracleContext make_context(const GroupParams& params, const std::optional<std::string>& cache_dir, int threads) {
  if (params.n < 2) throw InvalidArgument("the oracle needs n >= 2");
  OracleContext ctx;
  ctx.params = params;
  ctx.full = build_oracle_group(params, false, cache_dir, threads);
  ctx.special = build_oracle_group(params, true, cache_dir, threads);
  const MatrixGroup& G = *ctx.full.group;
  const MatrixGroup& S = *ctx.special.group;
  const auto& GF = *ctx.full.table.field;
  const auto& SF = *ctx.special.table.field;
  if (GF.conductor() % SF.conductor() != 0) throw InvariantViolation("SL exponent does not divide GL exponent");

  ctx.full_class_of.resize(ctx.special.classes.count());
  for (std::size_t k = 0; k < ctx.full_class_of.size(); ++k)
    ctx.full_class_of[k] = ctx.full.classes.class_of[G.index_of(S.element(ctx.special.classes.reps[k]))];

  ctx.unipotent_full = upper_unitriangular(G);
  ctx.unipotent_special = upper_unitriangular(S);
  if (ctx.unipotent_full.size() != ctx.unipotent_special.size())
    throw InvariantViolation("unitriangular subgroups of GL and SL differ");
  ctx.standard_param = standard_parameter(S, ctx.unipotent_special);
  ctx.h = diagonal_generator(G);
  ctx.c0 = centre_generator(G);
  if (G.det(ctx.h) != ctx.c0) throw InvariantViolation("det(h) is not the centre generator");

  const std::int64_t d = params.d();
  ctx.gl_gamma = gelfand_graev_character(G, ctx.full.classes, GF, ctx.unipotent_full, ctx.standard_param);
  ClassFunction gamma0 = gelfand_graev_character(S, ctx.special.classes, SF, ctx.unipotent_special, ctx.standard_param);

  // Class maps of x -> h^{-w} x h^w on SL, 0 <= w <= d.
  std::vector<std::vector<std::uint32_t>> conj(d + 1);
  for (std::int64_t w = 0; w <= d; ++w) conj[w] = class_map(S, ctx.special.classes, conjugation_map(S, mat_pow(G, ctx.h, -w)));
  for (std::int64_t z = 0; z < d; ++z) ctx.gamma.push_back(compose(gamma0, conj[z]));
  for (std::int64_t w = 0; w <= d; ++w) ctx.diagonal.push_back(character_permutation(ctx.special.table, conj[w]));

  const auto& Grows = ctx.full.table.rows;
  const auto& Srows = ctx.special.table.rows;
  ctx.gl_gamma_mult.resize(Grows.size());
  ctx.restriction.assign(Grows.size(), std::vector<std::int64_t>(Srows.size(), 0));
  parallel_for(Grows.size(), resolve_threads(threads), [&](std::size_t r) {
    ctx.gl_gamma_mult[r] = inner_product(GF, ctx.full.classes, ctx.gl_gamma, Grows[r]);
    ClassFunction res = ctx.restrict_to_special(Grows[r]);
    for (std::size_t s = 0; s < Srows.size(); ++s)
      ctx.restriction[r][s] = inner_product(SF, ctx.special.classes, res, Srows[s]);
  });
  ctx.gamma_mult.assign(d, std::vector<std::int64_t>(Srows.size(), 0));
  for (std::int64_t z = 0; z < d; ++z)
    for (std::size_t s = 0; s < Srows.size(); ++s)
      ctx.gamma_mult[z][s] = inner_product(SF, ctx.special.classes, ctx.gamma[z], Srows[s]);

  if (params.epsilon == 1) {
    // Permutation character on flags: (|G|/|B|) |C_k n B| / |C_k|.
    std::vector<std::int64_t> in_borel(ctx.full.classes.count(), 0);
    std::int64_t borel = 0;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const Mat& x = G.element(i);
      bool upper = true;
      for (int r = 1; r < params.n && upper; ++r)
        for (int c = 0; c < r && upper; ++c) upper = x[r * params.n + c] == 0;
      if (!upper) continue;
      ++borel;
      ++in_borel[ctx.full.classes.class_of[i]];
    }
    const std::int64_t index = static_cast<std::int64_t>(G.size()) / borel;
    ClassFunction perm(ctx.full.classes.count());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if ((index * in_borel[k]) % ctx.full.classes.sizes[k]) throw InvariantViolation("flag character is not integral");
      perm[k] = GF.integer(index * in_borel[k] / ctx.full.classes.sizes[k]);
    }
    ctx.principal_series_mult.resize(Grows.size());
    for (std::size_t r = 0; r < Grows.size(); ++r)
      ctx.principal_series_mult[r] = inner_product(GF, ctx.full.classes, perm, Grows[r]);
  }

  // theta_1(g) = zeta_{q-eps}^j where det g = c0^j.
  const std::int64_t qe = params.q_minus_eps();
  const FiniteField& F = G.field();
  ClassFunction theta(ctx.full.classes.count());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    Elem det = G.det(G.element(ctx.full.classes.reps[k]));
    std::int64_t j = 0;
    while (j < qe && F.pow(ctx.c0, j) != det) ++j;
    if (j == qe) throw InvariantViolation("determinant outside the centre image");
    theta[k] = GF.root(j, qe);
  }
  ctx.twist.resize(Grows.size());
  for (std::size_t r = 0; r < Grows.size(); ++r) {
    ClassFunction f(theta.size());
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = GF.mul(Grows[r][k], theta[k]);
    std::int64_t img = ctx.full.table.find(f);
    if (img < 0) throw InvariantViolation("linear twist of a character is not irreducible");
    ctx.twist[r] = static_cast<std::size_t>(img);
  }

  for (const auto& sigma : all_outer_auts(params)) {
    ctx.aut_full[sigma] = character_permutation(ctx.full.table,
                                                class_map(G, ctx.full.classes, outer_map_inverse(G, sigma)));
    ctx.aut_special[sigma] = character_permutation(ctx.special.table,
                                                   class_map(S, ctx.special.classes, outer_map_inverse(S, sigma)));
  }
  return ctx;
}

std::size_t GLMatching::unique_count() const {
  std::size_t n = 0;
  for (const auto& c : row_classes) n += c.size() == 1;
  return n;
}

GLMatching match_gl(const OracleContext& ctx) {
  const GroupParams& params = ctx.params;
  const std::int64_t qe = params.q_minus_eps();
  const auto& table = ctx.full.table;
  const auto& GF = *table.field;
  const std::size_t K = table.count();

  GLMatching out;
  out.labels = enumerate_gl_chars(params);
  const std::size_t L = out.labels.size();
  if (L != K) {
    out.failure = "label count " + std::to_string(L) + " differs from class count " + std::to_string(K);
    return out;
  }
  std::map<GLCharLabel, std::size_t> index;
  for (std::size_t i = 0; i < L; ++i) index[out.labels[i]] = i;

  // Oracle central exponents: chi(c0 I) = chi(1) zeta_{q-eps}^k.
  const MatrixGroup& G = *ctx.full.group;
  const std::uint32_t centre_class = ctx.full.classes.class_of[G.index_of(G.scalar(ctx.c0))];
  std::vector<std::int64_t> k_row(K);
  for (std::size_t r = 0; r < K; ++r) {
    Cyc v = GF.divide_exact(table.rows[r][centre_class], table.degrees[r]);
    k_row[r] = GF.root_exponent(v, qe);
    if (k_row[r] < 0) throw InvariantViolation("central value is not a root of unity");
  }

  std::vector<OuterAut> auts;
  for (const auto& sigma : all_outer_auts(params))
    if (!sigma.is_identity()) auts.push_back(sigma);

  std::string last_failure;
  for (std::int64_t u : units(qe)) {
    const std::int64_t u_inv = qe == 1 ? 0 : arith::invmod(u, qe);
    Side rows, labels;
    rows.perms.push_back(ctx.twist);
    labels.perms.emplace_back(L);
    for (std::size_t i = 0; i < L; ++i)
      labels.perms[0][i] = index.at(translate(out.labels[i], TorsionPoint(u_inv, qe)));
    for (const auto& sigma : auts) {
      rows.perms.push_back(ctx.aut_full.at(sigma));
      std::vector<std::size_t> p(L);
      for (std::size_t i = 0; i < L; ++i) p[i] = index.at(act_gl(sigma, out.labels[i], params));
      labels.perms.push_back(std::move(p));
    }

    std::map<std::vector<std::int64_t>, std::int64_t> ids;
    auto id_of = [&](std::vector<std::int64_t> key) {
      return ids.emplace(std::move(key), static_cast<std::int64_t>(ids.size())).first->second;
    };
    // Initial colour: degree, central exponent, Gelfand-Graev membership and
    // the cycle length under every permutation.
    std::vector<std::vector<std::int64_t>> row_cycles, label_cycles;
    for (const auto& p : rows.perms) row_cycles.push_back(cycle_lengths(p));
    for (const auto& p : labels.perms) label_cycles.push_back(cycle_lengths(p));
    rows.colour.resize(K);
    labels.colour.resize(L);
    for (std::size_t r = 0; r < K; ++r) {
      std::vector<std::int64_t> key{table.degrees[r], k_row[r], ctx.gl_gamma_mult[r], r == 0 ? 1 : 0};
      if (!ctx.principal_series_mult.empty()) key.push_back(ctx.principal_series_mult[r]);
      for (const auto& c : row_cycles) key.push_back(c[r]);
      rows.colour[r] = id_of(std::move(key));
    }
    for (std::size_t i = 0; i < L; ++i) {
      const auto& chi = out.labels[i];
      const TorsionPoint t = central_character_exponent(chi);
      std::int64_t kl = arith::mod(t.num() * (qe / t.den()) * u, qe);
      // The trivial character is row 0 and the label ({0}^n, (n)).
      const bool trivial = chi.s.components.size() == 1 && chi.s.components[0].orbit.representative().is_zero() &&
                           chi.lambda.parts[0] == Partition::single_row(params.n);
      std::vector<std::int64_t> key{to_int64(gl_char_degree(chi, params)), kl, is_regular(chi) ? 1 : 0, trivial ? 1 : 0};
      if (!ctx.principal_series_mult.empty()) key.push_back(principal_series_prediction(chi));
      for (const auto& c : label_cycles) key.push_back(c[i]);
      labels.colour[i] = id_of(std::move(key));
    }
    refine(rows, labels);

    std::map<std::int64_t, std::vector<std::size_t>> rc, lc;
    for (std::size_t r = 0; r < K; ++r) rc[rows.colour[r]].push_back(r);
    for (std::size_t i = 0; i < L; ++i) lc[labels.colour[i]].push_back(i);
    bool ok = rc.size() == lc.size();
    for (const auto& [c, members] : rc) {
      auto it = lc.find(c);
      if (it == lc.end() || it->second.size() != members.size()) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      last_failure = "colour classes disagree for central unit " + std::to_string(u);
      continue;
    }
    out.consistent = true;
    out.central_unit = u;
    out.class_of_row.assign(K, 0);
    for (const auto& [c, members] : rc) {
      for (auto r : members) out.class_of_row[r] = out.row_classes.size();
      out.row_classes.push_back(members);
      out.label_classes.push_back(lc.at(c));
    }
    return out;
  }
  out.failure = last_failure;
  return out;
}

std::vector<Fibre> restriction_fibres(const OracleContext& ctx, const GLMatching& m) {
  const std::size_t S = ctx.special.table.count();
  const std::size_t K = ctx.full.table.count();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<std::size_t> over;
    for (std::size_t r = 0; r < K; ++r)
      if (ctx.restriction[r][s] > 0) over.push_back(r);
    groups[over].push_back(s);
  }
  std::vector<Fibre> out;
  for (auto& [gl_rows, sl_rows] : groups) {
    Fibre f;
    f.gl_rows = gl_rows;
    f.sl_rows = sl_rows;
    f.regular = !gl_rows.empty() && ctx.gl_gamma_mult[gl_rows.front()] == 1;
    bool first = true;
    for (auto r : gl_rows) {
      std::set<GLCharLabel> cand;
      if (m.consistent)
        for (auto i : m.label_classes[m.class_of_row[r]]) cand.insert(canonical_pair(m.labels[i], ctx.params));
      if (first) f.pairs = std::move(cand);
      else {
        std::set<GLCharLabel> both;
        std::set_intersection(f.pairs.begin(), f.pairs.end(), cand.begin(), cand.end(),
                              std::inserter(both, both.begin()));
        f.pairs = std::move(both);
      }
      first = false;
    }
    std::set<std::int64_t> stab;
    for (const auto& p : f.pairs) stab.insert(lambda_stabilizer_order(p, ctx.params));
    f.a_lambda = stab.size() == 1 ? *stab.begin() : 0;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::set<SLCharLabel>> assign_sl_labels(const OracleContext& ctx, const std::vector<Fibre>& fibres,
                                                    std::int64_t unit) {
  const std::int64_t d = ctx.params.d();
  std::vector<std::set<SLCharLabel>> out(ctx.special.table.count());
  for (const auto& f : fibres) {
    for (auto s : f.sl_rows) {
      for (const auto& p : f.pairs) {
        const std::int64_t a = lambda_stabilizer_order(p, ctx.params);
        SLCharLabel base{PGLClassLabel{p.s}, p.lambda, CyclicElt(0, a)};
        if (!f.regular) {
          out[s].insert(base);
          continue;
        }
        for (std::int64_t z = 0; z < d; ++z) {
          if (ctx.gamma_mult[z][s] <= 0) continue;
          base.xi = CyclicElt(unit * z, a);
          out[s].insert(base);
        }
      }
    }
  }
  return out;
}

}  // namespace slnchar::oracle
