#pragma once

// Triple labels (s, lambda, xi) for Irr(SL^eps_n(q)), the homomorphisms that
// govern diagonal automorphisms and Gelfand-Graev incidence, and the action of
// field and graph automorphisms on labels.
//
// Coordinates used throughout:
//  * H^1(F, Z(G)) is Z/d with d = gcd(n, q - eps); z = 1 is the torsion point 1/d.
//  * The component group A(s) is the subgroup of T = (1/(q - eps))Z/Z fixing the
//    eigenvalue multiset of s under translation; Irr(A(s)_lambda) is Z/a_lambda.
//  * omega0 is reduction Z/d -> Z/a, and xi = 0 is the constituent lying in the
//    Gelfand-Graev character indexed by a = 0.

#include <cstdint>
#include <map>
#include <vector>

#include "slnchar/gl_labels.hpp"

namespace slnchar {

/// The image s of a semisimple label in PGL: the minimal translate under T.
struct PGLClassLabel {
  SemisimpleClassLabel rep;

  friend auto operator<=>(const PGLClassLabel&, const PGLClassLabel&) = default;
  friend bool operator==(const PGLClassLabel&, const PGLClassLabel&) = default;
};

struct ComponentGroupData {
  std::int64_t order = 1;
  TorsionPoint generator;  // 0/1 when the group is trivial
};

struct SLCharLabel {
  PGLClassLabel s;
  Multipartition lambda;  // aligned with s.rep
  CyclicElt xi;           // modulus a_lambda

  GLCharLabel gl_label() const { return {s.rep, lambda}; }

  friend auto operator<=>(const SLCharLabel& a, const SLCharLabel& b) {
    if (auto c = a.s <=> b.s; c != 0) return c;
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    if (auto c = a.xi.modulus <=> b.xi.modulus; c != 0) return c;
    return a.xi.value <=> b.xi.value;
  }
  friend bool operator==(const SLCharLabel&, const SLCharLabel&) = default;
};

/// A rational G-class inside the geometric unipotent class nu; a lives in Z/d_nu.
struct UnipotentSLClass {
  Partition nu;
  CyclicElt a;
};

/// sigma = F_p^k composed with gamma^b. Acts on eigenvalues of the dual by
/// p^{-k} (-1)^b and on H^1 by p^k (-1)^b.
struct OuterAut {
  std::int64_t field_exp = 0;
  int graph_bit = 0;

  /// Reduces k modulo the order of F_p (e, or 2e in the unitary case, where
  /// gamma is absorbed into F_p^e).
  static OuterAut normalized(std::int64_t k, int b, const GroupParams& params);
  OuterAut compose(const OuterAut& other, const GroupParams& params) const;
  /// p^k (-1)^b modulo m.
  std::int64_t multiplier(std::int64_t m, const GroupParams& params) const;
  bool is_identity() const { return field_exp == 0 && graph_bit == 0; }

  friend auto operator<=>(const OuterAut&, const OuterAut&) = default;
};

/// Every element of <F_p, gamma> in normalized form.
std::vector<OuterAut> all_outer_auts(const GroupParams& params);

/// Label with every eigenvalue translated by t in T; lambda follows its orbit.
GLCharLabel translate(const GLCharLabel& chi, const TorsionPoint& t);

/// Minimal translate of (s, lambda) under T, comparing s first.
GLCharLabel canonical_pair(const GLCharLabel& chi, const GroupParams& params);
bool is_canonical_pair(const GLCharLabel& chi, const GroupParams& params);
PGLClassLabel pgl_class(const SemisimpleClassLabel& s, const GroupParams& params);

/// |H^1(F, Z(G))| = gcd(n, q - eps).
std::int64_t h1_order(const GroupParams& params);

/// Translations in T fixing the eigenvalue multiset of s.
ComponentGroupData component_group(const PGLClassLabel& s, const GroupParams& params);
/// |A(s)_lambda|: translations fixing (s, lambda).
std::int64_t lambda_stabilizer_order(const GLCharLabel& chi, const GroupParams& params);

struct RestrictionData {
  PGLClassLabel s;
  Multipartition lambda;
  std::int64_t a_lambda = 1;
  Integer constituent_degree;
};
RestrictionData restriction_constituents(const GLCharLabel& chi, const GroupParams& params);

/// Streams every SL label with its GL degree data, in canonical order.
struct SLCharRecord {
  SLCharLabel label;
  Integer degree;
  std::int64_t a = 1;
  std::int64_t a_lambda = 1;
  Partition wave_front;
  std::int64_t d_nu = 1;
};
void for_each_sl_char(const GroupParams& params, const std::function<void(const SLCharRecord&)>& fn);
std::vector<SLCharLabel> enumerate_sl_chars(const GroupParams& params);

/// Calls fn(canonical pair, a_lambda) once per Res-fibre, i.e. per T-orbit of GL labels.
void for_each_restriction_fibre(const GroupParams& params,
                                const std::function<void(const GLCharLabel&, std::int64_t)>& fn);

CyclicElt omega0(const PGLClassLabel& s, const CyclicElt& z, const GroupParams& params);
CyclicElt omega0_lambda(const PGLClassLabel& s, const Multipartition& lambda, const CyclicElt& z,
                        const GroupParams& params);

/// gcd(gcd of the parts of nu, q - eps).
std::int64_t unipotent_h1_order(const Partition& nu, const GroupParams& params);
CyclicElt phi_u(const Partition& nu, const CyclicElt& z, const GroupParams& params);

enum class Incidence { kContained, kNotContained, kNotGoverned };

/// Generalized Gelfand-Graev incidence: chi lies in Gamma_a iff xi is the
/// image of any phi_u-preimage of a under omega0_lambda. kNotGoverned when
/// Gamma.nu is not the wave front of chi.
Incidence gggc_contains(const SLCharLabel& chi, const UnipotentSLClass& gamma, const GroupParams& params);

/// Diagonal automorphism indexed by z in Z/d: xi -> xi + omega0_lambda(z).
SLCharLabel diagonal_act(const CyclicElt& z, const SLCharLabel& chi, const GroupParams& params);

/// GL-level part of the action: eigenvalues multiplied by p^{-k} (-1)^b, no canonicalization.
GLCharLabel act_gl(const OuterAut& sigma, const GLCharLabel& chi, const GroupParams& params);

/// sigma . chi_{s, lambda, omega(z)} = chi_{sigma*^{-1}(s), sigma*(lambda), omega(sigma(z))}.
SLCharLabel act(const OuterAut& sigma, const SLCharLabel& chi, const GroupParams& params);

struct StabilizerReport {
  bool factorizes = true;
  std::int64_t diagonal_stabilizer = 0;  // |{z : z . chi0 = chi0}|
  std::vector<OuterAut> aut_stabilizer;
  std::int64_t full_stabilizer = 0;  // |(Z/d x <F_p, gamma>)_{chi0}|
  std::int64_t aut_group_order = 0;
};

/// For chi0 = chi_{s, lambda, 0} over the given GL label, compares the stabilizer
/// in diagonal x <F_p, gamma> with the product of the two partial stabilizers.
StabilizerReport stabilizer_condition(const GLCharLabel& chi, const GroupParams& params);

/// Irreducible character degrees of SL^eps_n(q) with multiplicities.
std::map<Integer, std::int64_t> cd_set(const GroupParams& params);

}  // namespace slnchar
