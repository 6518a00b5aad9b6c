#pragma once

// Label-level model of Irr(GL^eps_n(q)): pairs (semisimple class, multipartition).

#include <compare>
#include <functional>
#include <vector>

#include "slnchar/torsion.hpp"

namespace slnchar {

/// One orbit O of eigenvalues with its multiplicity m_O.
struct OrbitMultiplicity {
  FrobeniusOrbit orbit;
  int multiplicity = 1;

  friend auto operator<=>(const OrbitMultiplicity& a, const OrbitMultiplicity& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.multiplicity <=> b.multiplicity;
  }
  friend bool operator==(const OrbitMultiplicity&, const OrbitMultiplicity&) = default;
};

/// Semisimple class of GL^eps_n(q) as a canonically ordered orbit multiset.
struct SemisimpleClassLabel {
  std::vector<OrbitMultiplicity> components;  // strictly increasing orbits

  /// Sorts the components and merges repeated orbits.
  static SemisimpleClassLabel from_components(std::vector<OrbitMultiplicity> components);
  int rank() const;  // sum m_O deg(O)

  friend auto operator<=>(const SemisimpleClassLabel&, const SemisimpleClassLabel&) = default;
  friend bool operator==(const SemisimpleClassLabel&, const SemisimpleClassLabel&) = default;
};

/// One partition per component, aligned with SemisimpleClassLabel::components.
struct Multipartition {
  std::vector<Partition> parts;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;
};

struct GLCharLabel {
  SemisimpleClassLabel s;
  Multipartition lambda;

  /// Checks weight(lambda_O) = m_O and sum m_O deg(O) = n.
  void validate(const GroupParams& params) const;

  friend auto operator<=>(const GLCharLabel&, const GLCharLabel&) = default;
  friend bool operator==(const GLCharLabel&, const GLCharLabel&) = default;
};

/// Factor GL^{sign}_{m}(Q) of a centralizer, Q = q^degree, sign = eps^degree.
struct CentralizerFactor {
  int degree = 1;
  int multiplicity = 1;
  int sign = 1;

  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

struct CentralizerShape {
  std::vector<CentralizerFactor> factors;
};

/// |GL^sign_m(Q)| = Q^{m(m-1)/2} prod_{i=1..m} (Q^i - sign^i).
Integer gl_order(int m, const Integer& Q, int sign);
/// |GL^eps_n(q)|.
Integer group_order(const GroupParams& params);
/// |SL^eps_n(q)| = |GL^eps_n(q)| / (q - eps).
Integer sl_group_order(const GroupParams& params);
/// Order of the centralizer with the given shape.
Integer group_order(const CentralizerShape& shape, const GroupParams& params);

/// Calls fn for every semisimple class label, in canonical order.
void for_each_semisimple(const GroupParams& params, const std::function<void(const SemisimpleClassLabel&)>& fn);
std::vector<SemisimpleClassLabel> enumerate_semisimple(const GroupParams& params);

/// Calls fn for every (s, lambda), ordered by s then lambda.
void for_each_gl_char(const GroupParams& params, const std::function<void(const GLCharLabel&)>& fn);
std::vector<GLCharLabel> enumerate_gl_chars(const GroupParams& params);

/// One factor GL^{eps^d}_{m}(q^d) per orbit.
CentralizerShape centralizer_shape(const SemisimpleClassLabel& s, const GroupParams& params);

/// Degree of the unipotent character lambda of GL^{sign}_{|lambda|}(Q): the
/// q-hook formula evaluated at Q, or at -Q followed by absolute value.
Integer unipotent_degree(const Partition& lambda, const Integer& Q, int sign);

/// p'-part of |GL|/|C| times the product of the factor unipotent degrees.
Integer gl_char_degree(const GLCharLabel& chi, const GroupParams& params);

/// Part-wise sum over orbits of deg(O) * conjugate(lambda_O).
Partition wave_front(const GLCharLabel& chi);
/// Part-wise sum over orbits of deg(O) * lambda_O.
Partition unipotent_support(const GLCharLabel& chi);

/// Sum of all eigenvalues with multiplicity, reduced mod 1.
TorsionPoint central_character_exponent(const GLCharLabel& chi);

/// True when every lambda_O is a single column (the regular characters).
bool is_regular(const GLCharLabel& chi);

}  // namespace slnchar
