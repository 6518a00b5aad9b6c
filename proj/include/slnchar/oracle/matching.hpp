#pragma once

// Matching oracle characters with labels. GL characters are matched by
// colour refinement on (degree, central character, Gelfand-Graev
// membership) under twisting by a linear character and the field and graph
// automorphisms. SL characters inherit (s, lambda) from the GL characters
// whose restriction contains them and xi from the Gelfand-Graev characters
// Gamma_z containing them.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "slnchar/oracle/cache.hpp"
#include "slnchar/sl_labels.hpp"

namespace slnchar::oracle {

/// Everything derived from the pair SL <= GL that the checks consume.
struct OracleContext {
  GroupParams params;
  OracleGroup full, special;

  std::vector<std::uint32_t> full_class_of;  // class of SL rep k inside GL
  std::vector<std::size_t> unipotent_full, unipotent_special;
  std::vector<Elem> standard_param;
  Mat h{};       // diagonal generator, det(h) = c0
  Elem c0 = 0;   // centre generator

  ClassFunction gl_gamma;                          // on GL classes
  std::vector<ClassFunction> gamma;                // Gamma_z on SL classes, 0 <= z < d
  std::vector<std::vector<std::int64_t>> restriction;  // [GL row][SL row]
  std::vector<std::vector<std::int64_t>> gamma_mult;   // [z][SL row]
  std::vector<std::int64_t> gl_gamma_mult;             // per GL row
  /// <chi, Ind_B^GL 1> per GL row, B the upper triangular matrices; linear groups only.
  std::vector<std::int64_t> principal_series_mult;

  std::vector<std::size_t> twist;                           // GL row -> row * theta_1
  std::map<OuterAut, std::vector<std::size_t>> aut_full;    // GL row permutations
  std::map<OuterAut, std::vector<std::size_t>> aut_special; // SL row permutations
  std::vector<std::vector<std::size_t>> diagonal;           // [w] SL rows under conjugation by h^w, 0 <= w <= d

  ClassFunction restrict_to_special(const ClassFunction& f) const;
};

OracleContext make_context(const GroupParams& params, const std::optional<std::string>& cache_dir, int threads);

struct GLMatching {
  bool consistent = false;
  std::string failure;
  std::int64_t central_unit = 0;
  std::vector<GLCharLabel> labels;
  std::vector<std::vector<std::size_t>> row_classes;    // colour classes of oracle rows
  std::vector<std::vector<std::size_t>> label_classes;  // aligned label classes
  std::vector<std::size_t> class_of_row;

  std::size_t unique_count() const;
};

GLMatching match_gl(const OracleContext& ctx);

/// SL rows grouped by the set of GL rows whose restriction contains them.
struct Fibre {
  std::vector<std::size_t> gl_rows;
  std::vector<std::size_t> sl_rows;
  std::set<GLCharLabel> pairs;  // candidate canonical pairs
  std::int64_t a_lambda = 0;    // 0 when candidates disagree
  bool regular = false;
};
std::vector<Fibre> restriction_fibres(const OracleContext& ctx, const GLMatching& m);

/// Candidate labels of every SL row with xi read off the Gamma_z it lies in,
/// using oracle index z <-> label coordinate unit * z.
std::vector<std::set<SLCharLabel>> assign_sl_labels(const OracleContext& ctx, const std::vector<Fibre>& fibres,
                                                    std::int64_t unit);

}  // namespace slnchar::oracle
