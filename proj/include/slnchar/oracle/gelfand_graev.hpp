#pragma once

// Classical Gelfand-Graev characters Ind_U^G psi for U the upper
// unitriangular matrices in G and psi a regular linear character of U.

#include <vector>

#include "slnchar/oracle/dixon.hpp"

namespace slnchar::oracle {

/// Indices of the upper unitriangular elements of g.
std::vector<std::size_t> upper_unitriangular(const MatrixGroup& g);

/// Superdiagonal positions grouped by simple root: singletons for linear
/// groups, {i, n-2-i} for unitary ones.
std::vector<std::vector<int>> root_blocks(const MatrixGroup& g);

/// psi_a(u) = zeta_p^{Tr(sum_i a_i u_{i,i+1})}; returns the trace exponent.
int psi_exponent(const MatrixGroup& g, const std::vector<Elem>& a, const Mat& u);

/// psi_a is nontrivial on the part of U living over each root block.
bool is_regular_parameter(const MatrixGroup& g, const std::vector<std::size_t>& U, const std::vector<Elem>& a);

/// All regular parameters, in code order.
std::vector<std::vector<Elem>> regular_parameters(const MatrixGroup& g, const std::vector<std::size_t>& U);

/// (1, ..., 1) when regular, else the first regular parameter with entries in F_p.
std::vector<Elem> standard_parameter(const MatrixGroup& g, const std::vector<std::size_t>& U);

/// Ind_U^G psi_a as a class function over the given cyclotomic field.
ClassFunction gelfand_graev_character(const MatrixGroup& g, const ClassData& c, const CyclotomicField& field,
                                      const std::vector<std::size_t>& U, const std::vector<Elem>& a);

}  // namespace slnchar::oracle
