#pragma once

// Concrete automorphisms of the matrix groups and the permutations they
// induce on classes and on irreducible characters.

#include <functional>
#include <vector>

#include "slnchar/oracle/dixon.hpp"
#include "slnchar/sl_labels.hpp"

namespace slnchar::oracle {

using MatMap = std::function<Mat(const Mat&)>;

/// Entrywise x -> x^{p^k}; k is taken modulo the degree of the matrix field.
MatMap frobenius_map(const MatrixGroup& g, std::int64_t k);
/// g -> J0 g^{-T} J0^{-1}, J0 antidiagonal with entries (-1)^i. Linear groups only.
MatMap graph_map(const MatrixGroup& g);
/// x -> h x h^{-1}.
MatMap conjugation_map(const MatrixGroup& g, const Mat& h);
/// F_p^k gamma^b and its inverse.
MatMap outer_map(const MatrixGroup& g, const OuterAut& sigma);
MatMap outer_map_inverse(const MatrixGroup& g, const OuterAut& sigma);

/// perm[k] = class of map(rep_k). Checks that the map is a bijection of G that
/// sends every member of a class into one class.
std::vector<std::uint32_t> class_map(const MatrixGroup& g, const ClassData& c, const MatMap& map);

/// (f o perm)_k = f_{perm[k]}.
ClassFunction compose(const ClassFunction& f, const std::vector<std::uint32_t>& perm);

/// Row r -> row of chi_r o sigma^{-1}, given the class map of sigma^{-1}.
std::vector<std::size_t> character_permutation(const CharacterTable& t, const std::vector<std::uint32_t>& inverse_map);

/// The element h of the full group used for diagonal automorphisms:
/// diag(alpha, 1, ..., 1) or, for unitary groups, diag(alpha, 1, ..., 1, alpha^{-q}).
Mat diagonal_generator(const MatrixGroup& full);
/// Generator c0 of the centre of the full group (scalar matrix entry), with det(h) = c0.
Elem centre_generator(const MatrixGroup& full);

}  // namespace slnchar::oracle
