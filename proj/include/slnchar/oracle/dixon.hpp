#pragma once

// Dixon-Schur: simultaneous eigenvectors of the class-algebra matrices over
// F_l, turned into exact cyclotomic characters.

#include <cstdint>
#include <memory>
#include <vector>

#include "slnchar/oracle/classes.hpp"
#include "slnchar/oracle/cyclotomic.hpp"

namespace slnchar::oracle {

using ClassFunction = std::vector<Cyc>;

struct CharacterTable {
  std::shared_ptr<const CyclotomicField> field;
  std::vector<ClassFunction> rows;  // trivial first, then by (degree, values)
  std::vector<std::int64_t> degrees;
  std::int64_t prime = 0;  // the l used for the eigenvector computation

  std::size_t count() const { return rows.size(); }
  /// Index of an equal row, or -1.
  std::int64_t find(const ClassFunction& f) const;
};

/// c[j][k][i] = #{x in C_j : x^{-1} g_i in C_k}, flattened as ((j * K) + k) * K + i.
std::vector<std::int64_t> class_constants(const MatrixGroup& g, const ClassData& c, int threads);

/// Least prime l = 1 mod N with l > bound.
std::int64_t dixon_prime(std::int64_t N, std::int64_t bound);

CharacterTable character_table(const MatrixGroup& g, const ClassData& c, int threads);

/// <f, h> = (1/|G|) sum |C_k| f_k conj(h_k); throws unless the value is an integer.
std::int64_t inner_product(const CyclotomicField& field, const ClassData& c, const ClassFunction& f,
                           const ClassFunction& h);

/// Row orthogonality <chi_i, chi_j> = delta_ij, exact.
bool rows_orthonormal(const CharacterTable& t, const ClassData& c);

}  // namespace slnchar::oracle
