#pragma once

// Explicit matrix groups GL^eps_n(q) and their determinant-one subgroups.
// The unitary groups preserve the Hermitian form with antidiagonal Gram
// matrix J (ones on the antidiagonal), so upper unitriangular matrices are a
// Sylow p-subgroup.

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "slnchar/oracle/field.hpp"
#include "slnchar/torsion.hpp"

namespace slnchar::oracle {

inline constexpr int kMaxMatrixRank = 4;
inline constexpr std::int64_t kMaxGroupOrder = 200000;

using Mat = std::array<Elem, kMaxMatrixRank * kMaxMatrixRank>;

class MatrixGroup {
 public:
  /// Enumerates GL^eps_n(q), or SL^eps_n(q) when special is set.
  /// Throws ResourceError past kMaxGroupOrder (checked on the full group).
  MatrixGroup(const GroupParams& params, bool special);

  const GroupParams& params() const { return params_; }
  bool special() const { return special_; }
  bool unitary() const { return params_.epsilon == -1; }
  int n() const { return params_.n; }
  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  /// "GL_3(4)", "SU_3(2)" ...
  std::string name() const;

  std::size_t size() const { return elements_.size(); }
  const Mat& element(std::size_t i) const { return elements_[i]; }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  /// Index of a member, or -1.
  std::int64_t find(const Mat& m) const;
  /// Index of a member; throws InvariantViolation otherwise.
  std::size_t index_of(const Mat& m) const;

  Mat identity() const;
  Mat multiply(const Mat& a, const Mat& b) const;
  Mat inverse(const Mat& a) const;
  Elem det(const Mat& a) const;
  /// Entrywise x -> x^q (the conjugation of F_{q^2}; identity for linear groups).
  Mat bar(const Mat& a) const;
  Mat transpose(const Mat& a) const;
  Mat scalar(Elem c) const;
  Mat diagonal(const std::vector<Elem>& entries) const;
  /// Membership test in the ambient group (form and determinant).
  bool contains(const Mat& a) const;

  std::size_t mul(std::size_t i, std::size_t j) const { return index_of(multiply(elements_[i], elements_[j])); }
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  std::int64_t element_order(std::size_t i) const;
  /// Index of the identity.
  std::size_t identity_index() const { return identity_index_; }

  std::uint64_t encode(const Mat& a) const;

  /// Checks closure and associativity on random triples.
  void spot_check(int trials, std::uint64_t seed) const;

 private:
  void enumerate();

  GroupParams params_;
  bool special_;
  std::shared_ptr<const FiniteField> field_;
  std::int64_t q_;  // exponent of the conjugation x -> x^q
  std::vector<Mat> elements_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> inverse_;
  std::size_t identity_index_ = 0;
};

/// Human-readable matrix, rows separated by ';'.
std::string to_string(const Mat& a, int n);

}  // namespace slnchar::oracle
