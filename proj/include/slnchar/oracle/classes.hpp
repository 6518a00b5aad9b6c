#pragma once

// Conjugacy classes by orbit computation under a generating set, with
// element orders, power maps and inverse classes.

#include <cstdint>
#include <vector>

#include "slnchar/oracle/matrix_group.hpp"

namespace slnchar::oracle {

struct ClassData {
  std::vector<std::uint32_t> class_of;              // element index -> class
  std::vector<std::vector<std::uint32_t>> members;  // sorted element indices
  std::vector<std::uint32_t> reps;                  // minimal code in each class
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> orders;
  /// power_map[k][i] = class of rep_k^i, 0 <= i < orders[k].
  std::vector<std::vector<std::uint32_t>> power_map;
  std::vector<std::uint32_t> inverse_class;
  std::int64_t exponent = 1;

  std::size_t count() const { return reps.size(); }
};

/// A generating set found by closing random elements (fixed seed).
std::vector<std::size_t> find_generators(const MatrixGroup& g, std::uint64_t seed = 1);

/// Classes ordered by (element order, size, minimal code); the identity is first.
ClassData conjugacy_classes(const MatrixGroup& g);

/// Rebuilds members, reps and inverse classes from a cached class map.
ClassData classes_from_map(const MatrixGroup& g, std::vector<std::uint32_t> class_of);

}  // namespace slnchar::oracle
