#pragma once

// A built group with its classes and character table, optionally persisted
// as canonical JSON keyed by (n, q, eps, form, subgroup).

#include <memory>
#include <optional>
#include <string>

#include "slnchar/oracle/dixon.hpp"

namespace slnchar::oracle {

struct OracleGroup {
  std::shared_ptr<const MatrixGroup> group;
  ClassData classes;
  CharacterTable table;
  bool from_cache = false;
};

/// Flag value if non-empty, else $SLNCHAR_CACHE, else no cache.
std::optional<std::string> resolve_cache_dir(const std::string& flag);

/// File name inside the cache directory, e.g. "SU_n3_q2_eps-1_antidiagonal.json".
std::string cache_key(const GroupParams& params, bool special);

/// Canonical JSON text (single line, newline-terminated) of classes and table.
std::string serialize(const OracleGroup& g);
/// Inverse of serialize against a freshly enumerated group; throws MalformedInput.
OracleGroup deserialize(const std::string& text, std::shared_ptr<const MatrixGroup> group);

/// Builds (or loads) the group, its classes and its table.
OracleGroup build_oracle_group(const GroupParams& params, bool special, const std::optional<std::string>& cache_dir,
                               int threads);

}  // namespace slnchar::oracle
