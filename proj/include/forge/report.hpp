#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "forge/common.hpp"

namespace forge {

/// Shortest round-trip decimal rendering; the one float formatter every
/// report field goes through, so identical runs give identical bytes.
std::string format_double(double v);

struct ReportRow {
  u64 x = 0;
  u64 count = 0;
  bool predicted_available = false;
  double predicted = 0.0;
  double ratio = 0.0;
};

/// Machine-readable record of one experiment: id, canonical parameter line,
/// per-x rows, and an environment stamp. Rows are sorted by x and derive
/// deterministically from the parameter line; the stamp (timestamp, wall
/// time) is the only non-reproducible part and is excluded from
/// canonical_bytes().
struct ExperimentReport {
  std::string experiment_id;
  std::string version = kVersion;
  std::string parameters;
  std::vector<ReportRow> rows;
  std::string timestamp;  // ISO 8601 UTC
  double wall_seconds = 0.0;

  std::string to_json() const;
  std::string to_csv() const;
  /// id/version/parameters/rows only -- byte-for-byte reproducible.
  std::string canonical_bytes() const;

  static ExperimentReport from_json(const std::string& bytes);
};

std::string iso8601_utc_now();

/// Content-addressed report store, keyed by (experiment id, canonical
/// parameter encoding). The version participates in the key, so a version
/// change can never silently serve stale results. Layout:
/// <root>/<experiment-id>/<param-hash>.json
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root);

  /// <out>/cache, unless TERNARY_FORGE_CACHE overrides the root.
  static ResultCache resolve(const std::filesystem::path& out_dir);

  std::optional<std::string> load(const std::string& experiment_id,
                                  const std::string& canonical_params) const;
  void store(const std::string& experiment_id, const std::string& canonical_params,
             const std::string& json_bytes) const;

  std::vector<std::string> list() const;  // relative entry paths, sorted
  u64 clear() const;                      // removed entry count

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path entry_path(const std::string& experiment_id,
                                   const std::string& canonical_params) const;

  /// FNV-1a 64 over version + id + params, hex.
  static std::string param_hash(const std::string& experiment_id,
                                const std::string& canonical_params);

 private:
  std::filesystem::path root_;
};

}  // namespace forge
