#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mouldkit/liealg.hpp"

namespace mouldkit::app {

// Bumped whenever a solver change could alter cached bases.
inline constexpr const char* kCodeVersion = "mouldkit-1";

// dmr / krv bases backed by content-addressed JSON files. Files are written
// to a temporary name and renamed into place, so concurrent writers never
// expose a partial file. Without a directory this is a plain pass-through.
class BasisCache {
 public:
  explicit BasisCache(std::optional<std::filesystem::path> dir, int max_weight = BasisSolver::kDefaultMaxWeight);

  // algebra is "dmr" or "krv"; throws Error for anything else.
  SubspaceBasis get(const std::string& algebra, int weight);

  static std::string key(const std::string& algebra, int weight);
  std::optional<std::filesystem::path> path_for(const std::string& algebra, int weight) const;

 private:
  std::optional<std::filesystem::path> dir_;
  BasisSolver solver_;
};

// --cache-dir if given, else $MOULDKIT_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

}  // namespace mouldkit::app
