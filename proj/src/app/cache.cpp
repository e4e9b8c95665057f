#include "mouldkit/app/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "mouldkit/app/io.hpp"
#include "mouldkit/errors.hpp"

namespace mouldkit::app {

namespace fs = std::filesystem;

BasisCache::BasisCache(std::optional<fs::path> dir, int max_weight) : dir_(std::move(dir)), solver_(max_weight) {}

std::string BasisCache::key(const std::string& algebra, int weight) {
  return std::string("algebra=") + algebra + ";weight=" + std::to_string(weight) + ";version=" + kCodeVersion;
}

std::optional<fs::path> BasisCache::path_for(const std::string& algebra, int weight) const {
  if (!dir_) return std::nullopt;
  return *dir_ / (io::fnv1a_hex(key(algebra, weight)) + ".json");
}

SubspaceBasis BasisCache::get(const std::string& algebra, int weight) {
  if (algebra != "dmr" && algebra != "krv") throw Error("unknown algebra \"" + algebra + "\" (expected dmr or krv)");
  auto compute = [&] { return algebra == "dmr" ? solver_.dmr(weight) : solver_.krv(weight); };
  const auto path = path_for(algebra, weight);
  if (!path) return compute();

  if (fs::exists(*path)) {
    try {
      io::Json j = io::read_file(path->string());
      if (j.at("key") == key(algebra, weight)) return io::basis_from_json(j.at("basis"));
    } catch (const std::exception&) {
      // unreadable or foreign entry: recompute and replace it
    }
  }
  SubspaceBasis b = compute();
  fs::create_directories(*dir_);
  io::Json j{{"key", key(algebra, weight)}, {"basis", io::to_json(b)}};
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  fs::path tmp = *path;
  tmp += ".tmp." + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, *path, ec);
  if (ec) fs::remove(tmp, ec);
  return b;
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("MOULDKIT_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace mouldkit::app
