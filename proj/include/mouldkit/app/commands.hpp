#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mouldkit/app/report.hpp"

namespace mouldkit::app {

struct CommandOptions {
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 1;
};

// A polynomial or mould read from a JSON document:
//   {"ncpoly": ...} or {"mould": ...}, optionally with "apply": [op, ...]
// applied to the mould in order (swap, unswap, pus, push, mantar, teru, neg,
// translate, u). A polynomial subject becomes its mould through ma.
struct Subject {
  std::optional<NCPoly> poly;
  Mould mould;
};
Subject subject_from_json(const io::Json& j, const std::string& where = "");

Report cmd_verify_senary(int weight, int rmax, const std::string& source, const std::string& input,
                         const CommandOptions& opt);
Report cmd_basis(const std::string& algebra, int weight, const CommandOptions& opt);
// property: alternal | alternil | pusnu | senary | kv1 | kv2 | dmr | krv
Report cmd_check(const std::string& property, const std::string& input, const CommandOptions& opt);
Report cmd_paper_suite(int max_weight, const CommandOptions& opt);

}  // namespace mouldkit::app
