#pragma once

#include <map>
#include <string>
#include <vector>

#include "mouldkit/app/io.hpp"

namespace mouldkit::app {

enum class Status { Pass, Fail, Exploratory };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;  // one-line human summary
  io::Json witness;    // concrete data; required for failures
};

struct Report {
  std::string command;
  io::Json inputs = io::Json::object();
  std::vector<Check> checks;
  std::vector<Check> conjectural;  // exploratory results, never gating
  io::Json data = io::Json::object();
  std::map<std::string, double> timings;

  bool passed() const;
  io::Json to_json(bool with_timings = false) const;
  std::string to_text(bool with_timings = false) const;
};

}  // namespace mouldkit::app
