#include "mouldkit/app/report.hpp"

#include <sstream>

namespace mouldkit::app {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Exploratory: return "exploratory";
  }
  return "?";
}

namespace {

io::Json check_json(const Check& c) {
  io::Json j{{"name", c.name}, {"status", to_string(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

io::Json Report::to_json(bool with_timings) const {
  io::Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["inputs_digest"] = io::fnv1a_hex(inputs.dump());
  j["status"] = passed() ? "pass" : "fail";
  io::Json cs = io::Json::array();
  for (const auto& c : checks) cs.push_back(check_json(c));
  j["checks"] = cs;
  if (!conjectural.empty()) {
    io::Json xs = io::Json::array();
    for (const auto& c : conjectural) xs.push_back(check_json(c));
    j["conjectural"] = xs;
  }
  if (!data.empty()) j["data"] = data;
  if (with_timings) j["timings"] = timings;
  return j;
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream out;
  out << command << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  auto line = [&](const Check& c) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
    out << "  [" << tag << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (c.status == Status::Fail && !c.witness.is_null()) out << "         witness: " << c.witness.dump() << "\n";
  };
  for (const auto& c : checks) line(c);
  if (!conjectural.empty()) {
    out << "  conjectural:\n";
    for (const auto& c : conjectural) line(c);
  }
  if (with_timings)
    for (const auto& [k, v] : timings) out << "  time " << k << ": " << v << " s\n";
  return out.str();
}

}  // namespace mouldkit::app
