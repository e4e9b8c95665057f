#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "mouldkit/app/cache.hpp"
#include "mouldkit/app/commands.hpp"
#include "mouldkit/app/io.hpp"
#include "mouldkit/app/pool.hpp"
#include "mouldkit/app/sampling.hpp"
#include "mouldkit/app/suite.hpp"
#include "mouldkit/bridge.hpp"
#include "mouldkit/errors.hpp"
#include "mouldkit/liealg.hpp"
#include "mouldkit/symmetry.hpp"

using namespace testing;
using namespace mouldkit::app;
using mouldkit::io::Json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("mouldkit-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string write(const std::string& name, const Json& j) const {
    const fs::path p = path / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }
};

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("JSON round trips") {
  Rng rng(503);
  CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::rational_from_json(Json("5/10")) == Rational(1, 2));
  for (int it = 0; it < 10; ++it) {
    Mould m = random_mould(3, 3, rng);
    CHECK(io::mould_from_json(io::to_json(m)) == m);
    NCPoly p = random_lie(1 + it % 5, rng);
    CHECK(io::ncpoly_from_json(io::to_json(p)) == p);
    MultiPoly q = m.component(2);
    CHECK(io::multipoly_from_json(io::to_json(q), 2) == q);
  }
  const auto b = dmr_basis(5);
  auto b2 = io::basis_from_json(io::to_json(b));
  CHECK(b2.basis == b.basis);
  CHECK(b2.weight == 5);
  CHECK(b2.labels == b.labels);

  NCPoly y3 = nc({{"y1 y3", 2}}, Alphabet::y_indexed(3));
  CHECK(io::ncpoly_from_json(io::to_json(y3)) == y3);
  // bare term lists are read over x, y
  CHECK(io::ncpoly_from_json(Json::parse(R"([{"coeff": "1", "word": "xy"}])")) == nc({{"xy", 1}}));
  CHECK(io::to_json(Mould::unit()).dump() == io::to_json(Mould::unit()).dump());
}

TEST_CASE("JSON parse errors carry a location") {
  auto msg = [](auto fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg([] { io::parse("{\"a\": ", "doc"); }).find("doc:byte") != std::string::npos);
  CHECK(msg([] { io::rational_from_json(Json(1.5), "/x"); }).find("/x") != std::string::npos);
  CHECK(msg([] { io::mould_from_json(Json::parse(R"({"2": [{"coeff": "1", "exponents": [1]}]})")); })
            .find("/2/0") != std::string::npos);
  CHECK(msg([] { io::ncpoly_from_json(Json::parse(R"([{"coeff": "1", "word": "xz"}])")); })
            .find("/0/word") != std::string::npos);
  CHECK_THROWS_AS(io::mould_from_json(Json::parse(R"({"a": []})")), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("subjects") {
  Json j = Json::parse(R"({"mould": {"2": [{"coeff": "1", "exponents": [1, 0]}]}, "apply": ["swap"]})");
  Subject s = subject_from_json(j);
  CHECK_FALSE(s.poly.has_value());
  CHECK(s.mould == swap(single(2, var(2, 0))));
  Subject p = subject_from_json(Json::parse(R"({"ncpoly": [{"coeff": "1", "word": "yx"}]})"));
  REQUIRE(p.poly);
  CHECK(p.mould == ma(nc({{"yx", 1}})));
  CHECK_THROWS_AS(subject_from_json(Json::parse(R"({"mould": {}, "apply": ["spin"]})")), ParseError);
  CHECK_THROWS_AS(subject_from_json(Json::parse(R"({"other": 1})")), ParseError);
}

TEST_CASE("report") {
  Report r;
  r.command = "demo";
  r.inputs = {{"weight", 3}};
  r.checks.push_back({"a", Status::Pass, "ok", Json()});
  CHECK(r.passed());
  r.conjectural.push_back({"b", Status::Exploratory, "unknown", Json()});
  CHECK(r.passed());
  r.timings["total"] = 1.5;
  CHECK_FALSE(r.to_json().contains("timings"));
  CHECK(r.to_json(true).contains("timings"));
  CHECK(r.to_json().at("inputs_digest") == io::fnv1a_hex(r.inputs.dump()));
  r.checks.push_back({"c", Status::Fail, "bad", Json{{"value", 1}}});
  CHECK_FALSE(r.passed());
  CHECK(r.to_json().at("status") == "fail");
  CHECK(r.to_text().find("[FAIL] c") != std::string::npos);
}

TEST_CASE("parallel map") {
  auto out = parallel_map(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) CHECK(out[i] == i * i);
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                                 return i;
                               }),
                  std::runtime_error);
}

TEST_CASE("basis cache") {
  TempDir dir;
  BasisCache cache(dir.path);
  const auto path = cache.path_for("dmr", 5);
  REQUIRE(path);
  CHECK_FALSE(fs::exists(*path));
  const auto first = cache.get("dmr", 5);
  CHECK(fs::exists(*path));
  BasisCache again(dir.path);
  CHECK(again.get("dmr", 5).basis == first.basis);
  CHECK(BasisCache::key("dmr", 5) != BasisCache::key("krv", 5));
  CHECK(BasisCache::key("dmr", 5).find(kCodeVersion) != std::string::npos);
  CHECK_THROWS_AS(cache.get("gt", 3), Error);
  BasisCache none(std::nullopt);
  CHECK_FALSE(none.path_for("dmr", 3).has_value());
  CHECK(none.get("krv", 3).dimension() == 1);
  CHECK(resolve_cache_dir("/tmp/x") == fs::path("/tmp/x"));
}

TEST_CASE("verify-senary command") {
  CommandOptions opt;
  opt.threads = 2;
  Report r3 = cmd_verify_senary(3, 3, "dmr-basis", "", opt);
  CHECK(r3.passed());
  CHECK(r3.checks.size() == 3);
  CHECK(r3.data.at("element_count") == 1);

  Report r4 = cmd_verify_senary(4, 3, "dmr-basis", "", opt);
  CHECK(r4.passed());
  CHECK(r4.data.at("element_count") == 0);

  Report r5 = cmd_verify_senary(5, 5, "dmr-basis", "", opt);
  CHECK(r5.passed());
  CHECK(r5.conjectural.size() == 2);

  TempDir dir;
  const auto file = dir.write("m.json", Json::parse(R"({"mould": {"2": [{"coeff": "1", "exponents": [1, 0]}]}})"));
  Report bad = cmd_verify_senary(3, 3, "file", file, opt);
  CHECK_FALSE(bad.passed());
  const Check* c = find(bad, "element-0-r2");
  REQUIRE(c);
  CHECK(c->status == Status::Fail);
  CHECK(c->witness.contains("defect"));

  CHECK_THROWS_AS(cmd_verify_senary(3, 3, "file", "", opt), ParseError);
  CHECK_THROWS_AS(cmd_verify_senary(3, 0, "dmr-basis", "", opt), ParseError);
  CHECK_THROWS_AS(cmd_verify_senary(1, 3, "dmr-basis", "", opt), WeightBoundError);

  // deterministic output
  CHECK(cmd_verify_senary(5, 4, "dmr-basis", "", opt).to_json().dump() ==
        cmd_verify_senary(5, 4, "dmr-basis", "", CommandOptions{}).to_json().dump());
}

TEST_CASE("basis command") {
  CommandOptions opt;
  Report k2 = cmd_basis("krv", 2, opt);
  CHECK(k2.passed());
  CHECK(k2.data.at("basis").at("basis").empty());
  Report d3 = cmd_basis("dmr", 3, opt);
  CHECK(d3.passed());
  CHECK(d3.data.at("elements").size() == 1);
  CHECK_THROWS_AS(cmd_basis("dmr", 1, opt), WeightBoundError);
}

TEST_CASE("check command") {
  TempDir dir;
  CommandOptions opt;
  const NCPoly x = NCPoly::x(), y = NCPoly::y();
  const NCPoly adx2 = lie_bracket(x, lie_bracket(x, y));

  auto run = [&](const std::string& prop, const Json& doc) {
    return cmd_check(prop, dir.write(prop + ".json", doc), opt);
  };

  CHECK(run("alternal", Json{{"ncpoly", io::to_json(adx2)}}).passed());
  CHECK_FALSE(run("alternal", Json{{"ncpoly", io::to_json(nc({{"yy", 1}, {"xy", 1}}))}}).passed());

  const auto k3 = krv_basis(3);
  const NCPoly F3 = lie_element(k3, k3.basis[0]);
  const Mould img = ma(F_to_ftilde(F3));
  CHECK(run("pusnu", Json{{"mould", io::to_json(swap(img))}}).passed() == is_pus_neutral(swap(img)));
  CHECK_FALSE(run("pusnu", Json{{"mould", io::to_json(single(2, var(2, 0)))}}).passed());

  Report kv1 = run("kv1", Json{{"ncpoly", io::to_json(lie_bracket(x, y))}});
  CHECK(kv1.passed() == solve_G(lie_bracket(x, y), 2).has_value());
  CHECK(run("kv1", Json{{"ncpoly", io::to_json(F3)}}).passed());
  CHECK(run("kv2", Json{{"ncpoly", io::to_json(F3)}}).passed());
  CHECK(run("krv", Json{{"ncpoly", io::to_json(F3)}}).passed());
  CHECK_FALSE(run("kv1", Json{{"ncpoly", io::to_json(nc({{"xy", 1}}))}}).passed());

  const auto d3 = dmr_basis(3);
  const NCPoly f3 = lie_element(d3, d3.basis[0]);
  CHECK(run("dmr", Json{{"ncpoly", io::to_json(f3)}}).passed());
  Report notdmr = run("dmr", Json{{"ncpoly", io::to_json(lie_bracket(x, y))}});
  CHECK_FALSE(notdmr.passed());
  CHECK(notdmr.checks.at(0).witness.contains("c_xy"));

  CHECK(run("senary", Json{{"ncpoly", io::to_json(f3)}}).passed());
  CHECK(run("alternil", Json{{"ncpoly", io::to_json(f3)}, {"apply", {"swap"}}}).passed());
  CHECK_THROWS_AS(run("kv1", Json{{"mould", io::to_json(img)}}), ParseError);
  CHECK_THROWS_AS(run("frobnicate", Json{{"mould", io::to_json(img)}}), ParseError);
}

TEST_CASE("suite entry points") {
  CommandOptions opt;
  Report two = cmd_paper_suite(2, opt);
  REQUIRE(two.checks.size() == 1);
  CHECK(two.checks[0].name == "krv2-vanishes");
  CHECK(two.passed());
  CHECK_THROWS_AS(cmd_paper_suite(11, opt), WeightBoundError);
  CHECK_THROWS_AS(cmd_paper_suite(1, opt), WeightBoundError);
  CHECK(suite_checks().size() == 11);
}
