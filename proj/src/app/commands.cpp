#include "mouldkit/app/commands.hpp"

#include <memory>
#include <mutex>

#include "mouldkit/app/cache.hpp"
#include "mouldkit/app/pool.hpp"
#include "mouldkit/app/suite.hpp"
#include "mouldkit/bridge.hpp"
#include "mouldkit/errors.hpp"
#include "mouldkit/liealg.hpp"
#include "mouldkit/symmetry.hpp"

namespace mouldkit::app {

using io::Json;
using mouldkit::to_string;

namespace {

Mould apply_op(const std::string& op, const Mould& m, const std::string& where) {
  if (op == "swap") return swap(m);
  if (op == "unswap") return unswap(m);
  if (op == "pus") return pus(m);
  if (op == "push") return push(m);
  if (op == "mantar") return mantar(m);
  if (op == "teru") return teru(m);
  if (op == "neg") return neg(m);
  if (op == "translate") return translate_t(m);
  if (op == "u") return u_map(m);
  throw ParseError("unknown mould operator \"" + op + "\"", where);
}

int poly_weight(const NCPoly& p) {
  if (p.is_zero()) throw NotHomogeneous("the zero polynomial has no weight; pass \"weight\" explicitly");
  auto w = p.weight();
  if (!w) throw NotHomogeneous("expected a homogeneous polynomial");
  return *w;
}

const NCPoly& need_poly(const Subject& s, const std::string& property) {
  if (!s.poly) throw ParseError("property " + property + " needs an \"ncpoly\" input", "");
  return *s.poly;
}

Check pass_fail(std::string name, bool ok, std::string detail, Json witness = Json()) {
  return Check{std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(witness)};
}

}  // namespace

Subject subject_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object with \"ncpoly\" or \"mould\"", where);
  Subject s;
  if (j.contains("ncpoly")) {
    s.poly = io::ncpoly_from_json(j.at("ncpoly"), where + "/ncpoly");
    if (!(s.poly->alphabet() == Alphabet::xy())) throw ParseError("moulds come from polynomials in x, y", where + "/ncpoly");
    s.mould = ma(*s.poly);
  } else if (j.contains("mould")) {
    s.mould = io::mould_from_json(j.at("mould"), where + "/mould");
  } else {
    throw ParseError("expected \"ncpoly\" or \"mould\"", where);
  }
  if (j.contains("apply")) {
    const Json& ops = j.at("apply");
    if (!ops.is_array()) throw ParseError("\"apply\" must be a list of operator names", where + "/apply");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const std::string w = where + "/apply/" + std::to_string(i);
      if (!ops[i].is_string()) throw ParseError("operator names are strings", w);
      s.mould = apply_op(ops[i].get<std::string>(), s.mould, w);
    }
  }
  return s;
}

Report cmd_verify_senary(int weight, int rmax, const std::string& source, const std::string& input,
                         const CommandOptions& opt) {
  if (rmax < 1) throw ParseError("--rmax must be at least 1", "--rmax");
  Report rep;
  rep.command = "verify-senary";
  rep.inputs = {{"weight", weight}, {"rmax", rmax}, {"source", source}};

  std::vector<Mould> moulds;
  std::vector<Json> labels;
  if (source == "dmr-basis") {
    BasisCache cache(opt.cache_dir);
    const SubspaceBasis b = cache.get("dmr", weight);
    for (const auto& v : b.basis) {
      NCPoly f = lie_element(b, v);
      labels.push_back(io::to_json(f));
      moulds.push_back(ma(f));
    }
  } else if (source == "file") {
    if (input.empty()) throw ParseError("--source file needs --input", "--input");
    Json doc = io::read_file(input);
    rep.inputs["document"] = doc;
    std::vector<const Json*> items;
    if (doc.is_object() && doc.contains("elements")) {
      if (!doc.at("elements").is_array()) throw ParseError("\"elements\" must be a list", input + ":/elements");
      for (const auto& e : doc.at("elements")) items.push_back(&e);
    } else {
      items.push_back(&doc);
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      Subject s = subject_from_json(*items[i], input + ":/elements/" + std::to_string(i));
      labels.push_back(*items[i]);
      moulds.push_back(std::move(s.mould));
    }
  } else {
    throw ParseError("unknown source \"" + source + "\" (expected dmr-basis or file)", "--source");
  }

  const std::size_t rs = static_cast<std::size_t>(rmax);
  auto results = parallel_map(moulds.size() * rs, opt.threads, [&](std::size_t k) {
    return senary_defect(moulds[k / rs], k % rs + 1);
  });
  for (std::size_t i = 0; i < moulds.size(); ++i)
    for (std::size_t r = 1; r <= rs; ++r) {
      const MultiPoly& d = results[i * rs + r - 1];
      Check c{"element-" + std::to_string(i) + "-r" + std::to_string(r), Status::Pass,
              d.is_zero() ? "holds" : "does not hold", Json()};
      if (!d.is_zero()) c.witness = {{"element", labels[i]}, {"r", r}, {"defect", io::to_json(d)}};
      if (r <= 3) {
        if (!d.is_zero()) c.status = Status::Fail;
        rep.checks.push_back(std::move(c));
      } else {
        c.status = Status::Exploratory;
        rep.conjectural.push_back(std::move(c));
      }
    }
  rep.data["element_count"] = moulds.size();
  return rep;
}

Report cmd_basis(const std::string& algebra, int weight, const CommandOptions& opt) {
  Report rep;
  rep.command = "basis";
  rep.inputs = {{"algebra", algebra}, {"weight", weight}};
  BasisCache cache(opt.cache_dir);
  const SubspaceBasis b = cache.get(algebra, weight);
  Json elements = Json::array();
  for (const auto& v : b.basis) {
    const NCPoly p = lie_element(b, v);
    const bool ok = algebra == "dmr" ? is_dmr(p, weight) : is_krv(p, weight);
    rep.checks.push_back(pass_fail("element-" + std::to_string(elements.size()) + "-member", ok,
                                   ok ? "re-verified" : "basis vector fails the membership test", ok ? Json() : io::to_json(p)));
    elements.push_back(io::to_json(p));
  }
  rep.data["basis"] = io::to_json(b);
  rep.data["elements"] = elements;
  return rep;
}

Report cmd_check(const std::string& property, const std::string& input, const CommandOptions&) {
  if (input.empty()) throw ParseError("check needs --input", "--input");
  Json doc = io::read_file(input);
  Subject s = subject_from_json(doc, input + ":");
  Report rep;
  rep.command = "check";
  rep.inputs = {{"property", property}, {"document", doc}};
  const Mould& m = s.mould;

  if (property == "alternal") {
    const auto defects = alternal_defects(m);
    Json w = Json::array();
    for (const auto& d : defects) w.push_back(io::to_json(d));
    rep.checks.push_back(pass_fail("alternal", defects.empty(), std::to_string(defects.size()) + " nonzero defects",
                                   defects.empty() ? Json() : w));
  } else if (property == "alternil") {
    const AlternilityCertificate cert = alternil_up_to_constant(m);
    Json w{{"constant", io::to_json(cert.constant)}};
    if (!cert.valid()) {
      Json ds = Json::array();
      for (const auto& d : cert.residual_defects) ds.push_back(io::to_json(d));
      w["residual_defects"] = ds;
    }
    rep.checks.push_back(pass_fail("alternil-up-to-constant", cert.valid(),
                                   cert.valid() ? "certified" : "no constant mould absorbs the defects", w));
  } else if (property == "pusnu") {
    Json w = Json();
    for (std::size_t r = 1; r <= m.depth(); ++r)
      if (MultiPoly d = pus_sum(m, r); !d.is_zero()) {
        w = {{"depth", r}, {"rotation_sum", io::to_json(d)}};
        break;
      }
    rep.checks.push_back(pass_fail("pus-neutral", w.is_null(), w.is_null() ? "all rotation sums vanish" : "rotation sum nonzero", w));
  } else if (property == "senary") {
    for (std::size_t r = 1; r <= m.depth() + 1; ++r) {
      const MultiPoly d = senary_defect(m, r);
      rep.checks.push_back(pass_fail("senary-r" + std::to_string(r), d.is_zero(), d.is_zero() ? "holds" : "does not hold",
                                     d.is_zero() ? Json() : Json{{"r", r}, {"defect", io::to_json(d)}}));
    }
  } else if (property == "kv1" || property == "kv2" || property == "krv") {
    const NCPoly& F = need_poly(s, property);
    const int w = doc.contains("weight") ? doc.at("weight").get<int>() : poly_weight(F);
    if (!F.is_zero() && !is_lie(F)) {
      rep.checks.push_back(pass_fail(property, false, "F is not a Lie polynomial", Json{{"F", io::to_json(F)}}));
      return rep;
    }
    const auto G = solve_G(F, w);
    if (property == "kv1") {
      rep.checks.push_back(pass_fail("kv1", G.has_value(), G ? "G found" : "[x,G] = -[y,F] has no Lie solution",
                                     G ? Json{{"G", io::to_json(*G)}} : Json{{"F", io::to_json(F)}}));
    } else {
      std::optional<Rational> alpha;
      if (G) alpha = kv2_check(F, *G, w);
      Json wit{{"F", io::to_json(F)}};
      if (G) wit["G"] = io::to_json(*G);
      if (alpha) wit["alpha"] = to_string(*alpha);
      rep.checks.push_back(pass_fail(property, alpha.has_value(),
                                     !G ? "KV1 fails" : alpha ? "alpha = " + to_string(*alpha) : "trace condition fails", wit));
    }
  } else if (property == "dmr") {
    const NCPoly& f = need_poly(s, property);
    const int w = doc.contains("weight") ? doc.at("weight").get<int>() : poly_weight(f);
    const bool ok = is_dmr(f, w);
    Json wit;
    if (!ok && is_lie(f)) {
      Json ds = Json::array();
      for (const auto& [k, c] : primitivity_defect(star_regularize(untilde(f), w)))
        ds.push_back({{"left", word_to_string(Alphabet::y_indexed(w), k.first)},
                      {"right", word_to_string(Alphabet::y_indexed(w), k.second)},
                      {"coeff", to_string(c)}});
      wit = {{"c_xy", to_string(untilde(f).coefficient(Word{kX, kY}))}, {"coproduct_defect", ds}};
    } else if (!ok) {
      wit = {{"lie", false}};
    }
    rep.checks.push_back(pass_fail("dmr", ok, ok ? "double shuffle conditions hold" : "not in dmr", wit));
  } else {
    throw ParseError("unknown property \"" + property + "\"", "--property");
  }
  return rep;
}

Report cmd_paper_suite(int max_weight, const CommandOptions& opt) {
  SuiteContext ctx = default_context();
  ctx.threads = opt.threads;
  auto cache = std::make_shared<BasisCache>(opt.cache_dir);
  auto mu = std::make_shared<std::mutex>();
  ctx.basis = [cache, mu](const std::string& algebra, int w) {
    std::lock_guard lock(*mu);
    return cache->get(algebra, w);
  };
  return run_suite(max_weight, ctx);
}

}  // namespace mouldkit::app
