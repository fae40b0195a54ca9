#include "staircase/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace staircase {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("expected a rational as a string like \"3/4\"");
}

Json region_to_json(const Region& r) { return r.str(); }

Region region_from_json(const Json& j) {
  if (j.is_string()) return parse_region(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Interval> ivs;
    for (const auto& item : j) {
      if (!item.is_object()) bad("region array entries must be objects");
      Interval iv;
      iv.lo = rational_from_json(need(item, "lo"));
      iv.hi = rational_from_json(need(item, "hi"));
      iv.lo_closed = item.value("lo_closed", true);
      iv.hi_closed = item.value("hi_closed", true);
      ivs.push_back(std::move(iv));
    }
    return Region(std::move(ivs));
  }
  bad("expected a region as a string or an array of intervals");
}

Json pl_to_json(const PLFunction& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) {
    Json pts = Json::array();
    for (const auto& [x, y] : piece.points)
      pts.push_back(Json::array({rational_to_json(x), rational_to_json(y)}));
    pieces.push_back(std::move(pts));
  }
  return Json{{"domain", region_to_json(f.domain())},
              {"pieces", std::move(pieces)}};
}

PLFunction pl_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a piecewise-linear function object");
  Region domain = region_from_json(need(j, "domain"));
  const Json& jp = need(j, "pieces");
  if (!jp.is_array()) bad("\"pieces\" must be an array");
  std::vector<PLFunction::Piece> pieces;
  for (const auto& jpts : jp) {
    if (!jpts.is_array()) bad("each piece must be an array of [x, y] pairs");
    PLFunction::Piece piece;
    for (const auto& jxy : jpts) {
      if (!jxy.is_array() || jxy.size() != 2)
        bad("breakpoints must be [x, y] pairs");
      piece.points.emplace_back(rational_from_json(jxy[0]),
                                rational_from_json(jxy[1]));
    }
    pieces.push_back(std::move(piece));
  }
  return PLFunction(std::move(domain), std::move(pieces));
}

Json family_to_json(const Family& fam) {
  Json sets = Json::array();
  for (const auto& e : fam.entries()) {
    Json item{{"value", e.value.str()}, {"set", region_to_json(e.set)}};
    if (e.index) {
      item["level"] = e.index->level();
      item["prefix"] = e.index->prefix();
    }
    sets.push_back(std::move(item));
  }
  return Json{{"A", region_to_json(fam.A())},
              {"B", region_to_json(fam.B())},
              {"depth", fam.depth()},
              {"sets", std::move(sets)}};
}

Family family_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a family object");
  Region a = region_from_json(need(j, "A"));
  Region b = region_from_json(need(j, "B"));
  const Json& jd = need(j, "depth");
  if (!jd.is_number_integer()) bad("\"depth\" must be an integer");
  int depth = jd.get<int>();
  const Json& js = need(j, "sets");
  if (!js.is_array()) bad("\"sets\" must be an array");
  std::vector<FamilyEntry> entries;
  for (const auto& item : js) {
    FamilyEntry e;
    Rational value = rational_from_json(need(item, "value"));
    auto dy = Dyadic::from_rational(value);
    if (!dy) bad("set parameter " + value.str() + " is not dyadic");
    e.value = *dy;
    if (item.contains("level")) {
      e.index = EndpointIndex(item["level"].get<int>(),
                              item.value("prefix", std::string()));
    }
    e.set = region_from_json(need(item, "set"));
    entries.push_back(std::move(e));
  }
  return Family(std::move(a), std::move(b), depth, std::move(entries));
}

Json extension_to_json(const Extension& ext) {
  Json j{{"case", case_name(ext.kind)},
         {"depth", ext.depth},
         {"E", region_to_json(ext.E)},
         {"f", pl_to_json(ext.f)}};
  Json notes = Json::array();
  switch (ext.kind) {
    case Extension::Case::Exact:
      notes.push_back(ext.E.is_empty()
                          ? "boundary set is empty; extension is constant 0"
                          : "boundary set is all of [0, 1]; extension copies "
                            "the boundary data");
      break;
    case Extension::Case::Direct:
      notes.push_back(
          "boundary data is onto [0, 1]; family traces it directly");
      break;
    case Extension::Case::Collar:
      notes.push_back(
          "boundary data misses part of [0, 1]; glued with a collar ramp "
          "before tracing");
      break;
  }
  j["notes"] = std::move(notes);
  if (ext.exact) j["exact"] = pl_to_json(*ext.exact);
  if (ext.family) {
    j["family"] = family_to_json(*ext.family);
    Json fibers = Json::array();
    for (const auto& [value, fiber] : ext.family->fibers())
      fibers.push_back(
          Json{{"value", value.str()}, {"set", region_to_json(fiber)}});
    j["fibers"] = std::move(fibers);
  }
  if (ext.V1) j["V1"] = region_to_json(*ext.V1);
  if (ext.V2) j["V2"] = region_to_json(*ext.V2);
  if (ext.D) j["D"] = region_to_json(*ext.D);
  if (ext.glued) j["glued"] = pl_to_json(*ext.glued);
  return j;
}

Extension extension_from_json(const Json& j) {
  if (!j.is_object()) bad("expected an extension object");
  Extension ext;
  std::string kind = need(j, "case").get<std::string>();
  if (kind == "exact")
    ext.kind = Extension::Case::Exact;
  else if (kind == "direct")
    ext.kind = Extension::Case::Direct;
  else if (kind == "collar")
    ext.kind = Extension::Case::Collar;
  else
    bad("unknown case \"" + kind + "\"");
  const Json& jd = need(j, "depth");
  if (!jd.is_number_integer()) bad("\"depth\" must be an integer");
  ext.depth = jd.get<int>();
  ext.E = region_from_json(need(j, "E"));
  ext.f = pl_from_json(need(j, "f"));
  if (j.contains("exact")) ext.exact = pl_from_json(j["exact"]);
  if (j.contains("family")) ext.family = family_from_json(j["family"]);
  if (j.contains("V1")) ext.V1 = region_from_json(j["V1"]);
  if (j.contains("V2")) ext.V2 = region_from_json(j["V2"]);
  if (j.contains("D")) ext.D = region_from_json(j["D"]);
  if (j.contains("glued")) ext.glued = pl_from_json(j["glued"]);
  if (ext.kind == Extension::Case::Exact && !ext.exact)
    bad("exact extension payload missing");
  if (ext.kind != Extension::Case::Exact && !ext.family)
    bad("family payload missing");
  return ext;
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a problem object");
  Problem p;
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "cantor")
    p.kind = Problem::Kind::Cantor;
  else if (kind == "urysohn")
    p.kind = Problem::Kind::Urysohn;
  else if (kind == "tietze")
    p.kind = Problem::Kind::Tietze;
  else
    bad("unknown problem kind \"" + kind + "\"");
  if (j.contains("A")) p.A = region_from_json(j["A"]);
  if (j.contains("B")) p.B = region_from_json(j["B"]);
  if (j.contains("E")) p.E = region_from_json(j["E"]);
  if (j.contains("f")) p.f = pl_from_json(j["f"]);
  if (j.contains("depth")) {
    if (!j["depth"].is_number_integer()) bad("\"depth\" must be an integer");
    p.depth = j["depth"].get<int>();
  }
  if (j.contains("x")) p.x = rational_from_json(j["x"]);
  if (j.contains("level")) {
    if (!j["level"].is_number_integer()) bad("\"level\" must be an integer");
    p.level = j["level"].get<int>();
  }
  if (j.contains("d")) p.d = rational_from_json(j["d"]);
  switch (p.kind) {
    case Problem::Kind::Urysohn:
      if (!p.A || !p.B) bad("urysohn problems need \"A\" and \"B\"");
      break;
    case Problem::Kind::Tietze:
      if (!p.E || !p.f) bad("tietze problems need \"E\" and \"f\"");
      break;
    case Problem::Kind::Cantor:
      break;
  }
  return p;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace staircase
