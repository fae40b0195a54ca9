// JSON round trips for every serialized type, plus the error contract:
// malformed documents must raise std::invalid_argument with a "json: "
// prefix so the command line tool can report them uniformly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "staircase/serialize.hpp"

using namespace staircase;

namespace {

Rational q(const std::string& s) { return Rational::parse(s); }

Region rg(const std::string& s) { return parse_region(s); }

PLFunction tent() {
  PLFunction::Piece piece;
  piece.points = {{q("0"), q("0")}, {q("1/2"), q("1")}, {q("1"), q("0")}};
  return PLFunction(rg("[0,1]"), {piece});
}

bool json_error_contains(const std::invalid_argument& e,
                         const std::string& needle) {
  std::string what = e.what();
  return what.rfind("json: ", 0) == 0 &&
         what.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rationals travel as strings and accept bare integers") {
  CHECK(rational_to_json(q("3/4")) == Json("3/4"));
  CHECK(rational_to_json(q("-2")) == Json("-2"));
  CHECK(rational_from_json(Json("22/7")) == q("22/7"));
  CHECK(rational_from_json(Json(5)) == q("5"));
  CHECK(rational_from_json(Json(-3)) == q("-3"));

  CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json::array()), std::invalid_argument);
  try {
    rational_from_json(Json(true));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "rational"));
  }
}

TEST_CASE("regions round trip through their text form") {
  const char* cases[] = {"empty", "[0,1]", "[0,1/10] u (1/2,1]",
                         "[1/3,1/3] u (5/12,7/12) u [2/3,1)"};
  for (const char* text : cases) {
    Region r = rg(text);
    Json j = region_to_json(r);
    CHECK(j.is_string());
    CHECK(region_from_json(j) == r);
  }
}

TEST_CASE("regions accept the array-of-intervals form") {
  Json j = Json::array(
      {Json{{"lo", "0"}, {"hi", "1/4"}, {"hi_closed", false}},
       Json{{"lo", "1/2"}, {"hi", "3/4"}},
       Json{{"lo", 1}, {"hi", 1}}});
  Region r = region_from_json(j);
  CHECK(r == rg("[0,1/4) u [1/2,3/4] u [1,1]"));

  // Omitted flags default to closed endpoints.
  Json closed = Json::array({Json{{"lo", "1/3"}, {"hi", "2/3"}}});
  CHECK(region_from_json(closed) == rg("[1/3,2/3]"));

  try {
    region_from_json(Json::array({Json("not an object")}));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "objects"));
  }
  try {
    region_from_json(Json::array({Json{{"lo", "0"}}}));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "missing field \"hi\""));
  }
  try {
    region_from_json(Json(7));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "region"));
  }
}

TEST_CASE("piecewise-linear functions round trip") {
  PLFunction f = tent();
  Json j = pl_to_json(f);
  CHECK(j["domain"] == Json("[0,1]"));
  CHECK(j["pieces"].size() == 1);
  CHECK(j["pieces"][0].size() == 3);
  CHECK(pl_from_json(j) == f);

  // A two-component domain with a singleton piece.
  PLFunction::Piece left, point;
  left.points = {{q("0"), q("1/4")}, {q("1/8"), q("3/4")}};
  point.points = {{q("1/2"), q("1")}};
  PLFunction g(rg("[0,1/8] u [1/2,1/2]"), {left, point});
  CHECK(pl_from_json(pl_to_json(g)) == g);
}

TEST_CASE("malformed piecewise-linear documents are rejected") {
  try {
    pl_from_json(Json("nope"));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "piecewise-linear"));
  }
  try {
    pl_from_json(Json{{"domain", "[0,1]"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "missing field \"pieces\""));
  }
  try {
    pl_from_json(Json{{"domain", "[0,1]"}, {"pieces", "x"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "\"pieces\" must be an array"));
  }
  try {
    pl_from_json(Json{{"domain", "[0,1]"},
                      {"pieces", Json::array({Json::array(
                                     {Json::array({"0", "0", "0"})})})}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "[x, y] pairs"));
  }
}

TEST_CASE("families round trip with their endpoint indices") {
  Family fam = build_urysohn_family(rg("[0,1/10]"), rg("[9/10,1]"), 2);
  Json j = family_to_json(fam);
  CHECK(j["depth"] == 2);
  CHECK(j["sets"].size() == 4);
  // Interior entries carry the endpoint index; the top entry does not.
  CHECK(j["sets"][0].contains("level"));
  CHECK(j["sets"][0].contains("prefix"));
  CHECK(!j["sets"][3].contains("level"));
  CHECK(j["sets"][3]["value"] == Json("1"));

  Family back = family_from_json(j);
  CHECK(back.depth() == fam.depth());
  CHECK(back.A() == fam.A());
  CHECK(back.B() == fam.B());
  REQUIRE(back.entries().size() == fam.entries().size());
  for (size_t i = 0; i < fam.entries().size(); ++i) {
    CHECK(back.entries()[i].value == fam.entries()[i].value);
    CHECK(back.entries()[i].set == fam.entries()[i].set);
    CHECK(back.entries()[i].index.has_value() ==
          fam.entries()[i].index.has_value());
    if (back.entries()[i].index)
      CHECK(*back.entries()[i].index == *fam.entries()[i].index);
  }
  CHECK(verify_family(back).ok());
}

TEST_CASE("family documents with bad parameters are rejected") {
  Family fam = build_urysohn_family(rg("[0,1/10]"), rg("[9/10,1]"), 1);
  Json j = family_to_json(fam);

  Json no_sets = j;
  no_sets.erase("sets");
  try {
    family_from_json(no_sets);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "missing field \"sets\""));
  }

  Json bad_depth = j;
  bad_depth["depth"] = "two";
  try {
    family_from_json(bad_depth);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "\"depth\" must be an integer"));
  }

  Json non_dyadic = j;
  non_dyadic["sets"][0]["value"] = "1/3";
  try {
    family_from_json(non_dyadic);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "1/3 is not dyadic"));
  }
}

TEST_CASE("extensions round trip for every construction route") {
  // Constant-0 route: empty boundary set.
  Extension empty = extend(rg("empty"), PLFunction(), 3);
  Json je = extension_to_json(empty);
  CHECK(je["case"] == Json("exact"));
  CHECK(je.contains("exact"));
  CHECK(!je.contains("family"));
  Extension empty_back = extension_from_json(je);
  CHECK(empty_back.kind == Extension::Case::Exact);
  CHECK(*empty_back.exact == *empty.exact);

  // Copy route: the boundary set is all of [0, 1].
  Extension whole = extend(rg("[0,1]"), tent(), 2);
  Json jw = extension_to_json(whole);
  CHECK(jw["case"] == Json("exact"));
  Extension whole_back = extension_from_json(jw);
  CHECK(*whole_back.exact == tent());

  // Direct route: boundary data on a proper subset fills [0, 1].
  PLFunction::Piece onto;
  onto.points = {{q("0"), q("0")}, {q("1/4"), q("1")}, {q("1/2"), q("0")}};
  PLFunction surj(rg("[0,1/2]"), {onto});
  Extension direct = extend(rg("[0,1/2]"), surj, 2);
  Json jd = extension_to_json(direct);
  CHECK(jd["case"] == Json("direct"));
  REQUIRE(jd.contains("family"));
  CHECK(jd.contains("fibers"));
  CHECK(!jd.contains("glued"));
  Extension direct_back = extension_from_json(jd);
  CHECK(direct_back.kind == Extension::Case::Direct);
  REQUIRE(direct_back.family);
  CHECK(direct_back.family->entries().size() ==
        direct.family->entries().size());
  CHECK(verify_extension(direct_back, 16).ok());

  // Collar route: constant boundary data on a proper subset.
  PLFunction::Piece flat;
  flat.points = {{q("1/4"), q("1/2")}, {q("1/2"), q("1/2")}};
  PLFunction half(rg("[1/4,1/2]"), {flat});
  Extension collar = extend(rg("[1/4,1/2]"), half, 2);
  Json jc = extension_to_json(collar);
  CHECK(jc["case"] == Json("collar"));
  REQUIRE(jc.contains("glued"));
  CHECK(jc.contains("V1"));
  CHECK(jc.contains("V2"));
  CHECK(jc.contains("D"));
  Extension collar_back = extension_from_json(jc);
  CHECK(collar_back.kind == Extension::Case::Collar);
  CHECK(*collar_back.D == *collar.D);
  CHECK(*collar_back.V1 == *collar.V1);
  CHECK(*collar_back.V2 == *collar.V2);
  CHECK(*collar_back.glued == *collar.glued);
  CHECK(verify_extension(collar_back, 16).ok());
}

TEST_CASE("extension documents with inconsistent payloads are rejected") {
  PLFunction::Piece onto;
  onto.points = {{q("0"), q("0")}, {q("1/4"), q("1")}, {q("1/2"), q("0")}};
  PLFunction surj(rg("[0,1/2]"), {onto});
  Extension direct = extend(rg("[0,1/2]"), surj, 1);
  Json j = extension_to_json(direct);

  Json unknown = j;
  unknown["case"] = "sideways";
  try {
    extension_from_json(unknown);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "unknown case \"sideways\""));
  }

  Json no_family = j;
  no_family.erase("family");
  try {
    extension_from_json(no_family);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "family payload missing"));
  }

  Extension empty = extend(rg("empty"), PLFunction(), 1);
  Json no_exact = extension_to_json(empty);
  no_exact.erase("exact");
  try {
    extension_from_json(no_exact);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "exact extension payload missing"));
  }
}

TEST_CASE("problem statements parse for every tool mode") {
  Problem c = problem_from_json(
      Json{{"kind", "cantor"}, {"x", "1/3"}, {"level", 4}, {"d", "3/4"}});
  CHECK(c.kind == Problem::Kind::Cantor);
  CHECK(*c.x == q("1/3"));
  CHECK(*c.level == 4);
  CHECK(*c.d == q("3/4"));
  CHECK(!c.depth);

  Problem u = problem_from_json(Json{{"kind", "urysohn"},
                                     {"A", "[0,1/10]"},
                                     {"B", "[9/10,1]"},
                                     {"depth", 3}});
  CHECK(u.kind == Problem::Kind::Urysohn);
  CHECK(*u.A == rg("[0,1/10]"));
  CHECK(*u.B == rg("[9/10,1]"));
  CHECK(*u.depth == 3);

  Problem t = problem_from_json(
      Json{{"kind", "tietze"}, {"E", "[0,1]"}, {"f", pl_to_json(tent())}});
  CHECK(t.kind == Problem::Kind::Tietze);
  CHECK(*t.E == rg("[0,1]"));
  CHECK(*t.f == tent());

  try {
    problem_from_json(Json{{"kind", "urysohn"}, {"A", "[0,1/10]"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "urysohn problems need \"A\" and \"B\""));
  }
  try {
    problem_from_json(Json{{"kind", "tietze"}, {"E", "[0,1]"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "tietze problems need \"E\" and \"f\""));
  }
  try {
    problem_from_json(Json{{"kind", "mystery"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "unknown problem kind \"mystery\""));
  }
  try {
    problem_from_json(Json{{"A", "[0,1]"}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(json_error_contains(e, "missing field \"kind\""));
  }
}

TEST_CASE("json files save and load through the filesystem helpers") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "staircase_serialize_test.json";
  Family fam = build_urysohn_family(rg("[0,1/4]"), rg("[3/4,1]"), 3);
  save_json_file(path.string(), family_to_json(fam));
  Json loaded = load_json_file(path.string());
  Family back = family_from_json(loaded);
  CHECK(back.entries().size() == fam.entries().size());
  CHECK(verify_family(back).ok());
  fs::remove(path);

  CHECK_THROWS_AS(load_json_file("/nonexistent/nowhere.json"),
                  std::invalid_argument);

  fs::path garbled = fs::temp_directory_path() / "staircase_garbled.json";
  {
    std::FILE* out = std::fopen(garbled.string().c_str(), "w");
    REQUIRE(out != nullptr);
    std::fputs("{not json", out);
    std::fclose(out);
  }
  CHECK_THROWS_AS(load_json_file(garbled.string()), std::invalid_argument);
  fs::remove(garbled);
}
