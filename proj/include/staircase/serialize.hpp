#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "staircase/family.hpp"
#include "staircase/pl_function.hpp"
#include "staircase/tietze.hpp"

namespace staircase {

using Json = nlohmann::json;

// Rationals travel as strings ("3/4"); integers are accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Regions travel in their text form ("[0,1/10] u (1/2,1]", "empty");
// an array of {lo, hi, lo_closed, hi_closed} objects is accepted too.
Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

// {"domain": region, "pieces": [[["x","y"], ...], ...]}
Json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const Json& j);

// {"A", "B", "depth", "sets": [{"value", "level", "prefix", "set"}, ...]}
// (the top entry has value "1" and no level/prefix)
Json family_to_json(const Family& fam);
Family family_from_json(const Json& j);

// {"case", "depth", "E", "f", then per-route payload and a fiber table}
Json extension_to_json(const Extension& ext);
Extension extension_from_json(const Json& j);

// Problem statements fed to the command line tool.
struct Problem {
  enum class Kind { Cantor, Urysohn, Tietze };
  Kind kind = Kind::Cantor;
  std::optional<Region> A, B;      // urysohn
  std::optional<Region> E;         // tietze
  std::optional<PLFunction> f;     // tietze
  std::optional<int> depth;
  std::optional<Rational> x;       // cantor
  std::optional<int> level;        // cantor
  std::optional<Rational> d;       // cantor
};

Problem problem_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace staircase
