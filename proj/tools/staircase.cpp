#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "staircase/cantor.hpp"
#include "staircase/family.hpp"
#include "staircase/grid.hpp"
#include "staircase/serialize.hpp"
#include "staircase/svg.hpp"
#include "staircase/tietze.hpp"

namespace {

using namespace staircase;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct Options {
  std::string input, out, family_file, ext_file, svg_file, format = "tsv";
  std::string x_text, d_text;
  int depth = -1, level = 1, width = 800, height = 480;
  long grid = -1;
  bool json = false, upto = false, all_pairs = false;
  int eval_depth = -1;
};

int pick_depth(const Options& opt, const Problem& problem, int fallback) {
  if (opt.depth >= 0) return opt.depth;
  if (problem.depth) return *problem.depth;
  return fallback;
}

int run_cantor_eval(const Options& opt) {
  Rational x;
  if (!opt.x_text.empty()) {
    x = Rational::parse(opt.x_text);
  } else if (!opt.input.empty()) {
    Problem p = problem_from_json(load_json_file(opt.input));
    if (!p.x) throw std::invalid_argument("problem file carries no \"x\"");
    x = *p.x;
  } else {
    throw std::invalid_argument("need --x or --input");
  }
  Rational phi = cantor_function(x);
  bool member = in_cantor(x);
  auto endpoint = endpoint_for_value(x);
  if (opt.json) {
    Json j{{"x", x.str()}, {"phi", phi.str()}, {"in_cantor", member}};
    if (endpoint)
      j["endpoint"] =
          Json{{"level", endpoint->level()}, {"prefix", endpoint->prefix()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "x\t" << x << "\nphi\t" << phi << "\nin_cantor\t"
              << (member ? "yes" : "no") << "\n";
    if (endpoint)
      std::cout << "endpoint\tlevel " << endpoint->level() << " prefix \""
                << endpoint->prefix() << "\"\n";
  }
  return kExitOk;
}

int run_cantor_endpoints(const Options& opt) {
  auto list =
      opt.upto ? endpoints_up_to(opt.level) : endpoints_at_level(opt.level);
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& e : list)
      arr.push_back(Json{{"level", e.level()},
                         {"prefix", e.prefix()},
                         {"alpha", e.alpha().str()},
                         {"beta", e.beta().str()},
                         {"plateau", e.plateau().str()}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& e : list)
      std::cout << e.level() << "\t" << e.prefix() << "\t" << e.alpha() << "\t"
                << e.beta() << "\t" << e.plateau().str() << "\n";
  }
  return kExitOk;
}

int run_cantor_gamma(const Options& opt) {
  Rational d = Rational::parse(opt.d_text);
  auto dy = Dyadic::from_rational(d);
  if (!dy)
    throw std::invalid_argument("gamma needs a dyadic rational in [0, 1]");
  Rational g = dyadic_to_cantor(*dy);
  if (opt.json) {
    std::cout << Json{{"d", d.str()}, {"gamma", g.str()}}.dump(2) << "\n";
  } else {
    std::cout << g << "\n";
  }
  return kExitOk;
}

int run_urysohn_build(const Options& opt) {
  Problem p = problem_from_json(load_json_file(opt.input));
  if (p.kind != Problem::Kind::Urysohn)
    throw std::invalid_argument("expected a urysohn problem");
  int depth = pick_depth(opt, p, -1);
  if (depth < 0) throw std::invalid_argument("need --depth");
  Family fam = build_urysohn_family(*p.A, *p.B, depth);
  save_json_file(opt.out, family_to_json(fam));
  std::cout << "built family of depth " << depth << " with "
            << fam.entries().size() << " sets\n";
  return kExitOk;
}

void print_value_tsv(std::ostream& os, const Rational& x,
                     const Family::Value& v) {
  os << x << "\t" << v.g << "\t" << v.F << "\n";
}

int run_urysohn_eval(const Options& opt) {
  Family fam = family_from_json(load_json_file(opt.family_file));
  int depth = opt.eval_depth >= 0 ? opt.eval_depth : fam.depth();
  std::vector<Rational> xs;
  if (!opt.x_text.empty())
    xs.push_back(Rational::parse(opt.x_text));
  else if (opt.grid > 0)
    xs = uniform_grid(opt.grid);
  else
    throw std::invalid_argument("need --x or --grid");
  auto values = evaluate_points(fam, xs, depth);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (size_t i = 0; i < xs.size(); ++i)
      arr.push_back(Json{{"x", xs[i].str()},
                         {"g", values[i].g.str()},
                         {"F", values[i].F.str()}});
    std::cout << arr.dump(2) << "\n";
  } else if (opt.format == "tsv") {
    for (size_t i = 0; i < xs.size(); ++i)
      print_value_tsv(std::cout, xs[i], values[i]);
  } else {
    throw std::invalid_argument("unknown format \"" + opt.format + "\"");
  }
  return kExitOk;
}

int report_family(const VerifyReport& r) {
  auto line = [](const char* name, bool ok) {
    std::cout << name << "\t" << (ok ? "ok" : "FAIL") << "\n";
  };
  line("structure", r.structure);
  line("separates", r.separates);
  line("nesting", r.nesting);
  line("strictness", r.strictness);
  line("preimages", r.preimages);
  line("partition", r.partition);
  for (const auto& s : r.issues) std::cout << "issue\t" << s << "\n";
  return r.ok() ? kExitOk : kExitVerify;
}

int run_urysohn_verify(const Options& opt) {
  Family fam = family_from_json(load_json_file(opt.family_file));
  return report_family(verify_family(fam, opt.all_pairs));
}

int run_urysohn_plot(const Options& opt) {
  Family fam = family_from_json(load_json_file(opt.family_file));
  std::string svg = render_family_svg(fam, opt.width, opt.height);
  std::ofstream out(opt.svg_file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + opt.svg_file);
  out << svg;
  std::cout << "wrote " << opt.svg_file << "\n";
  return kExitOk;
}

int run_tietze_extend(const Options& opt) {
  Problem p = problem_from_json(load_json_file(opt.input));
  if (p.kind != Problem::Kind::Tietze)
    throw std::invalid_argument("expected a tietze problem");
  int depth = pick_depth(opt, p, -1);
  if (depth < 0) throw std::invalid_argument("need --depth");
  Extension ext = extend(*p.E, *p.f, depth);
  save_json_file(opt.out, extension_to_json(ext));
  std::cout << "case\t" << case_name(ext.kind) << "\n";
  std::cout << "depth\t" << depth << "\n";
  return kExitOk;
}

int run_tietze_verify(const Options& opt) {
  Extension ext = extension_from_json(load_json_file(opt.ext_file));
  long grid = opt.grid > 0 ? opt.grid : 1000;
  ExtensionReport r = verify_extension(ext, grid);
  auto line = [](const char* name, bool ok) {
    std::cout << name << "\t" << (ok ? "ok" : "FAIL") << "\n";
  };
  line("shape", r.shape);
  line("collar", r.collar);
  line("family", r.family_ok);
  line("traces", r.traces);
  line("approx", r.approx);
  for (const auto& s : r.issues) std::cout << "issue\t" << s << "\n";
  return r.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact separating staircases and extensions on [0, 1]"};
  app.require_subcommand(1);
  Options opt;
  int (*selected)(const Options&) = nullptr;

  CLI::App* cantor = app.add_subcommand("cantor", "staircase arithmetic");
  cantor->require_subcommand(1);
  CLI::App* c_eval = cantor->add_subcommand("eval", "evaluate the staircase");
  c_eval->add_option("--x", opt.x_text, "point of [0, 1]");
  c_eval->add_option("--input", opt.input, "problem file carrying x");
  c_eval->add_flag("--json", opt.json, "machine-readable output");
  c_eval->callback([&] { selected = run_cantor_eval; });
  CLI::App* c_end =
      cantor->add_subcommand("endpoints", "removed-interval endpoints");
  c_end->add_option("--level", opt.level, "level n >= 1")->required();
  c_end->add_flag("--upto", opt.upto, "all levels up to n");
  c_end->add_flag("--json", opt.json, "machine-readable output");
  c_end->callback([&] { selected = run_cantor_endpoints; });
  CLI::App* c_gamma =
      cantor->add_subcommand("gamma", "dyadic-to-staircase substitution");
  c_gamma->add_option("--d", opt.d_text, "dyadic rational in [0, 1]")
      ->required();
  c_gamma->add_flag("--json", opt.json, "machine-readable output");
  c_gamma->callback([&] { selected = run_cantor_gamma; });

  CLI::App* ury =
      app.add_subcommand("urysohn", "separating families and functions");
  ury->require_subcommand(1);
  CLI::App* u_build = ury->add_subcommand("build", "build a nested family");
  u_build->add_option("--input", opt.input, "problem file")->required();
  u_build->add_option("--depth", opt.depth, "lattice depth");
  u_build->add_option("--out", opt.out, "family file to write")->required();
  u_build->callback([&] { selected = run_urysohn_build; });
  CLI::App* u_eval = ury->add_subcommand("eval", "evaluate the step function");
  u_eval->add_option("--family", opt.family_file, "family file")->required();
  u_eval->add_option("--x", opt.x_text, "single point");
  u_eval->add_option("--grid", opt.grid, "evaluate on {i/N}");
  u_eval->add_option("--depth", opt.eval_depth, "truncate to this depth");
  u_eval->add_option("--format", opt.format, "tsv or json");
  u_eval->callback([&] { selected = run_urysohn_eval; });
  CLI::App* u_verify = ury->add_subcommand("verify", "check all claims");
  u_verify->add_option("--family", opt.family_file, "family file")->required();
  u_verify->add_flag("--all-pairs", opt.all_pairs,
                     "quadratic nesting check instead of the chain");
  u_verify->callback([&] { selected = run_urysohn_verify; });
  CLI::App* u_plot = ury->add_subcommand("plot", "render the staircase");
  u_plot->add_option("--family", opt.family_file, "family file")->required();
  u_plot->add_option("--svg", opt.svg_file, "output file")->required();
  u_plot->add_option("--width", opt.width, "picture width");
  u_plot->add_option("--height", opt.height, "picture height");
  u_plot->callback([&] { selected = run_urysohn_plot; });

  CLI::App* tietze = app.add_subcommand("tietze", "boundary-data extensions");
  tietze->require_subcommand(1);
  CLI::App* t_ext = tietze->add_subcommand("extend", "extend boundary data");
  t_ext->add_option("--input", opt.input, "problem file")->required();
  t_ext->add_option("--depth", opt.depth, "lattice depth");
  t_ext->add_option("--out", opt.out, "extension file to write")->required();
  t_ext->callback([&] { selected = run_tietze_extend; });
  CLI::App* t_verify = tietze->add_subcommand("verify", "check an extension");
  t_verify->add_option("--ext", opt.ext_file, "extension file")->required();
  t_verify->add_option("--grid", opt.grid, "boundary grid cells");
  t_verify->callback([&] { selected = run_tietze_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return selected ? selected(opt) : kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
