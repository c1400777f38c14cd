// orbit-braid: command-line front end.
//
// Exit codes: 0 success / equal, 1 not-equal, 2 usage, parse or range
// error, 3 decomposition failed, 4 combing search budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orbit_braid.hpp"

namespace ob = orbit_braid;

namespace {

constexpr int kExitNotEqual = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDecompose = 3;
constexpr int kExitBudget = 4;

// "a..b" or a single integer.
bool parse_range(const std::string& s, int& lo, int& hi) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      return used == s.size();
    }
    const std::string a = s.substr(0, dots);
    const std::string b = s.substr(dots + 2);
    lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    hi = std::stoi(b, &used);
    return used == b.size() && lo <= hi;
  } catch (const std::exception&) {
    return false;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ob::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit braid groups: word problem, recognition, combing, diagrams"};
  app.require_subcommand(1);

  int p = 2, n = 2;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--p", p, "order of the cyclic action")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", n, "number of orbit strands")->required()->check(CLI::PositiveNumber);
  };

  auto* eq = app.add_subcommand("eq", "decide equality of two braid words");
  std::string space = "punctured";
  std::string w1, w2;
  eq->add_option("--space", space, "plane or punctured")
      ->check(CLI::IsMember({"plane", "punctured"}));
  add_params(eq);
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();

  auto* endo = app.add_subcommand("endo", "print the action on the free group");
  std::string word;
  add_params(endo);
  endo->add_option("word", word)->required();

  auto* dec = app.add_subcommand("decompose", "write an endomorphism file as a braid word");
  std::string endo_file;
  add_params(dec);
  dec->add_option("file", endo_file, "endomorphism file, '-' for stdin")->required();

  auto* comb = app.add_subcommand("comb", "combed normal form of a pure braid");
  int max_len = ob::kDefaultMaxBasisLength;
  add_params(comb);
  comb->add_option("--max-basis-length", max_len, "search depth per level")
      ->check(CLI::NonNegativeNumber);
  comb->add_option("word", word)->required();

  auto* self = app.add_subcommand("selftest", "property checks over a parameter grid");
  std::string p_range = "2..4", n_range = "2..4";
  int samples = ob::SelftestOptions{}.samples;
  self->add_option("--p", p_range, "range a..b");
  self->add_option("--n", n_range, "range a..b");
  self->add_option("--samples", samples, "random words per grid point")
      ->check(CLI::NonNegativeNumber);

  auto* render = app.add_subcommand("render", "draw a braid word as SVG");
  std::string out_path;
  ob::RenderStyle style;
  add_params(render);
  render->add_option("--out", out_path, "output file (default stdout)");
  render->add_option("--width", style.width)->check(CLI::PositiveNumber);
  render->add_option("--height", style.height)->check(CLI::PositiveNumber);
  render->add_option("word", word)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eq) {
      const ob::GroupParams g(p, n);
      const auto a = ob::parse_braid(w1, g);
      const auto b = ob::parse_braid(w2, g);
      const bool same = space == "plane" ? ob::eq_plane(a, b, g) : ob::eq_punctured(a, b, g);
      std::cout << (same ? "equal" : "not-equal") << '\n';
      return same ? 0 : kExitNotEqual;
    }
    if (*endo) {
      const ob::GroupParams g(p, n);
      std::cout << ob::format_endo(ob::rho_word(ob::parse_braid(word, g), g));
      return 0;
    }
    if (*dec) {
      const ob::GroupParams g(p, n);
      const ob::EndoF e = ob::parse_endo(read_input(endo_file), g);
      try {
        const auto d = ob::decompose(e, g);
        std::cout << ob::format(d.word) << '\n' << "twist: " << d.twist << '\n';
        return 0;
      } catch (const ob::NotRealizable& err) {
        std::cerr << "not realizable: " << err.what() << '\n';
      } catch (const ob::Stuck& err) {
        std::cerr << "stuck: " << err.what() << '\n';
      } catch (const ob::PreconditionViolated& err) {
        std::cerr << "not a braid automorphism: " << err.what() << '\n';
      }
      return kExitDecompose;
    }
    if (*comb) {
      const ob::GroupParams g(p, n);
      const auto w = ob::parse_braid(word, g);
      try {
        std::cout << ob::format(ob::comb(w, g, max_len));
        return 0;
      } catch (const ob::SearchBudgetExceeded& err) {
        std::cerr << "search budget exceeded: " << err.what() << '\n';
        return kExitBudget;
      }
    }
    if (*self) {
      ob::SelftestOptions opt;
      if (!parse_range(p_range, opt.p_min, opt.p_max) ||
          !parse_range(n_range, opt.n_min, opt.n_max) || opt.p_min < 1 || opt.n_min < 1) {
        std::cerr << "ranges must look like 2..4 with positive bounds\n";
        return kExitUsage;
      }
      opt.samples = samples;
      return ob::run_selftest(opt, std::cout) ? 0 : 1;
    }
    if (*render) {
      const ob::GroupParams g(p, n);
      const std::string svg = ob::render(ob::parse_braid(word, g), g, style);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(out_path);
        if (!f || !(f << svg)) {
          std::cerr << "cannot write '" << out_path << "'\n";
          return kExitUsage;
        }
      }
      return 0;
    }
  } catch (const ob::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
