// Command-line front end: validate module files, print (co)homology tables,
// cross-check the closed forms against the complex-built values, verify the
// resolution, and generate seeded module files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "leech/leech.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) leech::raise(leech::Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int default_max_degree() {
  if (const char* env = std::getenv("LEECH_MAX_DEGREE_DEFAULT")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring malformed LEECH_MAX_DEGREE_DEFAULT\n";
  }
  return 8;
}

leech::LeechModule load_module(const std::string& path) {
  return leech::module_from_json_text(read_input(path));
}

// Coefficient grammar for --module trivial:<spec>, e.g. "Z", "Z^2", "Z/4",
// "Z^2+Z/2+Z/4", "0".
leech::AbGroup parse_group_spec(const std::string& spec) {
  using leech::Int;
  if (spec == "0") return leech::AbGroup();
  std::size_t rank = 0;
  std::vector<Int> torsion;
  std::istringstream in(spec);
  std::string term;
  while (std::getline(in, term, '+')) {
    if (term == "Z")
      rank += 1;
    else if (term.rfind("Z^", 0) == 0)
      rank += std::stoul(term.substr(2));
    else if (term.rfind("Z/", 0) == 0)
      torsion.push_back(Int(term.substr(2)));
    else
      leech::raise(leech::Errc::parse_error, "bad group term: " + term);
  }
  return leech::AbGroup::mixed(rank, torsion);
}

std::vector<int> parse_point_list(const std::string& spec) {
  std::vector<int> pts;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) pts.push_back(std::stoi(item));
  return pts;
}

int require_valid(const leech::LeechModule& mod) {
  leech::ValidationReport report = mod.validate();
  if (!report.passed()) {
    std::cerr << "module fails validation: " << report.summary() << "\n";
    return kExitValidation;
  }
  return 0;
}

void print_table(const leech::LeechModule& mod, int max_degree, const std::string& format,
                 const std::string& label) {
  leech::GroupTable table = leech::make_table(mod, max_degree, label);
  std::cout << leech::render_table(table, leech::parse_table_format(format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leech (co)homology of finite cyclic monoids, exactly"};
  app.require_subcommand(1);

  std::string file, format = "text", module_spec = "constant-z", side_str = "left", out_path;
  int max_degree = default_max_degree();
  int index = 0, period = 1;
  std::uint64_t seed = 0;
  leech::RandomBounds bounds;

  auto add_table_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree, "highest degree to compute");
    cmd->add_option("--format", format, "text|json|csv|latex");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a module file against the axioms");
  validate->add_option("file", file, "module file, - for stdin")->required();

  CLI::App* coh = app.add_subcommand("cohomology", "cohomology table of a left module file");
  coh->add_option("file", file)->required();
  add_table_flags(coh);

  CLI::App* hom = app.add_subcommand("homology", "homology table of a right module file");
  hom->add_option("file", file)->required();
  add_table_flags(hom);

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "closed form vs complex-built homology, degree by degree");
  oracle->add_option("file", file)->required();
  oracle->add_option("--max-degree", max_degree);

  CLI::App* rescheck = app.add_subcommand("resolution-check", "resolution exactness certificate");
  rescheck->add_option("--index", index)->required();
  rescheck->add_option("--period", period)->required();
  rescheck->add_option("--max-degree", max_degree);

  CLI::App* builtin = app.add_subcommand("builtin", "table for a built-in module, no file");
  builtin->add_option("--module", module_spec, "constant-z | trivial:<group> | free:<points>");
  builtin->add_option("--index", index)->required();
  builtin->add_option("--period", period)->required();
  builtin->add_option("--side", side_str, "left (cohomology) or right (homology)");
  add_table_flags(builtin);

  CLI::App* random = app.add_subcommand("random", "emit a seeded random module file");
  random->add_option("--seed", seed)->required();
  random->add_option("--index", index)->required();
  random->add_option("--period", period)->required();
  random->add_option("--side", side_str)->required();
  random->add_option("--free-points", bounds.max_free_points);
  random->add_option("--max-rank", bounds.max_free_rank);
  random->add_option("--max-torsion-coords", bounds.max_torsion_coords);
  random->add_option("--max-torsion-order", bounds.max_torsion_order);
  random->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) {
      leech::LeechModule mod = load_module(file);
      leech::ValidationReport report = mod.validate();
      std::cout << "validation: " << report.summary() << "\n";
      return report.passed() ? 0 : kExitValidation;
    }

    if (*coh || *hom) {
      leech::LeechModule mod = load_module(file);
      if (int rc = require_valid(mod)) return rc;
      leech::Side want = *coh ? leech::Side::left : leech::Side::right;
      if (mod.side() != want) {
        std::cerr << "module has the wrong side for this command\n";
        return kExitValidation;
      }
      print_table(mod, max_degree, format, "module file " + file);
      return 0;
    }

    if (*oracle) {
      leech::LeechModule mod = load_module(file);
      if (int rc = require_valid(mod)) return rc;
      leech::ValidationReport report = leech::oracle_check(mod, max_degree);
      if (report.passed()) {
        std::cout << "all degrees agree up to " << max_degree << "\n";
        return 0;
      }
      std::cerr << "oracle mismatch: " << report.summary() << "\n";
      return kExitMismatch;
    }

    if (*rescheck) {
      leech::FreeResolution res{leech::CyclicMonoid(index, period)};
      leech::ValidationReport report = res.verify_exactness(max_degree);
      std::cout << "resolution check: " << report.summary() << "\n";
      return report.passed() ? 0 : kExitMismatch;
    }

    if (*builtin) {
      leech::CyclicMonoid monoid(index, period);
      leech::Side side = side_str == "right" ? leech::Side::right : leech::Side::left;
      std::string label;
      leech::LeechModule mod = [&]() -> leech::LeechModule {
        if (module_spec == "constant-z") {
          label = "Z";
          return leech::constant_z(monoid, side);
        }
        if (module_spec.rfind("trivial:", 0) == 0) {
          label = module_spec.substr(8);
          leech::AbGroup a = parse_group_spec(label);
          return leech::from_ordinary(monoid, side, a, leech::AbHom::identity(a));
        }
        if (module_spec.rfind("free:", 0) == 0) {
          if (side == leech::Side::right)
            leech::raise(leech::Errc::wrong_side, "free modules are left modules");
          label = "free on " + module_spec.substr(5);
          return leech::free_module(monoid, parse_point_list(module_spec.substr(5)));
        }
        leech::raise(leech::Errc::parse_error, "unknown --module: " + module_spec);
      }();
      print_table(mod, max_degree, format, label);
      return 0;
    }

    if (*random) {
      leech::Side side = side_str == "right" ? leech::Side::right : leech::Side::left;
      leech::LeechModule mod =
          leech::random_module(leech::CyclicMonoid(index, period), side, seed, bounds);
      std::string text = leech::module_to_json(mod).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kExitUsage;
        }
        out << text;
      }
      return 0;
    }
  } catch (const leech::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case leech::Errc::parse_error:
        return kExitParse;
      case leech::Errc::wrong_side:
      case leech::Errc::action_violates_congruence:
        return kExitValidation;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
