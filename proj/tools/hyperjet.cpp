// hyperjet command-line front end.
//
//   hyperjet dims --n 3 --k 4
//   hyperjet symmetrize tensor.json --out sym.json
//   hyperjet jet field.json --point 0,0 --k 2
//   hyperjet power stress.json field.json --lower 0,0 --upper 1,1 [--subdiv 16]
//   hyperjet flux stress.json field.json --k 2 [--subdiv 16]
//   hyperjet pair covector.json tensor.json
//   hyperjet verify cauchy --n 3 --m 2 --k 2 --seed 0
//
// Exit status is 0 on success; on failure a single line
// "error: <kind>: <message>" goes to stderr.

#include "hyperjet/hyperstress.hpp"
#include "hyperjet/io.hpp"
#include "hyperjet/jet.hpp"
#include "hyperjet/multiindex.hpp"
#include "hyperjet/symtensor.hpp"
#include "hyperjet/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace hyperjet;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
  return out;
}

std::string format_scalar(const Rational& value, bool as_float) {
  if (!as_float) return to_string(value);
  std::ostringstream out;
  out << std::setprecision(17) << to_double(value);
  return out.str();
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump(j);
  } else {
    write_json_file(out_path, j);
  }
}

BoxRegion make_box(int n, const std::string& lower, const std::string& upper, int subdiv) {
  BoxRegion box = BoxRegion::unit(n, subdiv > 0 ? subdiv : 1);
  if (!lower.empty()) box.lower = parse_rationals(lower);
  if (!upper.empty()) box.upper = parse_rationals(upper);
  if (box.lower.size() != static_cast<std::size_t>(n) || box.upper.size() != static_cast<std::size_t>(n)) {
    throw UsageError("box corners must have n = " + std::to_string(n) + " coordinates");
  }
  box.validate();
  return box;
}

int run_dims(int n, int kmax) {
  if (n < 1 || kmax < 0) throw UsageError("dims needs --n >= 1 and --k >= 0");
  std::cout << "l\tsymmetric\tdense\tmultiplicity_sum\tcheck\n";
  bool ok = true;
  for (std::size_t l = 0; l <= static_cast<std::size_t>(kmax); ++l) {
    std::uint64_t sum = 0;
    const auto classes = enumerate_nondecreasing(n, l);
    for (const auto& c : classes) sum += multiplicity(c);
    const bool row_ok = classes.size() == symmetric_dimension(n, l) && sum == dense_dimension(n, l);
    ok = ok && row_ok;
    std::cout << l << '\t' << symmetric_dimension(n, l) << '\t' << dense_dimension(n, l) << '\t' << sum << '\t'
              << (row_ok ? "ok" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

int run_symmetrize(const std::string& in_path, const std::string& out_path) {
  const TensorValue value = tensor_from_json(read_json_file(in_path));
  const auto* dense = std::get_if<DenseTensor>(&value);
  if (!dense) throw UsageError("symmetrize expects a dense tensor file");
  emit(to_json(symmetrize(*dense)), out_path);
  return 0;
}

int run_jet(const std::string& field_path, const std::string& point, int k, const std::string& out_path) {
  if (k < 0) throw UsageError("jet needs --k >= 0");
  const PolyField field = field_from_json(read_json_file(field_path));
  const Point x = parse_rationals(point);
  if (x.size() != static_cast<std::size_t>(field.dim())) throw UsageError("--point must have n coordinates");
  emit(to_json(jet_of(field, x, static_cast<std::size_t>(k))), out_path);
  return 0;
}

int run_power(const std::string& stress_path, const std::string& field_path, const std::string& lower,
              const std::string& upper, int subdiv, bool as_float) {
  const StressValue stress = stress_from_json(read_json_file(stress_path));
  const auto* s = std::get_if<VariationalStressField>(&stress);
  if (!s) throw UsageError("power expects a variational stress file");
  const PolyField field = field_from_json(read_json_file(field_path));
  const BoxRegion box = make_box(field.dim(), lower, upper, subdiv);
  std::cout << format_scalar(total_power(*s, field, box), as_float) << '\n';
  if (subdiv > 0) std::cout << "midpoint " << format_double(total_power_midpoint(*s, field, box)) << '\n';
  return 0;
}

int run_flux(const std::string& stress_path, const std::string& field_path, const std::string& lower,
             const std::string& upper, int k, int subdiv, bool as_float) {
  const StressValue stress = stress_from_json(read_json_file(stress_path));
  const auto* s = std::get_if<TractionStressField>(&stress);
  if (!s) throw UsageError("flux expects a traction stress file");
  if (k >= 0 && static_cast<std::size_t>(k) != s->order()) {
    throw UsageError("--k " + std::to_string(k) + " does not match the stress file order " + std::to_string(s->order()));
  }
  const PolyField field = field_from_json(read_json_file(field_path));
  const BoxRegion box = make_box(field.dim(), lower, upper, subdiv);
  std::cout << format_scalar(boundary_power_flux(*s, field, box), as_float) << '\n';
  if (subdiv > 0) std::cout << "midpoint " << format_double(boundary_power_flux_midpoint(*s, field, box, subdiv)) << '\n';
  return 0;
}

int run_pair(const std::string& co_path, const std::string& contra_path, bool as_float) {
  const TensorValue co = tensor_from_json(read_json_file(co_path));
  const TensorValue contra = tensor_from_json(read_json_file(contra_path));
  const auto as_dense = [](const TensorValue& v) {
    return std::visit(
        [](const auto& t) -> DenseTensor {
          if constexpr (std::is_same_v<std::decay_t<decltype(t)>, DenseTensor>) {
            return t;
          } else {
            return include(t);
          }
        },
        v);
  };
  Rational value;
  if (std::holds_alternative<SymTensor>(co) && std::holds_alternative<SymTensor>(contra)) {
    value = pair(std::get<SymTensor>(co), std::get<SymTensor>(contra));
  } else {
    value = dense_pair(as_dense(co), as_dense(contra));
  }
  std::cout << format_scalar(value, as_float) << '\n';
  return 0;
}

int run_verify(const std::string& suite, const verify::Bounds& bounds) {
  const auto& table = verify::suites();
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& [name, fn] : table) names.push_back(name);
  } else if (table.count(suite)) {
    names.push_back(suite);
  } else {
    std::string known;
    for (const auto& [name, fn] : table) known += " " + name;
    throw UsageError("unknown suite \"" + suite + "\" (known: all" + known + ")");
  }
  bool ok = true;
  for (const auto& name : names) {
    const verify::Report report = table.at(name)(bounds);
    std::cout << (report.passed() ? "PASS " : "FAIL ") << name << " checks=" << report.checks
              << " failures=" << report.failed << '\n';
    for (const auto& f : report.failures) std::cout << "  " << f << '\n';
    ok = ok && report.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric tensors, jets and hyper-stresses with exact arithmetic"};
  app.require_subcommand(1);

  int n = 3;
  int l = 3;
  int m = 2;
  int k = -1;
  std::uint64_t seed = 0;
  int trials = 100;
  int subdiv = 0;
  bool as_float = false;
  std::string out_path;
  std::string in_path;
  std::string second_path;
  std::string point;
  std::string lower;
  std::string upper;
  std::string suite;

  auto* dims = app.add_subcommand("dims", "symmetric and dense dimensions per degree");
  dims->add_option("--n", n, "space dimension")->required();
  dims->add_option("--k", k, "largest degree")->required();

  auto* symmetrize_cmd = app.add_subcommand("symmetrize", "symmetrize a dense tensor file into compressed storage");
  symmetrize_cmd->add_option("input", in_path, "dense tensor file")->required();
  symmetrize_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* jet_cmd = app.add_subcommand("jet", "k-jet of a polynomial field at a point");
  jet_cmd->add_option("field", in_path, "field file")->required();
  jet_cmd->add_option("--point", point, "comma-separated rational coordinates")->required();
  jet_cmd->add_option("--k", k, "jet order")->required();
  jet_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* power_cmd = app.add_subcommand("power", "total power of a variational hyper-stress over a box");
  auto* flux_cmd = app.add_subcommand("flux", "boundary power flux of a traction hyper-stress over a box");
  for (auto* cmd : {power_cmd, flux_cmd}) {
    cmd->add_option("stress", in_path, "stress file")->required();
    cmd->add_option("field", second_path, "field file")->required();
    cmd->add_option("--lower", lower, "lower box corner (default 0,...,0)");
    cmd->add_option("--upper", upper, "upper box corner (default 1,...,1)");
    cmd->add_option("--subdiv", subdiv, "also report a midpoint-rule estimate with this many cells per axis");
    cmd->add_flag("--float", as_float, "print the exact result as a 17-digit float");
  }
  flux_cmd->add_option("--k", k, "traction order (checked against the stress file)");

  auto* pair_cmd = app.add_subcommand("pair", "pair a covariant tensor file with a contravariant one");
  pair_cmd->add_option("covector", in_path, "covariant tensor file")->required();
  pair_cmd->add_option("tensor", second_path, "contravariant tensor file")->required();
  pair_cmd->add_flag("--float", as_float, "print as a 17-digit float");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  verify_cmd->add_option("suite", suite, "suite name or \"all\"")->required();
  verify_cmd->add_option("--n", n, "largest space dimension");
  verify_cmd->add_option("--l", l, "largest degree");
  verify_cmd->add_option("--m", m, "largest fiber dimension");
  verify_cmd->add_option("--k", k, "jet / stress order");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--trials", trials, "random cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*dims) return run_dims(n, k);
    if (*symmetrize_cmd) return run_symmetrize(in_path, out_path);
    if (*jet_cmd) return run_jet(in_path, point, k, out_path);
    if (*power_cmd) return run_power(in_path, second_path, lower, upper, subdiv, as_float);
    if (*flux_cmd) return run_flux(in_path, second_path, lower, upper, k, subdiv, as_float);
    if (*pair_cmd) return run_pair(in_path, second_path, as_float);
    if (*verify_cmd) {
      if (n < 1 || l < 0 || m < 1 || trials < 1) throw UsageError("verify bounds must be positive");
      verify::Bounds bounds{n, static_cast<std::size_t>(l), m, static_cast<std::size_t>(k < 0 ? 2 : k), seed, trials};
      return run_verify(suite, bounds);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: format: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: domain: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
