// Command-line surface for the g-fan library. All payloads are
// machine-readable JSON on stdout (one line, newline-terminated);
// --human switches to short text. Errors go to stderr as JSON.
//
// Exit codes: 0 success, 1 invalid input or failed verification,
// 2 budget exceeded (indeterminate), 3 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gfan/errors.hpp"
#include "gfan/json_io.hpp"
#include "gfan/svg.hpp"

namespace {

using gfan::Json;

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (arg.front() == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw gfan::InvalidInput("cannot open file: " + arg.substr(1));
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
  }
  return arg;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw gfan::InvalidInput(std::string("json parse error: ") + e.what());
  }
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw gfan::InvalidInput("cannot open output file: " + out_path);
  file << payload;
}

void emit_json(const std::string& out_path, const Json& j) {
  write_output(out_path, j.dump() + "\n");
}

// An exchange matrix or an extended one, told apart by shape.
struct MatrixInput {
  std::optional<gfan::ExchangeMatrix> exchange;
  std::optional<gfan::ExtendedMatrix> extended;
};

MatrixInput parse_matrix_any(const Json& j) {
  MatrixInput out;
  const bool extended_object = j.is_object() && j.contains("c");
  const bool extended_rows = j.is_array() && !j.empty() &&
                             j.front().is_array() &&
                             j.size() == 2 * j.front().size();
  if (extended_object || extended_rows)
    out.extended = gfan::extended_from_json(j);
  else
    out.exchange = gfan::matrix_from_json(j);
  return out;
}

std::string human_rows(const gfan::IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
    os << "\n";
  }
  return os.str();
}

std::string vec_text(const gfan::IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::size_t to_direction(long long k, std::size_t n, const char* what) {
  if (k < 1 || k > static_cast<long long>(n))
    throw gfan::InvalidInput(std::string(what) + ": index " + std::to_string(k) +
                             " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

struct Options {
  std::string input;
  std::string out_path;
  bool human = false;
  std::vector<long long> directions;
  std::size_t budget = gfan::kDefaultClassBudget;
  long long depth = -1;
  long radius = 6;
  std::size_t verify_depth = 12;
  long long rank2_b = 0;
  long long rank2_c = 0;
  std::size_t plot_depth = 8;
};

int cmd_mutate(const Options& opt) {
  MatrixInput m = parse_matrix_any(parse_json(read_input(opt.input)));
  if (m.exchange) {
    gfan::ExchangeMatrix cur = *m.exchange;
    for (long long k : opt.directions)
      cur = cur.mutated(to_direction(k, cur.rank(), "mutate"));
    if (opt.human)
      write_output(opt.out_path, human_rows(cur.entries()));
    else
      emit_json(opt.out_path, gfan::matrix_to_json(cur));
  } else {
    gfan::ExtendedMatrix cur = *m.extended;
    for (long long k : opt.directions)
      cur = cur.mutated(to_direction(k, cur.rank(), "mutate"));
    if (opt.human)
      write_output(opt.out_path, human_rows(cur.entries()));
    else
      emit_json(opt.out_path, gfan::extended_to_json(cur));
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  gfan::FiniteTypeVerdict v = gfan::decide_finite_type(
      gfan::matrix_from_json(parse_json(read_input(opt.input))), opt.budget);
  if (!opt.human) {
    emit_json(opt.out_path, gfan::verdict_to_json(v));
    return 0;
  }
  std::ostringstream os;
  if (v.finite()) {
    os << "finite type; mutation class size " << v.class_size << "\n";
  } else {
    os << "infinite type; violation after path [";
    for (std::size_t i = 0; i < v.violation_path.size(); ++i)
      os << (i ? "," : "") << v.violation_path[i] + 1;
    os << "] at pair (" << v.violation_pair.first + 1 << ","
       << v.violation_pair.second + 1 << ")\n";
  }
  write_output(opt.out_path, os.str());
  return 0;
}

gfan::SeedEnumeration enumerate_with(const Options& opt,
                                     const gfan::ExchangeMatrix& b) {
  if (opt.depth >= 0)
    return gfan::enumerate_seeds_to_depth(
        b, static_cast<std::size_t>(opt.depth), opt.budget);
  return gfan::enumerate_seeds(b, opt.budget);
}

int cmd_enumerate(const Options& opt) {
  gfan::SeedEnumeration e = enumerate_with(
      opt, gfan::matrix_from_json(parse_json(read_input(opt.input))));
  if (opt.human) {
    std::ostringstream os;
    os << e.seeds.size() << " seeds, " << e.edges.size() << " edges, "
       << (e.exhausted ? "exhausted" : "truncated") << "\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::enumeration_to_json(e));
  }
  return 0;
}

int cmd_fan(const Options& opt) {
  const Json j = parse_json(read_input(opt.input));
  gfan::SeedEnumeration e = (j.is_object() && j.contains("seeds"))
                                ? gfan::enumeration_from_json(j)
                                : enumerate_with(opt, gfan::matrix_from_json(j));
  gfan::Fan f = gfan::build_fan(e);
  if (opt.human) {
    std::ostringstream os;
    os << "fan in dimension " << f.dim() << ": " << f.rays().size()
       << " rays, " << f.max_cones().size() << " maximal cones\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::fan_to_json(f));
  }
  return 0;
}

int cmd_check_complete(const Options& opt) {
  gfan::Fan f = gfan::fan_from_json(parse_json(read_input(opt.input)));
  gfan::CompletenessReport r = gfan::check_complete(f);
  if (opt.human) {
    std::ostringstream os;
    os << (r.complete ? "complete" : "incomplete") << " ("
       << f.max_cones().size() << " maximal cones, " << r.facet_count
       << " facets)\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::completeness_to_json(r, f));
  }
  return 0;
}

int cmd_lattice_cover(const Options& opt) {
  gfan::Fan f = gfan::fan_from_json(parse_json(read_input(opt.input)));
  gfan::LatticeCoverReport r = gfan::lattice_cover(f, opt.radius);
  if (opt.human) {
    std::ostringstream os;
    if (r.covered)
      os << "covered: all " << r.points_checked << " lattice points in [-"
         << opt.radius << "," << opt.radius << "]^" << f.dim() << "\n";
    else
      os << "missing lattice point " << vec_text(*r.missing) << "\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::cover_to_json(r, opt.radius));
  }
  return 0;
}

int cmd_witness(const Options& opt) {
  gfan::WitnessOutcome o = gfan::find_witness(
      gfan::matrix_from_json(parse_json(read_input(opt.input))), opt.budget);
  if (std::holds_alternative<gfan::FiniteTypeVerdict>(o)) {
    const auto& v = std::get<gfan::FiniteTypeVerdict>(o);
    if (opt.human)
      write_output(opt.out_path,
                   "finite type; no witness exists (mutation class size " +
                       std::to_string(v.class_size) + ")\n");
    else
      emit_json(opt.out_path, gfan::verdict_to_json(v));
    return 0;
  }
  const auto& cert = std::get<gfan::WitnessCertificate>(o);
  if (opt.human) {
    std::ostringstream os;
    os << "witness " << vec_text(cert.witness) << " via pair ("
       << cert.index_pair.first + 1 << "," << cert.index_pair.second + 1
       << "), (b,c)=(" << cert.rank2.b << "," << cert.rank2.c
       << "), path length " << cert.path.size() << "\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::certificate_to_json(cert));
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  gfan::WitnessCertificate cert =
      gfan::certificate_from_json(parse_json(read_input(opt.input)));
  gfan::WitnessVerification v = gfan::verify_witness(cert, opt.verify_depth);
  if (opt.human) {
    std::ostringstream os;
    for (const gfan::WitnessCheck& c : v.checks)
      os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    os << (v.all_passed() ? "certificate verified" : "certificate REJECTED")
       << " (cone check bounded at depth " << v.depth << ")\n";
    write_output(opt.out_path, os.str());
  } else {
    emit_json(opt.out_path, gfan::verification_to_json(v));
  }
  return v.all_passed() ? 0 : 1;
}

int cmd_plot_rank2(const Options& opt) {
  gfan::Rank2Params p = gfan::Rank2Params::from_pair(opt.rank2_b, opt.rank2_c);
  write_output(opt.out_path, gfan::rank2_fan_svg(p, opt.plot_depth));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact g-vector fans of skew-symmetrizable integer matrices"};
  app.set_version_flag("--version", "gfan 0.1.0");
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("input", opt.input,
                      "inline JSON, @file.json, or '-' for stdin");
    cmd->add_option("--out", opt.out_path, "write the result to a file");
    cmd->add_flag("--human", opt.human, "human-readable text instead of JSON");
  };

  CLI::App* mutate = app.add_subcommand(
      "mutate", "apply a mutation sequence to an exchange or extended matrix");
  add_common(mutate);
  mutate->add_option("-k,--at", opt.directions, "1-based mutation indices")
      ->delimiter(',')
      ->required();

  CLI::App* classify =
      app.add_subcommand("classify", "decide finite or infinite type");
  add_common(classify);
  classify->add_option("--budget", opt.budget, "mutation-class size budget");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate all g-vector seeds");
  add_common(enumerate);
  enumerate->add_option("--budget", opt.budget, "seed budget");
  enumerate->add_option("--depth", opt.depth,
                        "truncate the search at this BFS depth");

  CLI::App* fan = app.add_subcommand(
      "fan", "build the g-fan from a seed set (or enumerate a matrix first)");
  add_common(fan);
  fan->add_option("--budget", opt.budget, "seed budget when enumerating");
  fan->add_option("--depth", opt.depth, "truncation depth when enumerating");

  CLI::App* check =
      app.add_subcommand("check-complete", "facet-pairing completeness test");
  add_common(check);

  CLI::App* cover = app.add_subcommand(
      "lattice-cover", "scan lattice points of [-R, R]^n for support membership");
  add_common(cover);
  cover->add_option("-r,--radius", opt.radius, "box radius R")
      ->check(CLI::NonNegativeNumber);

  CLI::App* witness = app.add_subcommand(
      "witness", "certify a lattice point outside the support (infinite type)");
  add_common(witness);
  witness->add_option("--budget", opt.budget, "mutation-class size budget");

  CLI::App* verify = app.add_subcommand("verify", "check a witness certificate");
  add_common(verify);
  verify->add_option("--depth", opt.verify_depth,
                     "enumeration depth for the cone check");

  CLI::App* plot = app.add_subcommand(
      "plot-rank2", "SVG plot of a rank-2 g-fan with limiting rays");
  add_common(plot, false);
  plot->add_option("--b", opt.rank2_b, "parameter b of [[0,c],[-b,0]]")->required();
  plot->add_option("--c", opt.rank2_c, "parameter c of [[0,c],[-b,0]]")->required();
  plot->add_option("--depth", opt.plot_depth, "rays drawn per side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (mutate->parsed()) return cmd_mutate(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (fan->parsed()) return cmd_fan(opt);
    if (check->parsed()) return cmd_check_complete(opt);
    if (cover->parsed()) return cmd_lattice_cover(opt);
    if (witness->parsed()) return cmd_witness(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (plot->parsed()) return cmd_plot_rank2(opt);
  } catch (const gfan::BudgetExceeded& e) {
    std::cerr << Json{{"error", "budget-exceeded"}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const gfan::InternalError& e) {
    std::cerr << Json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  } catch (const gfan::InvalidInput& e) {
    std::cerr << Json{{"error", "invalid-input"}, {"detail", e.what()}}.dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
