// Command-line front end. Results go to stdout as JSON.
// Exit status: 0 success, 1 domain error (JSON error on stdout), 2 malformed input or usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipt/ipt.hpp"
#include "ipt/json_io.hpp"

namespace {

using ipt::json;

struct RunConfig {
  std::string command;
  std::string input_path;
  long prec_bits = ipt::kDefaultPrecBits;
  std::optional<std::string> xi;
  std::optional<std::string> moduli;
  long grid = 3;
  std::size_t dim = 2;
  std::string mode = "subsets";
};

struct Input {
  std::optional<ipt::RationalPolytope> polytope;
  ipt::IntPointSet points;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ipt::FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ipt::FormatError("invalid JSON in '" + path + "': " + e.what());
  }
}

Input read_input(const std::string& path) {
  json j = read_json(path);
  if (j.is_object() && j.contains("vertices")) {
    ipt::RationalPolytope p = ipt::polytope_from_json(j);
    ipt::IntPointSet pts = ipt::lattice_points(p);
    return {std::move(p), std::move(pts)};
  }
  if (j.is_object() && j.contains("points")) return {std::nullopt, ipt::points_from_json(j)};
  throw ipt::FormatError("input needs \"vertices\" (polytope) or \"points\" (point set)");
}

const ipt::RationalPolytope& require_polytope(const Input& in, const std::string& command) {
  if (!in.polytope) throw ipt::FormatError("'" + command + "' needs a polytope input with \"vertices\"");
  return *in.polytope;
}

ipt::RatVector require_xi(const RunConfig& cfg, std::size_t dim) {
  if (!cfg.xi) throw ipt::FormatError("'" + cfg.command + "' needs --xi");
  ipt::RatVector xi = ipt::parse_xi(*cfg.xi);
  if (xi.size() != dim)
    throw ipt::Error(ipt::ErrorKind::DimensionMismatch, "xi has dimension " + std::to_string(xi.size()) +
                                                            ", input has dimension " + std::to_string(dim));
  return xi;
}

std::vector<long> parse_moduli(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long k = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(k);
    } catch (const std::exception&) {
      throw ipt::FormatError("bad modulus '" + item + "'");
    }
  }
  return out;
}

json real_json(const ipt::Real& x, long prec) { return x.to_string(ipt::output_digits(prec)); }

json matrix_json(const ipt::RatMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(ipt::to_json(row));
  return out;
}

json int_matrix_json(const ipt::IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(ipt::to_int64(x));
    out.push_back(r);
  }
  return out;
}

json run(const RunConfig& cfg) {
  const long prec = cfg.prec_bits;
  const std::string& cmd = cfg.command;

  if (cmd == "collide") {
    if (cfg.mode != "subsets" && cfg.mode != "hulls") throw ipt::FormatError("--mode must be subsets or hulls");
    std::vector<ipt::IntPointSet> corpus;
    if (cfg.mode == "subsets") {
      corpus = ipt::box_subsets(cfg.dim, cfg.grid);
    } else {
      for (const auto& h : ipt::grid_hulls(cfg.dim, cfg.grid, false)) corpus.push_back(ipt::lattice_points(h));
    }
    ipt::CollisionResult r = ipt::collision_scan(corpus, prec);
    std::size_t largest = 0;
    for (const auto& s : corpus) largest = std::max(largest, s.size());
    return {{"count", corpus.size()},
            {"min_gap", real_json(r.min_gap, prec)},
            {"error_bound", real_json(ipt::signature_error_bound(largest, prec), prec)},
            {"pair", {r.first, r.second}},
            {"sets", {ipt::to_json(corpus[r.first]), ipt::to_json(corpus[r.second])}},
            {"prec_bits", prec}};
  }

  if (cmd == "reconstruct") {
    ipt::CoefficientTable t = ipt::table_from_json(read_json(cfg.input_path));
    return ipt::to_json(ipt::reconstruct_set(t));
  }

  Input in = read_input(cfg.input_path);
  const ipt::IntPointSet& s = in.points;

  if (cmd == "points") return ipt::to_json(s);

  if (cmd == "sigma") {
    ipt::RatVector xi = require_xi(cfg, s.dim());
    return {{"value", ipt::to_json(ipt::sigma_eval(s, xi, prec))}, {"xi", ipt::to_json(xi)}, {"prec_bits", prec}};
  }

  if (cmd == "signature") {
    return {{"value", ipt::to_json(ipt::signature(s, prec))},
            {"error_bound", real_json(ipt::signature_error_bound(s.size(), prec), prec)},
            {"size", s.size()},
            {"prec_bits", prec}};
  }

  if (cmd == "maxima") {
    ipt::MaximaAnalysis m = ipt::maxima_analysis(s);
    json reps = json::array();
    for (const auto& r : m.reps) reps.push_back(ipt::to_json(r));
    return {{"index", ipt::to_int64(*m.lattice.index())},
            {"basis", int_matrix_json(m.lattice.basis())},
            {"dual_basis", matrix_json(m.dual.basis)},
            {"reps", reps},
            {"complete", m.complete}};
  }

  if (cmd == "spanning") {
    const auto& p = require_polytope(in, cmd);
    ipt::IntegerLattice l = ipt::integer_span(s);
    json index = l.index() ? json(ipt::to_int64(*l.index())) : json(nullptr);
    return {{"spanning", ipt::is_spanning(p)}, {"rank", l.rank()}, {"index", index}};
  }

  if (cmd == "symmetric") {
    ipt::SymmetryReport r = ipt::central_symmetry_report(s, prec);
    return {{"symmetric", r.symmetric},
            {"oracle", r.oracle},
            {"on_set_criterion", r.on_set_criterion},
            {"mismatch", r.mismatch},
            {"k", r.k},
            {"max_imag", real_json(r.max_imag, prec)},
            {"prec_bits", prec}};
  }

  if (cmd == "dft") {
    if (!cfg.moduli) throw ipt::FormatError("'dft' needs --moduli");
    return ipt::to_json(ipt::forward_dft(s, ipt::GroupSpec(parse_moduli(*cfg.moduli)), prec));
  }

  if (cmd == "brion") {
    const auto& p = require_polytope(in, cmd);
    ipt::RatVector xi = require_xi(cfg, p.dim());
    ipt::BrionEvaluation e = ipt::brion_evaluate(p, xi, prec);
    return {{"value", ipt::to_json(e.value)},
            {"error_bound", real_json(e.error_bound, prec)},
            {"xi", ipt::to_json(xi)},
            {"prec_bits", prec}};
  }

  if (cmd == "ft-signature") {
    const auto& p = require_polytope(in, cmd);
    ipt::BrionEvaluation e = ipt::ft_signature_evaluate(p, prec);
    return {{"value", ipt::to_json(e.value)}, {"error_bound", real_json(e.error_bound, prec)}, {"prec_bits", prec}};
  }

  throw ipt::FormatError("unknown command '" + cmd + "'");
}

void print_error(const std::string& kind, const std::string& message) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("IPT_PREC_BITS")) {
    try {
      std::size_t used = 0;
      cfg.prec_bits = std::stol(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      print_error("MalformedInput", std::string("IPT_PREC_BITS is not an integer: '") + env + "'");
      return 2;
    }
  }

  CLI::App app{"Integer point transforms of point sets and rational polytopes"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::optional<long> prec_flag;
  app.add_option("--prec", prec_flag, "working precision in bits (default 256, or IPT_PREC_BITS)");

  struct Spec {
    const char* name;
    const char* help;
    bool input;
    bool xi;
    bool moduli;
  };
  const std::vector<Spec> specs = {
      {"points", "lattice points of a polytope", true, false, false},
      {"sigma", "integer point transform at --xi", true, true, false},
      {"signature", "transform at the signature point", true, false, false},
      {"maxima", "lattice, dual lattice and inequivalent absolute maxima", true, false, false},
      {"spanning", "whether the lattice points span Z^d", true, false, false},
      {"symmetric", "central symmetry test", true, false, false},
      {"dft", "finite Fourier coefficients on Z/k1 x ... x Z/kd", true, false, true},
      {"reconstruct", "recover a point set from a coefficient table", true, false, false},
      {"brion", "continuous Fourier transform at --xi via vertex cones", true, true, false},
      {"ft-signature", "continuous Fourier transform at the signature point", true, false, false},
      {"collide", "minimum signature gap over a grid corpus", false, false, false},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.input) sub->add_option("input", cfg.input_path, "input JSON file")->required();
    if (spec.xi) sub->add_option("--xi", cfg.xi, "comma-separated rationals or decimals, e.g. 1/2,0.25");
    if (spec.moduli) sub->add_option("--moduli", cfg.moduli, "comma-separated moduli, e.g. 4,4,4");
    if (std::string(spec.name) == "collide") {
      sub->add_option("--grid", cfg.grid, "grid side length (points 0..grid-1)");
      sub->add_option("--dim", cfg.dim, "grid dimension");
      sub->add_option("--mode", cfg.mode, "subsets or hulls");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (prec_flag) cfg.prec_bits = *prec_flag;

  try {
    if (cfg.prec_bits < ipt::kMinPrecBits) throw ipt::FormatError("precision must be at least 64 bits");
    std::cout << run(cfg).dump() << '\n';
    return 0;
  } catch (const ipt::FormatError& e) {
    print_error("MalformedInput", e.what());
    return 2;
  } catch (const ipt::Error& e) {
    print_error(std::string(ipt::to_string(e.kind())), e.what());
    return 1;
  }
}
