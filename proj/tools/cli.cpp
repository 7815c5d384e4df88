#include "cli.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liaison/error.hpp"
#include "liaison/fitting.hpp"
#include "liaison/io.hpp"
#include "liaison/linkage.hpp"
#include "liaison/presets.hpp"
#include "liaison/probe.hpp"
#include "liaison/propcheck.hpp"
#include "liaison/report.hpp"

namespace liaison::cli {

namespace {

Format format_of(bool json) { return json ? Format::Json : Format::Text; }

/// A path that exists wins over a preset of the same name.
RawResolution load_spec(const std::string& source) {
  if (std::filesystem::exists(source)) return read_spec_file(source);
  if (const auto* preset = find_spec_preset(source)) return preset->raw();
  throw Error(ErrorCode::Io, "no spec file or preset named '" + source + "'");
}

PolyMatrix load_matrix(const std::string& source, std::uint32_t p) {
  if (std::filesystem::exists(source)) return PolyMatrix::read_file(source, p);
  if (find_matrix_preset(source)) return matrix_preset(source, p);
  throw Error(ErrorCode::Io, "no matrix file or preset named '" + source + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::Parse, "degree range must look like lo..hi");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used_lo);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw Error(ErrorCode::Parse, "empty degree range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "bad degree range '" + text + "'");
  }
}

struct AnalyzeArgs {
  std::string source;
  bool json = false;
  bool csv = false;
  std::optional<int> pivot;
  std::string tie = "last";
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  VerdictOptions options;
  options.pivot = args.pivot;
  options.tie = args.tie == "first" ? GTiePosition::First : GTiePosition::Last;
  const Verdict v = smoothability_verdict(load_spec(args.source), options);
  if (args.csv && v.eta && v.theta) {
    write_eta_theta_csv(out, *v.eta, *v.theta);
  } else {
    out << render(v, format_of(args.json));
  }
  switch (v.status) {
    case VerdictStatus::Smoothable: return kOk;
    case VerdictStatus::NotImplied: return kNotImplied;
    case VerdictStatus::Invalid: return kError;
  }
  return kError;
}

struct BdlArgs {
  std::string source;
  int degree = 0;
  int times = 1;
  bool json = false;
};

int cmd_bdl(const BdlArgs& args, std::ostream& out, std::ostream& err) {
  ResolutionSpec spec = validate_resolution(load_spec(args.source));
  for (int i = 0; i < args.times; ++i) {
    if (const auto warning = bdl_degree_warning(spec, args.degree)) err << "warning: " << *warning << '\n';
    spec = basic_double_link(spec, args.degree);
  }
  out << render(spec, format_of(args.json));
  return kOk;
}

struct ExploreArgs {
  std::string source;
  int max_height = 0;
  std::string degrees;
  std::size_t cap = ExploreOptions{}.state_cap;
  bool json = false;
};

int cmd_explore(const ExploreArgs& args, std::ostream& out) {
  const ResolutionSpec start = validate_resolution(load_spec(args.source));
  ExploreOptions options;
  options.max_height = args.max_height;
  std::tie(options.degree_lo, options.degree_hi) = parse_range(args.degrees);
  options.state_cap = args.cap;
  out << render(explore(start, options), format_of(args.json));
  return kOk;
}

struct PropcheckArgs {
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool json = false;
};

int cmd_propcheck(const PropcheckArgs& args, std::ostream& out) {
  const PropcheckReport report = propcheck(args.trials, args.seed, {}, args.workers);
  out << render(report, format_of(args.json));
  return report.ok() ? kOk : kCheckFailed;
}

struct FittingArgs {
  std::string matrix;
  std::uint32_t q = 3;
  int i = 1;
  int rank = 0;
  int dim = kPolyVars;
  int k = 1;
  int rows = 2;
  int cols = 2;
  int max_rank = 1;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool structured = false;
  bool json = false;
};

int cmd_gens(const FittingArgs& args, std::ostream& out) {
  out << render(fitting_generators(load_matrix(args.matrix, args.q), args.i), format_of(args.json));
  return kOk;
}

int cmd_sing(const FittingArgs& args, std::ostream& out) {
  const PolyMatrix u = load_matrix(args.matrix, args.q);
  const PointSet points = singular_support(u, args.rank, args.q, args.dim);
  out << render(points, "V(Fitt_" + std::to_string(args.rank + 1) + ")", format_of(args.json));
  return kOk;
}

int cmd_rank_count(const FittingArgs& args, std::ostream& out) {
  out << render(rank_stratum_count(args.rows, args.cols, args.max_rank, args.q), format_of(args.json));
  return kOk;
}

int cmd_probe(const FittingArgs& args, std::ostream& out) {
  const PolyMatrix u = load_matrix(args.matrix, args.q);
  const auto kind = args.structured ? CompanionKind::Structured : CompanionKind::Random;
  out << render(smoothness_probe(u, args.q, args.trials, args.seed, kind, args.workers),
                format_of(args.json));
  return kOk;
}

int cmd_obvy(const FittingArgs& args, std::ostream& out) {
  const PolyMatrix u = load_matrix(args.matrix, args.q);
  const ObvyReport report = check_obvy(u, args.k, args.q, args.seed, args.dim);
  out << render(report, format_of(args.json));
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_presets(bool json, std::ostream& out) {
  if (json) {
    out << "[\n";
    bool first = true;
    for (const auto& p : spec_presets()) {
      out << (first ? "" : ",\n") << render(validate_resolution(p.raw()), Format::Json);
      first = false;
    }
    out << "]\n";
    return kOk;
  }
  out << "spec presets\n";
  for (const auto& p : spec_presets()) {
    out << "  " << p.name;
    for (const auto& alias : p.aliases) out << " (alias " << alias << ")";
    out << "\n    " << p.description << '\n';
  }
  out << "matrix presets\n";
  for (const auto& m : matrix_presets()) {
    out << "  " << m.name << " (generic rank " << m.generic_rank << ")\n    " << m.description << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothability criteria for even linkage classes and Fitting-scheme checks over F_p",
               "liaison"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Smoothability verdict for a spec file or preset");
  analyze_cmd->add_option("spec", analyze.source, "Spec file or preset name")->required();
  analyze_cmd->add_flag("--json", analyze.json, "JSON output");
  analyze_cmd->add_flag("--csv", analyze.csv, "Only the (l, eta, theta) table as CSV");
  analyze_cmd->add_option("--pivot", analyze.pivot, "Override a + h as the theta pivot");
  analyze_cmd->add_option("--tie", analyze.tie, "G position among keys equal to 0")
      ->check(CLI::IsMember({"first", "last"}));

  BdlArgs bdl;
  auto* bdl_cmd = app.add_subcommand("bdl", "Apply basic double links of degree s");
  bdl_cmd->add_option("spec", bdl.source, "Spec file or preset name")->required();
  bdl_cmd->add_option("--degree,-s", bdl.degree, "Hypersurface degree s")->required();
  bdl_cmd->add_option("--times", bdl.times, "Number of links")->check(CLI::NonNegativeNumber);
  bdl_cmd->add_flag("--json", bdl.json, "Emit the result as a spec file");

  ExploreArgs expl;
  auto* explore_cmd = app.add_subcommand("explore", "Breadth-first closure under basic double links");
  explore_cmd->add_option("spec", expl.source, "Spec file or preset name")->required();
  explore_cmd->add_option("--max-height", expl.max_height, "Height bound")->required();
  explore_cmd->add_option("--degrees", expl.degrees, "Degree range lo..hi")->required();
  explore_cmd->add_option("--cap", expl.cap, "State budget");
  explore_cmd->add_flag("--json", expl.json, "JSON output");

  PropcheckArgs pc;
  auto* propcheck_cmd = app.add_subcommand("propcheck", "Randomized alpha/theta equivalence check");
  propcheck_cmd->add_option("--trials", pc.trials, "Number of generated specs");
  propcheck_cmd->add_option("--seed", pc.seed, "Run seed");
  propcheck_cmd->add_option("--workers", pc.workers, "Worker threads")->check(CLI::PositiveNumber);
  propcheck_cmd->add_flag("--json", pc.json, "JSON output");

  FittingArgs fa;
  auto* fitting_cmd = app.add_subcommand("fitting", "Fitting ideals and determinantal checks over F_p");
  fitting_cmd->require_subcommand(1);
  auto add_field = [&fa](CLI::App* cmd) {
    cmd->add_option("--q,--p", fa.q, "Prime field size");
    cmd->add_flag("--json", fa.json, "JSON output");
  };
  auto add_matrix = [&fa](CLI::App* cmd) {
    cmd->add_option("matrix", fa.matrix, "Matrix file or preset name")->required();
  };

  auto* gens_cmd = fitting_cmd->add_subcommand("gens", "Generators of Fitt_i");
  add_matrix(gens_cmd);
  add_field(gens_cmd);
  gens_cmd->add_option("--i", fa.i, "Fitting index")->required()->check(CLI::NonNegativeNumber);

  auto* sing_cmd = fitting_cmd->add_subcommand("sing", "Rational points of the singular scheme");
  add_matrix(sing_cmd);
  add_field(sing_cmd);
  sing_cmd->add_option("--rank", fa.rank, "Generic rank r of the cokernel")->required();
  sing_cmd->add_option("--dim", fa.dim, "Ambient dimension")->check(CLI::Range(1, kPolyVars));

  auto* count_cmd = fitting_cmd->add_subcommand("rank-count", "Matrices of rank <= c over F_q");
  add_field(count_cmd);
  count_cmd->add_option("--rows", fa.rows, "a")->required();
  count_cmd->add_option("--cols", fa.cols, "b")->required();
  count_cmd->add_option("--max-rank", fa.max_rank, "c")->required();

  auto* probe_cmd = fitting_cmd->add_subcommand("probe", "Monte-Carlo smoothness probe");
  add_matrix(probe_cmd);
  add_field(probe_cmd);
  probe_cmd->add_option("--trials", fa.trials, "Number of companions");
  probe_cmd->add_option("--seed", fa.seed, "Run seed");
  probe_cmd->add_option("--workers", fa.workers, "Worker threads")->check(CLI::PositiveNumber);
  probe_cmd->add_flag("--structured", fa.structured, "Use unit-row companions");

  auto* obvy_cmd = fitting_cmd->add_subcommand("obvy", "Free-summand and quotient checks");
  add_matrix(obvy_cmd);
  add_field(obvy_cmd);
  obvy_cmd->add_option("--k", fa.k, "Number of summands / sections")->check(CLI::NonNegativeNumber);
  obvy_cmd->add_option("--seed", fa.seed, "Seed for the random sections");
  obvy_cmd->add_option("--dim", fa.dim, "Ambient dimension")->check(CLI::Range(1, kPolyVars));

  bool presets_json = false;
  auto* presets_cmd = app.add_subcommand("presets", "List built-in presets");
  presets_cmd->add_flag("--json", presets_json, "Spec presets as spec files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    validate_presets();
    if (*analyze_cmd) return cmd_analyze(analyze, out);
    if (*bdl_cmd) return cmd_bdl(bdl, out, err);
    if (*explore_cmd) return cmd_explore(expl, out);
    if (*propcheck_cmd) return cmd_propcheck(pc, out);
    if (*presets_cmd) return cmd_presets(presets_json, out);
    if (*gens_cmd) return cmd_gens(fa, out);
    if (*sing_cmd) return cmd_sing(fa, out);
    if (*count_cmd) return cmd_rank_count(fa, out);
    if (*probe_cmd) return cmd_probe(fa, out);
    if (*obvy_cmd) return cmd_obvy(fa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace liaison::cli
