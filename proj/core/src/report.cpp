#include "liaison/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "liaison/io.hpp"

namespace liaison {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out.empty() ? "-" : out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_text(const Point& p, int dim) {
  std::string out = "(";
  for (int v = 0; v < dim; ++v) {
    if (v) out += ',';
    out += std::to_string(p[static_cast<std::size_t>(v)]);
  }
  return out + ")";
}

ordered_json spec_json(const ResolutionSpec& s) {
  return {{"name", s.name()},   {"rank", s.g().rank},   {"a", s.g().a},
          {"a_list", s.a_list()}, {"b_list", s.b_list()}, {"height", s.height()},
          {"a_plus_h", s.a_plus_h()}};
}

ordered_json stepfn_json(const StepFn& f) {
  return {{"lo", f.lo()}, {"hi", f.hi()}, {"values", f.values()}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render(const ResolutionSpec& spec, Format format) {
  if (format == Format::Json) return spec_to_json(spec) + "\n";
  std::ostringstream out;
  out << "name       " << spec.name() << '\n'
      << "G          rank " << spec.g().rank << ", a " << spec.g().a << '\n'
      << "a_list     " << join(spec.a_list()) << '\n'
      << "b_list     " << join(spec.b_list()) << '\n'
      << "height     " << spec.height() << '\n'
      << "a+h        " << spec.a_plus_h() << '\n';
  return out.str();
}

std::string render(const Verdict& v, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["status"] = std::string(to_string(v.status));
    if (v.spec) j["spec"] = spec_json(*v.spec);
    if (v.rejection) {
      j["rejection"] = {{"code", std::string(to_string(v.rejection->code))},
                        {"message", v.rejection->message}};
      if (v.rejection->degree) j["rejection"]["degree"] = *v.rejection->degree;
    }
    if (v.filtration) {
      ordered_json stages = ordered_json::array();
      for (const auto& s : v.filtration->stages) {
        stages.push_back({{"index", s.index}, {"m", s.m}, {"r", s.r}, {"rank_f", s.rank_f},
                          {"rank_e", s.rank_e}, {"alpha", s.alpha}, {"includes_g", s.includes_g}});
      }
      j["filtration"] = {{"n", v.filtration->n()},
                         {"stages", stages},
                         {"final_alpha", v.filtration->final_alpha},
                         {"cancelled", v.filtration->cancelled}};
    }
    if (v.eta) j["eta"] = stepfn_json(*v.eta);
    if (v.theta) {
      j["theta"] = stepfn_json(*v.theta);
      j["theta_support"] = v.theta->support();
    }
    j["pivot"] = v.pivot;
    j["connected"] = v.connected;
    j["alpha_ok"] = v.alpha_ok;
    j["diagnostics"] = v.diagnostics;
    return dump(j);
  }

  std::ostringstream out;
  out << "status     " << to_string(v.status) << '\n';
  if (v.rejection) out << "rejection  " << v.rejection->message << '\n';
  if (v.spec) {
    const auto& s = *v.spec;
    out << "spec       " << s.name() << '\n'
        << "G          rank " << s.g().rank << ", a " << s.g().a << '\n'
        << "a_list     " << join(s.a_list()) << '\n'
        << "b_list     " << join(s.b_list()) << '\n'
        << "height     " << s.height() << '\n'
        << "a+h        " << s.a_plus_h() << '\n';
  }
  if (v.filtration) {
    const auto& f = *v.filtration;
    out << "\nstage    m    r  rankF  rankE  alpha  G\n";
    for (const auto& s : f.stages) {
      out << pad(std::to_string(s.index), 5) << pad(std::to_string(s.m), 5)
          << pad(std::to_string(s.r), 5) << pad(std::to_string(s.rank_f), 7)
          << pad(std::to_string(s.rank_e), 7) << pad(std::to_string(s.alpha), 7) << "  "
          << (s.includes_g ? "yes" : "no") << '\n';
    }
    out << "n = " << f.n() << ", final alpha = " << f.final_alpha << '\n';
  }
  if (v.eta && v.theta) {
    out << "\n    l   eta  theta\n";
    const int lo = std::min(v.eta->lo(), v.theta->lo());
    const int hi = std::max(v.eta->hi(), v.theta->hi());
    for (int l = lo; l <= hi; ++l) {
      out << pad(std::to_string(l), 5) << pad(std::to_string(v.eta->eval(l)), 6)
          << pad(std::to_string(v.theta->eval(l)), 7) << '\n';
    }
    out << "\ntheta support  " << join(v.theta->support()) << '\n'
        << "connected about " << v.pivot << ": " << yes_no(v.connected) << '\n'
        << "alpha condition: " << yes_no(v.alpha_ok) << '\n';
  }
  for (const auto& d : v.diagnostics) out << "note: " << d << '\n';
  return out.str();
}

std::string render(const ExplorationReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json states = ordered_json::array();
    for (std::size_t i = 0; i < r.states.size(); ++i) {
      const auto& s = r.states[i];
      ordered_json st = {{"id", i},
                         {"spec", spec_json(s.spec)},
                         {"status", std::string(to_string(s.status))},
                         {"signature", s.signature}};
      st["parent"] = s.parent ? ordered_json(*s.parent) : ordered_json(nullptr);
      st["move"] = s.move ? ordered_json(*s.move) : ordered_json(nullptr);
      states.push_back(st);
    }
    ordered_json heights = ordered_json::array();
    for (const auto& h : r.per_height) {
      heights.push_back({{"height", h.height}, {"states", h.states},
                         {"smoothable", h.smoothable}, {"not_implied", h.not_implied}});
    }
    return dump({{"states", states}, {"per_height", heights}});
  }
  std::ostringstream out;
  out << "   id  height  parent     s  status      a_list | b_list\n";
  for (std::size_t i = 0; i < r.states.size(); ++i) {
    const auto& s = r.states[i];
    std::string status(to_string(s.status));
    status.resize(10, ' ');
    out << pad(std::to_string(i), 5) << pad(std::to_string(s.spec.height()), 8)
        << pad(s.parent ? std::to_string(*s.parent) : "-", 8)
        << pad(s.move ? std::to_string(*s.move) : "-", 6) << "  " << status << "  "
        << join(s.spec.a_list()) << " | " << join(s.spec.b_list()) << '\n';
  }
  out << "\nheight  states  smoothable  not-implied\n";
  for (const auto& h : r.per_height) {
    out << pad(std::to_string(h.height), 6) << pad(std::to_string(h.states), 8)
        << pad(std::to_string(h.smoothable), 12) << pad(std::to_string(h.not_implied), 13) << '\n';
  }
  out << "states reachable by basic double links: " << r.states.size() << '\n';
  return out.str();
}

std::string render(const PropcheckReport& r, Format format) {
  char fp[17];
  std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(r.fingerprint));
  if (format == Format::Json) {
    ordered_json ces = ordered_json::array();
    for (const auto& c : r.counterexamples) {
      ces.push_back({{"trial", c.trial}, {"generator", std::string(to_string(c.generator))},
                     {"spec", c.spec}, {"reason", c.reason}});
    }
    return dump({{"seed", r.seed},
                 {"trials", r.trials},
                 {"bdl_specs", r.bdl_specs},
                 {"rejection_specs", r.rejection_specs},
                 {"smoothable", r.smoothable},
                 {"local_minima_checked", r.local_minima_checked},
                 {"generator_failures", r.generator_failures},
                 {"fingerprint", fp},
                 {"counterexamples", ces}});
  }
  std::ostringstream out;
  out << "seed                  " << r.seed << '\n'
      << "trials                " << r.trials << '\n'
      << "bdl-chain specs       " << r.bdl_specs << '\n'
      << "rejection specs       " << r.rejection_specs << '\n'
      << "smoothable            " << r.smoothable << '\n'
      << "local minima checked  " << r.local_minima_checked << '\n'
      << "generator failures    " << r.generator_failures << '\n'
      << "fingerprint           " << fp << '\n';
  for (const auto& c : r.counterexamples) {
    out << "counterexample trial " << c.trial << " (" << to_string(c.generator) << "): " << c.spec
        << ": " << c.reason << '\n';
  }
  out << r.counterexamples.size() << " counterexamples\n";
  return out.str();
}

std::string render(const FittingIdeal& ideal, Format format) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  const std::string kind = ideal.unit ? "unit" : ideal.is_zero() ? "zero" : "proper";
  if (format == Format::Json) {
    return dump({{"index", ideal.index}, {"minor_size", ideal.minor_size}, {"kind", kind},
                 {"generators", gens}});
  }
  std::ostringstream out;
  out << "Fitt_" << ideal.index << " (" << ideal.minor_size << "-minors): ";
  if (ideal.unit) {
    out << "unit ideal\n";
  } else if (ideal.is_zero()) {
    out << "zero ideal\n";
  } else {
    out << gens.size() << " generator(s)\n";
    for (const auto& g : gens) out << "  " << g << '\n';
  }
  return out.str();
}

std::string render(const PointSet& points, const std::string& label, Format format) {
  if (format == Format::Json) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : points.points) {
      pts.push_back(std::vector<std::uint32_t>(p.begin(), p.begin() + points.dim));
    }
    return dump({{"locus", label}, {"q", points.q}, {"dim", points.dim},
                 {"size", points.size()}, {"points", pts}});
  }
  std::ostringstream out;
  out << label << " over F_" << points.q << " in A^" << points.dim << ": " << points.size()
      << " rational point(s)\n";
  for (const auto& p : points.points) out << "  " << point_text(p, points.dim) << '\n';
  return out.str();
}

std::string render(const ObvyReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"i", row.i}, {"generators_equal", row.generators_equal},
                      {"sub_points", row.sub_points}, {"super_points", row.super_points},
                      {"contained", row.contained}});
    }
    return dump({{"k", r.k}, {"q", r.q}, {"companion", r.companion.to_string()},
                 {"rows", rows}, {"ok", r.ok()}});
  }
  std::ostringstream out;
  out << "k = " << r.k << ", q = " << r.q << '\n'
      << "   i  free-summand  |V(Fitt_k+i(u))|  |V(Fitt_i([u,a]))|  contained\n";
  for (const auto& row : r.rows) {
    out << pad(std::to_string(row.i), 4) << pad(row.generators_equal ? "equal" : "DIFFER", 14)
        << pad(std::to_string(row.sub_points), 18) << pad(std::to_string(row.super_points), 20)
        << pad(yes_no(row.contained), 11) << '\n';
  }
  out << (r.ok() ? "all checks hold\n" : "CHECK FAILED\n");
  return out.str();
}

std::string render(const RankCountResult& r, Format format) {
  if (format == Format::Json) {
    return dump({{"a", r.a}, {"b", r.b}, {"c", r.c}, {"q", r.q}, {"count", r.count},
                 {"total", r.total}, {"expected_codimension", r.expected_codimension}});
  }
  return std::to_string(r.count) + "\n";
}

std::string render(const ProbeReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json trials = ordered_json::array();
    for (const auto& t : r.per_trial) {
      trials.push_back({{"index", t.index}, {"outcome", std::string(to_string(t.outcome))},
                        {"locus_points", t.locus_points}, {"low_rank_points", t.low_rank_points},
                        {"high_rank_points", t.high_rank_points}});
    }
    return dump({{"q", r.q}, {"trials", r.trials}, {"seed", r.seed},
                 {"companions", std::string(to_string(r.kind))}, {"passes", r.passes},
                 {"singular", r.singular}, {"not_codim2", r.not_codim2},
                 {"pass_fraction", r.pass_fraction()}, {"per_trial", trials}});
  }
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.4f", r.pass_fraction());
  std::ostringstream out;
  out << "companions     " << to_string(r.kind) << '\n'
      << "q              " << r.q << '\n'
      << "seed           " << r.seed << '\n'
      << "trials         " << r.trials << '\n'
      << "pass           " << r.passes << '\n'
      << "singular       " << r.singular << '\n'
      << "not codim 2    " << r.not_codim2 << '\n'
      << "pass fraction  " << frac << '\n'
      << "smoothness is checked at F_" << r.q << "-rational points only\n";
  return out.str();
}

}  // namespace liaison
