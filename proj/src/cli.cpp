#include "bqm/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bqm/acceptance.hpp"
#include "bqm/report.hpp"

namespace bqm {

namespace {

struct Options {
  std::uint32_t p = 3;
  unsigned degree = 2;
  std::string format = "markdown";
  std::string output;
  bool seed_check = false;

  std::vector<std::string> states;
  std::string axes;
  bool scan = false;
  bool bound = false;

  bool classes = false;
  bool iso = false;
  bool reference = false;

  std::string mode = "local";
  std::optional<std::size_t> size;

  std::string observable = "3,3";
  bool marginals = false;
  int axes_per_side = 2;

  bool table4 = false;
  bool correspondence = false;
};

std::vector<int> parse_axes(const std::string& text, std::size_t count) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad axis '" + item + "' in '" + text + "'");
    }
  }
  if (out.size() != count)
    throw InvalidArgument("expected " + std::to_string(count) + " comma-separated axes, got '" + text + "'");
  return out;
}

std::vector<std::string> default_states(const FieldConfig& cfg) {
  if (cfg.p() == 3 && cfg.degree() == 2) return {"S", "T", "U"};
  return {"S"};
}

std::string single_state(const Options& o, const std::string& fallback) {
  if (o.states.size() > 1) throw InvalidArgument("this subcommand takes one --state");
  return o.states.empty() ? fallback : o.states.front();
}

report::Document chsh_command(const FieldConfig& cfg, const Options& o) {
  if (o.bound) return report::chsh_bound(cfg, chsh_bound(cfg));
  if (!o.axes.empty()) {
    const auto a = parse_axes(o.axes, 4);
    return report::chsh_value(cfg, chsh(named_state(cfg, single_state(o, "S")), a[0], a[1], a[2], a[3]));
  }
  std::vector<CHSHScan> scans;
  for (const auto& s : o.states.empty() ? default_states(cfg) : o.states) scans.push_back(chsh_scan(named_state(cfg, s)));
  return report::chsh_scans(cfg, scans);
}

report::Document groups_command(const FieldConfig& cfg, const Options& o) {
  const auto g = enumerate_group(cfg);
  if (o.classes) return report::group_classes(g);
  if (o.iso || o.reference) {
    std::optional<ReferenceComparison> ref;
    if (o.reference) ref = compare_with_reference(g);
    return report::group_iso(g, verify_isomorphism(g), ref);
  }
  return report::group_elements(g);
}

report::Document orbits_command(const FieldConfig& cfg, const Options& o) {
  const auto g = enumerate_group(cfg);
  const auto r = orbit_report(g, physical_entangled_states(cfg), parse_orbit_mode(o.mode));
  return report::orbits(cfg, r, o.size);
}

report::Document infer_command(const FieldConfig& cfg, const Options& o) {
  const auto label = single_state(o, "T");
  const auto ax = parse_axes(o.observable, 2);
  const auto s = named_state(cfg, label);
  const auto system = spin_product_system(s, ax[0], ax[1], o.marginals);
  return report::inference(cfg, s.label, ax[0], ax[1], o.marginals, system, infer_probabilities(system));
}

report::Document mimic_command(const FieldConfig& cfg, const Options& o) {
  const auto s = named_state(cfg, single_state(o, "S"));
  if (o.axes_per_side == 3 && cfg.degree() != 2) throw InvalidArgument("three axes per side need degree 2");
  const std::vector<int> axes = o.axes_per_side == 3 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 3};
  std::vector<SingleSpinConstraint> singles;
  if (o.marginals) singles = single_spin_constraints(s, axes);
  const auto r = hv_feasibility(correlator_constraints(s, axes), singles, o.axes_per_side);
  return report::mimic(cfg, s.label, o.marginals, r);
}

void write(const Options& o, const std::string& bytes, std::ostream& out) {
  if (o.output.empty()) {
    out << bytes;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + o.output);
  f << bytes;
  if (!f.flush()) throw InvalidArgument("cannot write " + o.output);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact biorthogonal quantum mechanics over GF(p) and GF(p^2)", "bqm"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--p", o.p, "Prime p, with p = 3 mod 4")->capture_default_str();
  app.add_option("--degree", o.degree, "1 for GF(p), 2 for GF(p^2)")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"markdown", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "Write to this file instead of standard output");
  app.add_flag("--seed-check", o.seed_check, "Run the acceptance suite and print one line per criterion");

  auto* tables = app.add_subcommand("tables", "Expectation values and uncertainties of the spin observables");
  auto* census_cmd = app.add_subcommand("census", "Counts of two-particle states");
  auto* chsh_cmd = app.add_subcommand("chsh", "CHSH correlators, scans and the bound");
  chsh_cmd->add_option("--state", o.states, "State label (S, T, U, ...) or vector such as '[0 1 -1 0]'");
  chsh_cmd->add_option("--axes", o.axes, "A,a,B,b for a single correlator");
  chsh_cmd->add_flag("--scan", o.scan, "Tally |C| over every axis quadruple (default)");
  chsh_cmd->add_flag("--bound", o.bound, "Maximum |C| over every physical state");
  auto* groups_cmd = app.add_subcommand("groups", "The projective orthogonal or unitary group");
  groups_cmd->add_flag("--classes", o.classes, "Conjugacy classes");
  groups_cmd->add_flag("--iso", o.iso, "Isomorphism check");
  groups_cmd->add_flag("--reference", o.reference, "Compare with the reference labels (GF(3), GF(9))");
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of the physical entangled states");
  orbits_cmd->add_option("--mode", o.mode, "global or local")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  orbits_cmd->add_option("--size", o.size, "Only list orbits of this size");
  auto* infer_cmd = app.add_subcommand("infer", "Outcome probabilities consistent with the expectation values");
  infer_cmd->add_option("--state", o.states, "State label or vector");
  infer_cmd->add_option("--observable", o.observable, "i,j for sigma_i (x) sigma_j")->capture_default_str();
  infer_cmd->add_flag("--marginals", o.marginals, "Also constrain the single-spin expectations");
  auto* mimic_cmd = app.add_subcommand("mimic", "Search for a hidden-variable mimic of the correlators");
  mimic_cmd->add_option("--state", o.states, "State label or vector");
  mimic_cmd->add_option("--axes-per-side", o.axes_per_side, "2 for axes 1, 3; 3 for axes 1, 2, 3")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  mimic_cmd->add_flag("--marginals", o.marginals, "Also constrain the single-spin expectations");
  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical quantum mechanics comparison");
  canonical_cmd->add_flag("--table4", o.table4, "Born probabilities for sigma3 (x) sigma3 (default)");
  canonical_cmd->add_flag("--correspondence", o.correspondence, "Galois versus canonical correlators");
  auto* phi_cmd = app.add_subcommand("verify-phi", "Uniqueness of the product-preserving map on GF(p)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const auto format = report::parse_format(o.format);
    if (o.seed_check) {
      const auto results = run_acceptance();
      write(o, report::emit(acceptance_report(results), format), out);
      for (const auto& r : results)
        if (!r.passed) return 1;
      return 0;
    }
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      err << "error: a subcommand is required\n\n" << app.help();
      return 2;
    }
    const auto* sub = subs.front();
    report::Document doc;
    if (sub == phi_cmd) {
      doc = report::phi_uniqueness(verify_phi_uniqueness(FieldConfig(o.p, 1)));
    } else {
      const FieldConfig cfg(o.p, o.degree);
      if (sub == tables)
        doc = report::tables(table_report(cfg));
      else if (sub == census_cmd)
        doc = report::census(cfg, census(cfg));
      else if (sub == chsh_cmd)
        doc = chsh_command(cfg, o);
      else if (sub == groups_cmd)
        doc = groups_command(cfg, o);
      else if (sub == orbits_cmd)
        doc = orbits_command(cfg, o);
      else if (sub == infer_cmd)
        doc = infer_command(cfg, o);
      else if (sub == mimic_cmd)
        doc = mimic_command(cfg, o);
      else if (sub == canonical_cmd)
        doc = o.correspondence ? report::correspondence(correspondence_check()) : report::table4(table4_report());
    }
    write(o, report::emit(doc, format), out);
    return 0;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bqm
