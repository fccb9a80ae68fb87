// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// maxcurve: verify maximal curves, audit genus spectra, print bound tables.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcurve/maxcurve.hpp"

namespace {

// Parses "a..b" or a single value.
std::pair<maxcurve::Int, maxcurve::Int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const maxcurve::Int v = std::stoll(s);
    return {v, v};
  }
  return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for F_{q^2}-maximal curves"};
  app.require_subcommand(1);
  app.fallthrough();

  maxcurve::Config cfg;
  std::string format = "text";
  app.add_option("--budget", cfg.budget, "Cap on element operations per count (>= 10^6)");
  app.add_option("--threads", cfg.threads, "Worker threads for counting (0 = all cores)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--qcap", cfg.q_cap, "Largest q visited by --all sweeps");

  std::string family;
  int k = 1;

  auto* verify = app.add_subcommand("verify", "Check maximality of a family over F_{q^{2k}}, k = 1..kmax");
  bool all = false;
  verify->add_option("--family", family, "Family id, e.g. as:q=7,m=4");
  verify->add_flag("--all", all, "Every family instance with q <= --qcap");
  verify->add_option("--kmax", k, "Largest extension index")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "Genus spectrum audit at q");
  maxcurve::Int audit_q = 0;
  audit->add_option("--q", audit_q, "Prime power q")->required();

  auto* bounds = app.add_subcommand("bounds", "Castelnuovo/Halphen/Ihara bounds at d = q + 1");
  std::string q_range;
  std::vector<maxcurve::Int> rs;
  std::optional<maxcurve::Int> genus;
  auto* q_opt = bounds->add_option("--q", q_range, "Prime power q");
  bounds->add_option("--sweep", q_range, "Range a..b of q (prime powers only)")->excludes(q_opt);
  bounds->add_option("--r", rs, "Projective dimension(s); default 3 4 5 6")->delimiter(',');
  bounds->add_option("--g", genus, "Genus to classify");

  auto* semigroup = app.add_subcommand("semigroup", "Numerical semigroup and order sequence");
  std::vector<maxcurve::Int> gens;
  std::optional<maxcurve::Int> sg_q;
  std::optional<maxcurve::Int> sg_n;
  auto* gens_opt = semigroup->add_option("--gens", gens, "Generators, comma separated")->delimiter(',');
  semigroup->add_option("--family", family, "Family id (uses its semigroup at infinity)")->excludes(gens_opt);
  semigroup->add_option("--q", sg_q, "q for the order sequence");
  semigroup->add_option("--N", sg_n, "dim(D_X) for the order sequence");

  auto* count = app.add_subcommand("count", "Point count of a family over F_{q^{2k}}");
  count->add_option("--family", family, "Family id")->required();
  count->add_option("--k", k, "Extension index")->check(CLI::PositiveNumber);

  try {
    cfg = maxcurve::apply_environment(cfg);
    app.parse(argc, argv);
    cfg.format = maxcurve::parse_format(format);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? maxcurve::kExitOk : maxcurve::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return maxcurve::kExitUsage;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (verify->parsed()) {
    if (all == !family.empty()) {
      err << "error: give exactly one of --family and --all\n";
      return maxcurve::kExitUsage;
    }
    return all ? maxcurve::cmd_verify_all(k, cfg, out, err) : maxcurve::cmd_verify_maximal(family, k, cfg, out, err);
  }
  if (audit->parsed()) return maxcurve::cmd_spectrum_audit(audit_q, cfg, out, err);
  if (bounds->parsed()) {
    if (q_range.empty()) {
      err << "error: give --q or --sweep\n";
      return maxcurve::kExitUsage;
    }
    if (rs.empty()) rs = maxcurve::default_conjecture_dims();
    try {
      const auto [lo, hi] = parse_range(q_range);
      return maxcurve::cmd_bounds(lo, hi, rs, genus, cfg, out, err);
    } catch (const std::logic_error& e) {
      err << "error: bad q range '" << q_range << "'\n";
      return maxcurve::kExitUsage;
    }
  }
  if (semigroup->parsed()) {
    if (!family.empty()) return maxcurve::cmd_semigroup_family(family, cfg, out, err);
    if (gens.empty()) {
      err << "error: give --gens or --family\n";
      return maxcurve::kExitUsage;
    }
    return maxcurve::cmd_semigroup(gens, sg_q, sg_n, cfg, out, err);
  }
  return maxcurve::cmd_count(family, k, cfg, out, err);
}
