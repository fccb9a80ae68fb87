// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file audit.hpp
 * @brief Report builders and command drivers behind the maxcurve CLI.
 *
 * Every cmd_* function writes its report to `out`, diagnostics to `err`,
 * and returns the process exit code:
 *   0  success, every check passed
 *   1  mathematical mismatch (observed count differs from the prediction)
 *   2  resource or usage error (budget exceeded, bad arguments)
 *
 * JSON reports carry "schema": "maxcurve.v1"; the layout is documented in
 * README.md and parsed back by the from_json overloads below.
 */

#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxcurve/bounds.hpp"
#include "maxcurve/counting.hpp"
#include "maxcurve/curves.hpp"
#include "maxcurve/semigroup.hpp"

namespace maxcurve {

inline constexpr const char* kSchemaVersion = "maxcurve.v1";
inline constexpr Int kMinBudget = 1'000'000;

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class Format { kText, kJson, kCsv };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw std::invalid_argument("format must be csv, json or text, not '" + s + "'");
}

struct Config {
  Int budget = kDefaultBudget;
  /// Largest q visited by sweeps.
  Int q_cap = 13;
  Format format = Format::kText;
  unsigned threads = 0;

  void validate() const {
    if (budget < kMinBudget) throw std::invalid_argument("budget must be >= 10^6");
    if (q_cap < 2) throw std::invalid_argument("q cap must be >= 2");
  }

  CountOptions count_options() const {
    CountOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    return opts;
  }
};

/// Applies MAXCURVE_BUDGET, if set, on top of cfg.
inline Config apply_environment(Config cfg) {
  if (const char* env = std::getenv("MAXCURVE_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      cfg.budget = v;
    } catch (const std::logic_error&) {
      throw std::invalid_argument(std::string("MAXCURVE_BUDGET is not an integer: ") + env);
    }
  }
  return cfg;
}

namespace detail {

inline std::string rational_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> json_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

inline void require_schema(const nlohmann::json& j) {
  if (j.value("schema", std::string()) != kSchemaVersion) {
    throw std::invalid_argument(std::string("expected schema ") + kSchemaVersion);
  }
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- verify

struct VerifyRow {
  int k = 1;
  Int affine = 0;
  Int at_infinity = 0;
  Int observed = 0;
  Int expected = 0;
  bool pass() const noexcept { return observed == expected; }
  friend bool operator==(const VerifyRow&, const VerifyRow&) = default;
};

struct VerifyReport {
  std::string family;
  Int q = 0;
  Int genus = 0;
  std::vector<VerifyRow> rows;
  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass(); });
  }
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline VerifyReport verify_maximal(const CurveFamily& f, int k_max, const Config& cfg) {
  if (k_max < 1) throw std::invalid_argument("k max must be >= 1");
  VerifyReport rep{f.id(), f.q(), family_genus(f), {}};
  for (int k = 1; k <= k_max; ++k) {
    const PointCount c = count_curve(f, k, cfg.count_options());
    rep.rows.push_back({k, c.affine, c.at_infinity, c.total, predicted_extension_count(f.q(), rep.genus, k)});
  }
  return rep;
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = {{"schema", kSchemaVersion}, {"kind", "verify"}, {"family", r.family}, {"q", r.q}, {"genus", r.genus},
       {"all_pass", r.all_pass()}, {"rows", nlohmann::json::array()}};
  for (const auto& row : r.rows) {
    j["rows"].push_back({{"k", row.k},
                         {"affine", row.affine},
                         {"at_infinity", row.at_infinity},
                         {"observed", row.observed},
                         {"expected", row.expected},
                         {"pass", row.pass()}});
  }
}

inline void from_json(const nlohmann::json& j, VerifyReport& r) {
  detail::require_schema(j);
  r.family = j.at("family").get<std::string>();
  r.q = j.at("q").get<Int>();
  r.genus = j.at("genus").get<Int>();
  r.rows.clear();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({row.at("k").get<int>(), row.at("affine").get<Int>(), row.at("at_infinity").get<Int>(),
                      row.at("observed").get<Int>(), row.at("expected").get<Int>()});
  }
}

inline void render(std::ostream& out, const VerifyReport& r, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      out << nlohmann::json(r).dump(2) << '\n';
      return;
    case Format::kCsv:
      out << "family,q,genus,k,affine,at_infinity,observed,expected,pass\n";
      for (const auto& row : r.rows) {
        out << '"' << r.family << "\"," << r.q << ',' << r.genus << ',' << row.k << ',' << row.affine << ','
            << row.at_infinity << ',' << row.observed << ',' << row.expected << ',' << (row.pass() ? "true" : "false")
            << '\n';
      }
      return;
    case Format::kText:
      out << r.family << "  genus " << r.genus << '\n';
      for (const auto& row : r.rows) {
        out << "  k=" << row.k << "  " << (row.pass() ? "PASS" : "MISMATCH") << "  observed " << row.observed
            << " = " << row.affine << " affine + " << row.at_infinity << " extra, expected " << row.expected << '\n';
      }
      return;
  }
}

namespace detail {

// Runs body, mapping exceptions to exit code 2 with a message on err.
// Mismatches are never exceptions; commands return kExitMismatch themselves.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or MAXCURVE_BUDGET)\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

inline void report_mismatches(std::ostream& err, const VerifyReport& r) {
  for (const auto& row : r.rows) {
    if (!row.pass()) {
      err << "MISMATCH: " << r.family << " over F_{q^" << 2 * row.k << "}: observed " << row.observed
          << ", expected " << row.expected << '\n';
    }
  }
}

}  // namespace detail

inline int cmd_verify_maximal(const std::string& family_id, int k_max, const Config& cfg, std::ostream& out,
                              std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    const VerifyReport rep = verify_maximal(CurveFamily::parse(family_id), k_max, cfg);
    render(out, rep, cfg.format);
    detail::report_mismatches(err, rep);
    return rep.all_pass() ? kExitOk : kExitMismatch;
  });
}

/// Verifies every family instance at every prime power q <= cfg.q_cap.
inline int cmd_verify_all(int k_max, const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    std::vector<VerifyReport> reports;
    for (Int q = 2; q <= cfg.q_cap; ++q) {
      if (!PrimePower::try_from_value(q)) continue;
      for (const auto& f : families_at(q)) reports.push_back(verify_maximal(f, k_max, cfg));
    }
    bool ok = true;
    if (cfg.format == Format::kJson) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(r);
      out << nlohmann::json{{"schema", kSchemaVersion}, {"kind", "verify-all"}, {"reports", arr}}.dump(2) << '\n';
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (cfg.format == Format::kText) render(out, reports[i], cfg.format);
      if (cfg.format == Format::kCsv) {
        std::ostringstream buf;
        render(buf, reports[i], cfg.format);
        std::string s = buf.str();
        out << (i == 0 ? s : s.substr(s.find('\n') + 1));
      }
      detail::report_mismatches(err, reports[i]);
      ok = ok && reports[i].all_pass();
    }
    return ok ? kExitOk : kExitMismatch;
  });
}

// ---------------------------------------------------------------- spectrum

struct AuditRecord {
  Int q = 0;
  Int g = 0;
  Trichotomy trichotomy = Trichotomy::kExcluded;
  /// r -> whether the conjectural gap (c_1(q+1,r), c_0(q+1,r)) contains g.
  std::map<Int, bool> conjecture;
  /// Labels of the known-example formulas evaluating to g.
  std::vector<std::string> known_examples;
  /// Catalog family ids with genus g at this q.
  std::vector<std::string> families;
  /// Classification label when a classification statement covers g.
  std::optional<std::string> classification;
  std::optional<std::string> classification_hypothesis;

  bool proven_excluded() const noexcept { return trichotomy == Trichotomy::kExcluded; }
  bool non_existent() const noexcept { return classification && *classification == "non-existent"; }
  bool realized() const noexcept { return !families.empty() || !known_examples.empty(); }
  bool conjecture_flagged() const {
    return std::any_of(conjecture.begin(), conjecture.end(), [](const auto& kv) { return kv.second; });
  }
  /// excluded | non-existent | realized | open
  std::string status() const {
    if (proven_excluded()) return "excluded";
    if (non_existent()) return "non-existent";
    if (realized()) return "realized";
    return "open";
  }
  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

struct SpectrumSummary {
  Int excluded = 0;
  Int non_existent = 0;
  Int realized = 0;
  Int open = 0;
  Int conjecture_flagged = 0;
  friend bool operator==(const SpectrumSummary&, const SpectrumSummary&) = default;
};

struct SpectrumAudit {
  Int q = 0;
  std::vector<Int> rs;
  std::vector<AuditRecord> records;

  const AuditRecord& at(Int g) const { return records.at(static_cast<std::size_t>(g)); }

  /// Genera the trichotomy (or the small-q table) does not exclude.
  std::vector<Int> admissible() const {
    std::vector<Int> out;
    for (const auto& r : records) {
      if (!r.proven_excluded()) out.push_back(r.g);
    }
    return out;
  }

  SpectrumSummary summary() const {
    SpectrumSummary s;
    for (const auto& r : records) {
      const std::string st = r.status();
      if (st == "excluded") ++s.excluded;
      else if (st == "non-existent") ++s.non_existent;
      else if (st == "realized") ++s.realized;
      else ++s.open;
      if (r.conjecture_flagged()) ++s.conjecture_flagged;
    }
    return s;
  }
  friend bool operator==(const SpectrumAudit&, const SpectrumAudit&) = default;
};

inline const std::vector<Int>& default_conjecture_dims() {
  static const std::vector<Int> dims{3, 4, 5, 6};
  return dims;
}

inline SpectrumAudit spectrum_audit(Int q, const std::vector<Int>& rs = default_conjecture_dims()) {
  PrimePower::from_value(q);
  SpectrumAudit audit;
  audit.q = q;
  for (Int r : rs) {
    if (r >= 3 && r <= q) audit.rs.push_back(r);
  }
  const auto examples = known_examples(q);
  const auto classes = known_classifications(q);
  const auto families = families_at(q);
  for (Int g = 0; g <= ihara_bound(q); ++g) {
    AuditRecord rec;
    rec.q = q;
    rec.g = g;
    rec.trichotomy = trichotomy_classify(q, g).tag;
    for (Int r : audit.rs) rec.conjecture[r] = conjecture_excludes(q, g, r);
    for (const auto& ex : examples) {
      if (ex.genus == g) rec.known_examples.push_back(ex.label);
    }
    for (const auto& f : families) {
      if (family_genus(f) == g) rec.families.push_back(f.id());
    }
    for (const auto& c : classes) {
      if (c.genus == g) {
        rec.classification = c.label();
        if (!c.hypothesis.empty()) rec.classification_hypothesis = c.hypothesis;
        break;
      }
    }
    audit.records.push_back(std::move(rec));
  }
  return audit;
}

inline void to_json(nlohmann::json& j, const AuditRecord& r) {
  nlohmann::json conj = nlohmann::json::object();
  for (const auto& [rr, v] : r.conjecture) conj[std::to_string(rr)] = v;
  j = {{"q", r.q},
       {"g", r.g},
       {"trichotomy", to_string(r.trichotomy)},
       {"conjecture_excludes", conj},
       {"known_examples", r.known_examples},
       {"families", r.families},
       {"classification", detail::optional_json(r.classification)},
       {"classification_hypothesis", detail::optional_json(r.classification_hypothesis)},
       {"status", r.status()}};
}

inline void from_json(const nlohmann::json& j, AuditRecord& r) {
  r.q = j.at("q").get<Int>();
  r.g = j.at("g").get<Int>();
  r.trichotomy = trichotomy_from_string(j.at("trichotomy").get<std::string>());
  r.conjecture.clear();
  for (const auto& [key, v] : j.at("conjecture_excludes").items()) r.conjecture[std::stoll(key)] = v.get<bool>();
  r.known_examples = j.at("known_examples").get<std::vector<std::string>>();
  r.families = j.at("families").get<std::vector<std::string>>();
  r.classification = detail::json_optional<std::string>(j, "classification");
  r.classification_hypothesis = detail::json_optional<std::string>(j, "classification_hypothesis");
}

inline void to_json(nlohmann::json& j, const SpectrumAudit& a) {
  const SpectrumSummary s = a.summary();
  j = {{"schema", kSchemaVersion},
       {"kind", "spectrum-audit"},
       {"q", a.q},
       {"conjecture_dims", a.rs},
       {"admissible", a.admissible()},
       {"summary",
        {{"excluded", s.excluded},
         {"non_existent", s.non_existent},
         {"realized", s.realized},
         {"open", s.open},
         {"conjecture_flagged", s.conjecture_flagged}}},
       {"records", a.records}};
}

inline void from_json(const nlohmann::json& j, SpectrumAudit& a) {
  detail::require_schema(j);
  a.q = j.at("q").get<Int>();
  a.rs = j.at("conjecture_dims").get<std::vector<Int>>();
  a.records = j.at("records").get<std::vector<AuditRecord>>();
}

inline void render(std::ostream& out, const SpectrumAudit& a, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      out << nlohmann::json(a).dump(2) << '\n';
      return;
    case Format::kCsv:
      out << "q,g,trichotomy,status,conjecture_flagged,classification,families,known_examples\n";
      for (const auto& r : a.records) {
        out << r.q << ',' << r.g << ',' << to_string(r.trichotomy) << ',' << r.status() << ','
            << (r.conjecture_flagged() ? "true" : "false") << ",\"" << r.classification.value_or("") << "\",\""
            << detail::join(r.families, ";") << "\",\"" << detail::join(r.known_examples, ";") << "\"\n";
      }
      return;
    case Format::kText: {
      const SpectrumSummary s = a.summary();
      out << "spectrum audit q=" << a.q << ", g in [0, " << ihara_bound(a.q) << "]\n";
      out << "admissible:";
      for (Int g : a.admissible()) out << ' ' << g;
      out << '\n';
      for (const auto& r : a.records) {
        if (r.proven_excluded() && !r.conjecture_flagged() && !r.classification) continue;
        out << "  g=" << r.g << "  " << r.status() << "  [" << to_string(r.trichotomy) << ']';
        if (r.classification) {
          out << "  " << *r.classification;
          if (r.classification_hypothesis) out << " (if " << *r.classification_hypothesis << ')';
        }
        if (!r.families.empty()) out << "  families: " << detail::join(r.families, ", ");
        if (r.conjecture_flagged()) {
          out << "  conjecturally excluded for r =";
          for (const auto& [rr, v] : r.conjecture) {
            if (v) out << ' ' << rr;
          }
        }
        out << '\n';
      }
      out << "summary: " << s.excluded << " excluded, " << s.non_existent << " non-existent, " << s.realized
          << " realized, " << s.open << " open; " << s.conjecture_flagged << " conjecturally excluded\n";
      return;
    }
  }
}

inline int cmd_spectrum_audit(Int q, const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    render(out, spectrum_audit(q), cfg.format);
    return kExitOk;
  });
}

// ---------------------------------------------------------------- bounds

inline void to_json(nlohmann::json& j, const BoundReport& b) {
  j = {{"schema", kSchemaVersion},
       {"kind", "bounds"},
       {"q", b.q},
       {"d", b.d},
       {"r", b.r},
       {"g", detail::optional_json(b.g)},
       {"c0", detail::optional_json(b.c0)},
       {"eps", detail::optional_json(b.eps)},
       {"c1", detail::optional_json(b.c1)},
       {"eps1", detail::optional_json(b.eps1)},
       {"upper_estimate", detail::rational_string(b.upper_estimate)},
       {"ihara", b.ihara},
       {"second", b.second},
       {"third", b.third},
       {"halphen_degree_threshold", b.halphen_degree_threshold},
       {"trichotomy", b.trichotomy ? nlohmann::json(to_string(b.trichotomy->tag)) : nlohmann::json(nullptr)},
       {"conjecture_excludes", detail::optional_json(b.conjecture_excludes)}};
}

inline void from_json(const nlohmann::json& j, BoundReport& b) {
  detail::require_schema(j);
  b.q = j.at("q").get<Int>();
  b.d = j.at("d").get<Int>();
  b.r = j.at("r").get<Int>();
  b.g = detail::json_optional<Int>(j, "g");
  b.c0 = detail::json_optional<Int>(j, "c0");
  b.eps = detail::json_optional<Int>(j, "eps");
  b.c1 = detail::json_optional<Int>(j, "c1");
  b.eps1 = detail::json_optional<Int>(j, "eps1");
  b.upper_estimate = detail::parse_rational(j.at("upper_estimate").get<std::string>());
  b.ihara = j.at("ihara").get<Int>();
  b.second = j.at("second").get<Int>();
  b.third = j.at("third").get<Int>();
  b.halphen_degree_threshold = j.at("halphen_degree_threshold").get<Int>();
  b.trichotomy.reset();
  if (auto tag = detail::json_optional<std::string>(j, "trichotomy")) {
    TrichotomyVerdict v{trichotomy_from_string(*tag), b.ihara, b.second, b.third, has_known_spectrum(b.q)};
    b.trichotomy = v;
  }
  b.conjecture_excludes = detail::json_optional<bool>(j, "conjecture_excludes");
}

inline const char* kBoundsCsvHeader = "q,r,c0,eps,c1,eps1,ihara,second,third,upper_estimate";

inline void render_csv_row(std::ostream& out, const BoundReport& b) {
  auto cell = [&](const std::optional<Int>& v) {
    if (v) out << *v;
  };
  out << b.q << ',' << b.r << ',';
  cell(b.c0);
  out << ',';
  cell(b.eps);
  out << ',';
  cell(b.c1);
  out << ',';
  cell(b.eps1);
  out << ',' << b.ihara << ',' << b.second << ',' << b.third << ',' << detail::rational_string(b.upper_estimate)
      << '\n';
}

inline void render(std::ostream& out, const std::vector<BoundReport>& reports, Format fmt) {
  switch (fmt) {
    case Format::kJson: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& b : reports) arr.push_back(b);
      out << nlohmann::json{{"schema", kSchemaVersion}, {"kind", "bounds-table"}, {"rows", arr}}.dump(2) << '\n';
      return;
    }
    case Format::kCsv:
      out << kBoundsCsvHeader << '\n';
      for (const auto& b : reports) render_csv_row(out, b);
      return;
    case Format::kText:
      for (const auto& b : reports) {
        out << "q=" << b.q << " r=" << b.r << " d=" << b.d;
        if (b.c0) out << "  c0=" << *b.c0 << " (eps " << *b.eps << ')';
        if (b.c1) out << "  c1=" << *b.c1 << " (eps1 " << *b.eps1 << ')';
        out << "  upper=" << detail::rational_string(b.upper_estimate) << "  ihara=" << b.ihara
            << "  second=" << b.second << "  third=" << b.third;
        if (b.g) {
          out << "\n  g=" << *b.g << ": " << to_string(b.trichotomy->tag);
          if (b.conjecture_excludes) {
            out << ", conjecture " << (*b.conjecture_excludes ? "excludes" : "does not exclude") << " (conjectural)";
          }
        }
        out << '\n';
      }
      return;
  }
}

/// Bounds for every q in [q_lo, q_hi] (prime powers only) and every r.
inline int cmd_bounds(Int q_lo, Int q_hi, const std::vector<Int>& rs, std::optional<Int> g, const Config& cfg,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (q_lo > q_hi) throw std::invalid_argument("empty q range");
    if (rs.empty()) throw std::invalid_argument("no r values given");
    std::vector<BoundReport> reports;
    for (Int q = q_lo; q <= q_hi; ++q) {
      if (!PrimePower::try_from_value(q)) {
        if (q_lo == q_hi) PrimePower::from_value(q);
        continue;
      }
      for (Int r : rs) reports.push_back(bound_report(q, r, g));
    }
    render(out, reports, cfg.format);
    return kExitOk;
  });
}

// ---------------------------------------------------------------- semigroup

struct SemigroupReport {
  std::vector<Int> generators;
  Int genus = 0;
  Int frobenius_number = 0;
  Int conductor = 0;
  std::vector<Int> gaps;
  std::optional<Int> q;
  std::optional<Int> n;
  std::vector<Int> nongaps;
  std::optional<std::vector<Int>> orders;
  std::optional<bool> nongap_profile;
};

inline SemigroupReport semigroup_report(const std::vector<Int>& gens, std::optional<Int> q, std::optional<Int> n) {
  const auto s = NumericalSemigroup::from_generators(gens);
  SemigroupReport rep{s.generators(), s.genus(), s.frobenius_number(), s.conductor(), s.gaps(), q, n, {}, {}, {}};
  if (q.has_value() != n.has_value()) throw std::invalid_argument("--q and --N go together");
  if (q && n) {
    rep.nongaps = s.nongaps(*n + 1).values();
    rep.nongap_profile = check_nongap_profile(*q, *n, s.nongaps(*n + 1));
    rep.orders = orders_from_nongaps(*q, s.nongaps(*n + 1), *n).values();
  } else {
    rep.nongaps = s.nongaps(std::min<Int>(s.conductor() - s.genus() + 1, 32)).values();
  }
  return rep;
}

inline void to_json(nlohmann::json& j, const SemigroupReport& r) {
  j = {{"schema", kSchemaVersion},
       {"kind", "semigroup"},
       {"generators", r.generators},
       {"genus", r.genus},
       {"frobenius_number", r.frobenius_number},
       {"conductor", r.conductor},
       {"gaps", r.gaps},
       {"q", detail::optional_json(r.q)},
       {"N", detail::optional_json(r.n)},
       {"nongaps", r.nongaps},
       {"orders", detail::optional_json(r.orders)},
       {"nongap_profile", detail::optional_json(r.nongap_profile)}};
}

inline void render(std::ostream& out, const SemigroupReport& r, Format fmt) {
  auto list = [](const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  switch (fmt) {
    case Format::kJson:
      out << nlohmann::json(r).dump(2) << '\n';
      return;
    case Format::kCsv:
      out << "generators,genus,frobenius_number,conductor,gaps,nongaps,orders\n";
      out << '"' << list(r.generators) << "\"," << r.genus << ',' << r.frobenius_number << ',' << r.conductor
          << ",\"" << list(r.gaps) << "\",\"" << list(r.nongaps) << "\",\"" << (r.orders ? list(*r.orders) : "")
          << "\"\n";
      return;
    case Format::kText:
      out << "semigroup <" << list(r.generators) << ">  genus " << r.genus << "  frobenius " << r.frobenius_number
          << "  conductor " << r.conductor << '\n';
      out << "  gaps: " << list(r.gaps) << '\n';
      out << "  non-gaps: " << list(r.nongaps) << '\n';
      if (r.orders) {
        out << "  orders (q=" << *r.q << ", N=" << *r.n << "): " << list(*r.orders) << '\n';
        out << "  m_{N-1} = q < m_N: " << (*r.nongap_profile ? "holds" : "fails") << '\n';
      }
      return;
  }
}

inline int cmd_semigroup(const std::vector<Int>& gens, std::optional<Int> q, std::optional<Int> n, const Config& cfg,
                         std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    render(out, semigroup_report(gens, q, n), cfg.format);
    return kExitOk;
  });
}

/// Semigroup report for a catalog family, with the genus cross-check.
inline int cmd_semigroup_family(const std::string& family_id, const Config& cfg, std::ostream& out,
                                std::ostream& err) {
  return detail::guarded(err, [&] {
    const CurveFamily f = CurveFamily::parse(family_id);
    const auto check = semigroup_crosscheck(f);
    if (!check) throw std::invalid_argument(f.id() + ": no semigroup data for this family");
    render(out, semigroup_report(check->generators, f.q(), check->dim_DX), cfg.format);
    if (!check->genus_matches) {
      err << "MISMATCH: semigroup genus " << check->semigroup_genus << " vs family genus " << check->family_genus
          << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------- count

inline int cmd_count(const std::string& family_id, int k, const Config& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    const CurveFamily f = CurveFamily::parse(family_id);
    const PointCount c = count_curve(f, k, cfg.count_options());
    const Int expected = predicted_extension_count(f.q(), family_genus(f), k);
    switch (cfg.format) {
      case Format::kJson:
        out << nlohmann::json{{"schema", kSchemaVersion},
                              {"kind", "count"},
                              {"family", f.id()},
                              {"k", k},
                              {"affine", c.affine},
                              {"at_infinity", c.at_infinity},
                              {"total", c.total},
                              {"expected", expected}}
                   .dump(2)
            << '\n';
        break;
      case Format::kCsv:
        out << "family,k,affine,at_infinity,total,expected\n\"" << f.id() << "\"," << k << ',' << c.affine << ','
            << c.at_infinity << ',' << c.total << ',' << expected << '\n';
        break;
      case Format::kText:
        out << f.id() << " over F_" << extension_field(f, k).size() << ": " << c.total << " points (" << c.affine
            << " affine + " << c.at_infinity << "), maximal-curve prediction " << expected << '\n';
        break;
    }
    return kExitOk;
  });
}

}  // namespace maxcurve
