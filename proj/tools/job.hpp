#pragma once

// Batch jobs for the command line front end: config parsing, execution of the
// orbits / compute / check commands, and json, csv and table rendering.

#include "folcoh/dense.hpp"
#include "folcoh/growth.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace folcoh::job {

using json = nlohmann::ordered_json;
using folcoh::to_string;

enum class Format { Json, Csv, Table };
enum class Check { Inequalities, Dualities, Lefschetz, Orientability, DenseOracle };

inline constexpr std::array<Check, 5> all_checks = {Check::Inequalities, Check::Dualities, Check::Lefschetz,
                                                   Check::Orientability, Check::DenseOracle};

inline const char *to_string(Check c) {
  switch (c) {
  case Check::Inequalities: return "inequalities";
  case Check::Dualities: return "dualities";
  case Check::Lefschetz: return "lefschetz";
  case Check::Orientability: return "orientability";
  case Check::DenseOracle: return "denseOracle";
  }
  return "?";
}

inline const char *to_string(Format f) {
  switch (f) {
  case Format::Json: return "json";
  case Format::Csv: return "csv";
  case Format::Table: return "table";
  }
  return "?";
}

inline std::optional<Format> parse_format(const std::string &s) {
  for (Format f : {Format::Json, Format::Csv, Format::Table})
    if (s == to_string(f))
      return f;
  return std::nullopt;
}

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int structure_failed = 2;
inline constexpr int property_violation = 3;
} // namespace exit_code

inline int exit_code_for(ErrorKind k) {
  switch (k) {
  case ErrorKind::NotSquare:
  case ErrorKind::NotUnimodular:
  case ErrorKind::InvalidConfig:
  case ErrorKind::StructureMissing:
  case ErrorKind::InsufficientSamples:
    return exit_code::invalid_input;
  case ErrorKind::NotSymplectic:
  case ErrorKind::NotComplexCompatible:
  case ErrorKind::OddDimension:
  case ErrorKind::OddCodimension:
    return exit_code::structure_failed;
  default:
    return exit_code::property_violation;
  }
}

struct JobConfig {
  std::vector<std::vector<Integer>> matrix;
  bool symplectic = false;
  bool complex = false;
  long max_n = 4;
  std::size_t window = 3;
  std::optional<std::vector<Theory>> theories; // absent: every theory the structures allow
  std::optional<std::vector<Check>> checks;    // absent: none for compute, all applicable for check
  Format format = Format::Table;
  bool per_orbit = false;
};

// --- parsing ---------------------------------------------------------------

namespace detail {

[[noreturn]] inline void invalid(const std::string &msg) { throw Error(ErrorKind::InvalidConfig, msg); }

inline void only_keys(const json &obj, std::initializer_list<const char *> allowed, const std::string &where) {
  if (!obj.is_object())
    invalid(where + " must be an object");
  for (const auto &item : obj.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char *k) { return item.key() == k; }))
      invalid("unknown key '" + item.key() + "' in " + where);
}

inline Integer parse_integer(const json &v) {
  if (v.is_number_integer())
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long long>()))
                                  : Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
      return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  invalid("matrix entries must be integers, got " + v.dump());
}

inline bool parse_bool(const json &v, const std::string &where) {
  if (!v.is_boolean())
    invalid(where + " must be a boolean");
  return v.get<bool>();
}

inline long parse_long(const json &v, const std::string &where, long min) {
  if (!v.is_number_integer() || v.get<long long>() < min)
    invalid(where + " must be an integer >= " + std::to_string(min));
  return static_cast<long>(v.get<long long>());
}

inline std::vector<std::string> string_list(const json &v, const std::string &where) {
  if (!v.is_array())
    invalid(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto &x : v) {
    if (!x.is_string())
      invalid(where + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

} // namespace detail

inline JobConfig parse_config(const json &doc) {
  using namespace detail;
  only_keys(doc, {"matrix", "structures", "truncation", "theories", "checks", "output"}, "config");
  JobConfig c;
  if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].empty())
    invalid("config needs a non-empty 'matrix' array of rows");
  for (const auto &row : doc["matrix"]) {
    if (!row.is_array())
      invalid("matrix rows must be arrays");
    std::vector<Integer> r;
    for (const auto &x : row)
      r.push_back(parse_integer(x));
    c.matrix.push_back(std::move(r));
  }
  if (doc.contains("structures")) {
    const auto &s = doc["structures"];
    only_keys(s, {"symplectic", "complex"}, "structures");
    if (s.contains("symplectic"))
      c.symplectic = parse_bool(s["symplectic"], "structures.symplectic");
    if (s.contains("complex"))
      c.complex = parse_bool(s["complex"], "structures.complex");
  }
  if (doc.contains("truncation")) {
    const auto &t = doc["truncation"];
    only_keys(t, {"max_n", "window"}, "truncation");
    if (t.contains("max_n"))
      c.max_n = parse_long(t["max_n"], "truncation.max_n", 0);
    if (t.contains("window"))
      c.window = static_cast<std::size_t>(parse_long(t["window"], "truncation.window", 1));
  }
  if (doc.contains("theories")) {
    std::vector<Theory> ts;
    for (const auto &name : string_list(doc["theories"], "theories")) {
      auto t = parse_theory(name);
      if (!t)
        invalid("unknown theory '" + name + "'");
      ts.push_back(*t);
    }
    c.theories = ts;
  }
  if (doc.contains("checks")) {
    std::vector<Check> cs;
    for (const auto &name : string_list(doc["checks"], "checks")) {
      auto it = std::find_if(all_checks.begin(), all_checks.end(), [&](Check k) { return name == to_string(k); });
      if (it == all_checks.end())
        invalid("unknown check '" + name + "'");
      cs.push_back(*it);
    }
    c.checks = cs;
  }
  if (doc.contains("output")) {
    const auto &o = doc["output"];
    only_keys(o, {"format", "per_orbit"}, "output");
    if (o.contains("format")) {
      if (!o["format"].is_string())
        invalid("output.format must be a string");
      auto f = parse_format(o["format"].get<std::string>());
      if (!f)
        invalid("output.format must be json, csv or table");
      c.format = *f;
    }
    if (o.contains("per_orbit"))
      c.per_orbit = parse_bool(o["per_orbit"], "output.per_orbit");
  }
  return c;
}

inline JobConfig parse_config_text(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::InvalidConfig, std::string("config is not valid json: ") + e.what());
  }
  return parse_config(doc);
}

inline JobConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidConfig, "cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// --- preparation -----------------------------------------------------------

struct Job {
  JobConfig config;
  UnimodularMatrix a;
  Structures structures;
  std::vector<Theory> theories; // reported theories, canonical order

  int n() const { return static_cast<int>(a.n()); }
  bool allows(Theory t) const {
    return (!needs_complex(t) || structures.complex) && (!needs_symplectic(t) || structures.symplectic);
  }
  std::vector<Theory> available() const {
    std::vector<Theory> out;
    for (Theory t : all_theories)
      if (allows(t))
        out.push_back(t);
    return out;
  }
};

/// Profiles need at least `window` samples N = 0..max_n.
inline void require_samples(const JobConfig &c) {
  if (static_cast<std::size_t>(c.max_n) + 1 < c.window)
    throw Error(ErrorKind::InsufficientSamples, "max_n = " + std::to_string(c.max_n) + " gives " +
                                                    std::to_string(c.max_n + 1) + " samples, fewer than window " +
                                                    std::to_string(c.window));
}

/// Validates the matrix and the requested structures. Throws folcoh::Error.
inline Job prepare(const JobConfig &c) {
  Job job{c, validate_unimodular(c.matrix), {}, {}};
  if (c.symplectic)
    job.structures.symplectic = check_symplectic(job.a);
  if (c.complex)
    job.structures.complex = check_complex(job.a);
  if (c.theories) {
    std::set<Theory> wanted(c.theories->begin(), c.theories->end());
    for (Theory t : all_theories) {
      if (!wanted.count(t))
        continue;
      if (!job.allows(t))
        throw Error(ErrorKind::InvalidConfig, std::string(to_string(t)) + " requires the " +
                                                  (needs_complex(t) ? "complex" : "symplectic") +
                                                  " structure to be requested");
      job.theories.push_back(t);
    }
  } else {
    job.theories = job.available();
  }
  if (c.per_orbit && c.format == Format::Csv)
    throw Error(ErrorKind::InvalidConfig, "the per-orbit dump is available in json and table formats only");
  return job;
}

// --- results ---------------------------------------------------------------

struct CheckLine {
  std::string name;
  std::string location;
  std::string status; // pass | fail for assertions, holds | violated for findings
  std::string detail;
  bool failed() const { return status == "fail"; }
};

struct Outcome {
  std::string text;
  int exit_code = exit_code::ok;
};

namespace detail {

inline std::string verdict_text(const Verdict &v) {
  if (v.stabilized)
    return "stabilized " + std::to_string(v.value);
  std::string s = "growing";
  for (long long d : v.differences)
    s += " " + std::string(d >= 0 ? "+" : "") + std::to_string(d);
  return s;
}

inline json verdict_json(const Verdict &v) {
  json j;
  if (v.stabilized) {
    j["kind"] = "stabilized";
    j["value"] = std::to_string(v.value);
  } else {
    j["kind"] = "growing";
    j["differences"] = json::array();
    for (long long d : v.differences)
      j["differences"].push_back(std::to_string(d));
  }
  return j;
}

inline json integer_json(const Integer &x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

inline json matrix_json(const UnimodularMatrix &a) {
  json m = json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.n(); ++j)
      row.push_back(integer_json(a(i, j)));
    m.push_back(row);
  }
  return m;
}

inline json vector_json(const LatticeVector &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(integer_json(x));
  return out;
}

inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i)
    out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

/// Left-aligned columns separated by two spaces.
inline std::string aligned(const std::vector<std::vector<std::string>> &rows, const std::string &indent = "") {
  std::vector<std::size_t> width;
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i)
        width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto &r : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size())
        line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline json structures_json(const Job &job) {
  json s;
  s["symplectic"] = job.structures.symplectic.has_value();
  s["complex"] = job.structures.complex.has_value();
  return s;
}

inline std::string structures_text(const Job &job) {
  std::string s;
  if (job.structures.symplectic)
    s += " symplectic";
  if (job.structures.complex)
    s += " complex";
  return s.empty() ? " none" : s;
}

inline std::string matrix_text(const UnimodularMatrix &a) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < a.n(); ++j)
      r.push_back(a(i, j).get_str());
    rows.push_back(r);
  }
  return aligned(rows, "  ");
}

} // namespace detail

// --- orbits ----------------------------------------------------------------

inline Outcome cmd_orbits(const Job &job) {
  using namespace detail;
  const auto orbits = enumerate_orbits(job.a, job.config.max_n);
  std::vector<std::vector<std::size_t>> fibers;
  for (const auto &o : orbits) {
    OrbitModel m(job.a, o);
    std::vector<std::size_t> f;
    for (int k = 0; k <= job.n(); ++k)
      f.push_back(m.dim(k));
    fibers.push_back(f);
  }
  std::string out;
  switch (job.config.format) {
  case Format::Json: {
    json doc;
    doc["matrix"] = matrix_json(job.a);
    doc["max_n"] = job.config.max_n;
    doc["orbits"] = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      json o;
      o["representative"] = vector_json(orbits[i].representative);
      o["size"] = std::to_string(orbits[i].size());
      o["fiber_dims"] = json::array();
      for (auto d : fibers[i])
        o["fiber_dims"].push_back(std::to_string(d));
      doc["orbits"].push_back(o);
    }
    out = doc.dump(2) + "\n";
    break;
  }
  case Format::Csv: {
    std::vector<std::string> header = {"representative", "size"};
    for (int k = 0; k <= job.n(); ++k)
      header.push_back("dim" + std::to_string(k));
    out = csv_row(header);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      std::vector<std::string> row = {to_string(orbits[i].representative), std::to_string(orbits[i].size())};
      for (auto d : fibers[i])
        row.push_back(std::to_string(d));
      out += csv_row(row);
    }
    break;
  }
  case Format::Table: {
    out = "matrix\n" + matrix_text(job.a);
    out += "period bound " + period_bound(job.a).get_str() + ", " + std::to_string(orbits.size()) +
           " finite orbits with representative in |k_i| <= " + std::to_string(job.config.max_n) + "\n\n";
    std::vector<std::vector<std::string>> rows = {{"representative", "size", "fiber dims by degree"}};
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      std::string f;
      for (auto d : fibers[i])
        f += (f.empty() ? "" : " ") + std::to_string(d);
      rows.push_back({to_string(orbits[i].representative), std::to_string(orbits[i].size()), f});
    }
    out += aligned(rows, "  ");
    break;
  }
  }
  return {out, exit_code::ok};
}

// --- checks ----------------------------------------------------------------

namespace detail {

inline std::vector<CheckLine> identity_lines(const Job &job, const std::vector<OrbitResult> &results) {
  std::vector<CheckLine> out;
  for (const auto &name : identity_names(job.structures.symplectic.has_value(), job.structures.complex.has_value())) {
    std::vector<std::string> where;
    for (const auto &r : results)
      for (const auto &f : r.identity_failures)
        if (f.name == name)
          where.push_back(to_string(r.orbit.representative) + " at " + f.location);
    CheckLine line{name, "all orbits", where.empty() ? "pass" : "fail", ""};
    line.detail = where.empty() ? "holds on " + std::to_string(results.size()) + " orbits"
                                : "fails on " + std::to_string(where.size()) + " orbit degrees, first " + where.front();
    out.push_back(line);
  }
  return out;
}

inline std::vector<CheckLine> inequality_lines(const Job &job, const std::vector<OrbitResult> &results) {
  struct Tally {
    std::size_t orbit_failures = 0;
    std::string first_failure;
    std::vector<long> aggregate_failures;
    std::size_t lhs = 0, rhs = 0;
  };
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Tally> tally;
  auto touch = [&](const Inequality &q) -> Tally & {
    auto key = std::make_pair(q.name, q.location);
    if (!tally.count(key))
      order.push_back(key);
    return tally[key];
  };
  for (const auto &r : results)
    for (const auto &q : inequalities(r.tables, job.n())) {
      Tally &t = touch(q);
      if (!q.holds() && t.orbit_failures++ == 0)
        t.first_failure = to_string(r.orbit.representative) + ": " + std::to_string(q.lhs) + " > " +
                          std::to_string(q.rhs);
    }
  for (long n = 0; n <= job.config.max_n; ++n)
    for (const auto &q : inequalities(totals_at(results, n), job.n())) {
      Tally &t = touch(q);
      if (!q.holds())
        t.aggregate_failures.push_back(n);
      t.lhs = q.lhs;
      t.rhs = q.rhs;
    }
  std::vector<CheckLine> out;
  const std::string max_n = std::to_string(job.config.max_n);
  for (const auto &key : order) {
    const Tally &t = tally[key];
    const bool ok = t.orbit_failures == 0 && t.aggregate_failures.empty();
    std::string detail = "N=" + max_n + ": " + std::to_string(t.lhs) + " <= " + std::to_string(t.rhs);
    if (ok)
      detail += "; holds on every orbit and every N";
    else if (t.orbit_failures)
      detail += "; fails on " + std::to_string(t.orbit_failures) + " orbits, first " + t.first_failure;
    else
      detail += "; aggregate fails at N=" + std::to_string(t.aggregate_failures.front());
    out.push_back({key.first, key.second, ok ? "pass" : "fail", detail});
  }
  return out;
}

inline std::vector<CheckLine> duality_lines(const Job &job, const std::vector<OrbitResult> &results) {
  const long max_n = job.config.max_n;
  std::vector<std::vector<DualityFinding>> per_n;
  for (long n = 0; n <= max_n; ++n)
    per_n.push_back(duality_report(totals_at(results, n), job.n()));
  std::vector<CheckLine> out;
  const auto &last = per_n.back();
  for (std::size_t i = 0; i < last.size(); ++i) {
    const DualityFinding &f = last[i];
    CheckLine line{f.pair, f.left.str() + "/" + f.right.str(), "", ""};
    const std::string dims = std::to_string(f.left_dim) + (f.equal() ? " = " : " != ") + std::to_string(f.right_dim);
    if (f.expected_to_hold) {
      std::optional<long> first_bad;
      for (long n = 0; n <= max_n && !first_bad; ++n)
        if (!per_n[static_cast<std::size_t>(n)][i].equal())
          first_bad = n;
      line.status = first_bad ? "fail" : "pass";
      line.detail = first_bad ? "unequal at N=" + std::to_string(*first_bad)
                              : "equal at every N; N=" + std::to_string(max_n) + ": " + dims;
    } else {
      line.status = f.equal() ? "holds" : "violated";
      line.detail = "N=" + std::to_string(max_n) + ": " + dims;
    }
    out.push_back(line);
  }
  return out;
}

inline std::vector<CheckLine> lefschetz_lines(const Job &job, const std::vector<OrbitResult> &results) {
  std::vector<CheckLine> out;
  const int m = job.n() / 2;
  for (const auto &l : lefschetz_report(results, m, job.config.max_n)) {
    const std::string where = "omega^" + std::to_string(l.power) + ": " + std::to_string(m - l.power) + "->" +
                              std::to_string(m + l.power);
    std::string detail = "N=" + std::to_string(job.config.max_n) + ": rank " + std::to_string(l.rank) + " of " +
                         std::to_string(l.target);
    detail += l.epimorphism ? "; surjective on every orbit" : "; not surjective on some orbit";
    out.push_back({"lefschetz", where, l.epimorphism ? "holds" : "violated", detail});
  }
  return out;
}

inline CheckLine orientability_line(const Job &job, const std::vector<OrbitResult> &results) {
  auto profiles = aggregate(results, job.n(), job.config.max_n, {Theory::DeRham}, job.config.window);
  auto ind = orientability_indicator(profiles, job.n());
  return {"orientability", "degree " + std::to_string(job.n()), ind.orientable ? "holds" : "violated", ind.note};
}

inline std::vector<CheckLine> dense_lines(const Job &job, const std::vector<OrbitResult> &results,
                                          const std::vector<Theory> &theories) {
  std::vector<CheckLine> out;
  const SymplecticData *s = job.structures.symplectic ? &*job.structures.symplectic : nullptr;
  const ComplexData *c = job.structures.complex ? &*job.structures.complex : nullptr;
  for (long n = 0; n <= std::min(2L, job.config.max_n); ++n) {
    DenseModel dense(job.a, n, s, c);
    const auto totals = totals_at(results, n);
    std::vector<std::string> bad;
    for (Theory t : theories)
      if (dense.compute(t) != totals.at(t))
        bad.push_back(to_string(t));
    std::string detail;
    if (bad.empty()) {
      detail = std::to_string(theories.size()) + " theories agree over " + std::to_string(dense.modes().size()) +
               " periodic modes";
    } else {
      detail = "disagree:";
      for (const auto &b : bad)
        detail += " " + b;
    }
    out.push_back({"denseOracle", "N=" + std::to_string(n), bad.empty() ? "pass" : "fail", detail});
  }
  return out;
}

inline CheckLine monotone_line(const std::vector<DimensionProfile> &profiles) {
  for (const auto &p : profiles)
    for (std::size_t i = 1; i < p.samples.size(); ++i)
      if (p.samples[i].second < p.samples[i - 1].second)
        return {"monotone", "profiles", "fail",
                std::string(to_string(p.theory)) + " " + p.grading.str() + " decreases at N=" +
                    std::to_string(p.samples[i].first)};
  return {"monotone", "profiles", "pass", "every profile is nondecreasing in N"};
}

inline std::vector<Check> applicable_checks(const Job &job) {
  std::vector<Check> out;
  for (Check c : all_checks)
    if (c != Check::Lefschetz || job.structures.symplectic)
      out.push_back(c);
  return out;
}

inline std::vector<CheckLine> run_checks(const Job &job, const std::vector<OrbitResult> &results,
                                         const std::vector<Check> &checks, const std::vector<Theory> &computed) {
  std::vector<CheckLine> out;
  for (Check c : checks) {
    std::vector<CheckLine> lines;
    switch (c) {
    case Check::Inequalities: lines = inequality_lines(job, results); break;
    case Check::Dualities: lines = duality_lines(job, results); break;
    case Check::Lefschetz:
      if (!job.structures.symplectic)
        throw Error(ErrorKind::InvalidConfig, "the lefschetz check requires the symplectic structure");
      lines = lefschetz_lines(job, results);
      break;
    case Check::Orientability: lines = {orientability_line(job, results)}; break;
    case Check::DenseOracle: lines = dense_lines(job, results, computed); break;
    }
    out.insert(out.end(), lines.begin(), lines.end());
  }
  return out;
}

inline json checks_json(const std::vector<CheckLine> &checks) {
  json arr = json::array();
  for (const auto &c : checks)
    arr.push_back({{"name", c.name}, {"location", c.location}, {"status", c.status}, {"detail", c.detail}});
  return arr;
}

inline std::string checks_table(const std::vector<CheckLine> &checks) {
  std::vector<std::vector<std::string>> rows = {{"check", "location", "status", "detail"}};
  for (const auto &c : checks)
    rows.push_back({c.name, c.location, c.status, c.detail});
  return aligned(rows, "  ");
}

inline json profiles_json(const std::vector<DimensionProfile> &profiles) {
  json arr = json::array();
  for (const auto &p : profiles) {
    json s = json::array();
    for (const auto &[n, d] : p.samples)
      s.push_back(json::array({n, std::to_string(d)}));
    arr.push_back({{"theory", to_string(p.theory)},
                   {"grading", p.grading.str()},
                   {"samples", s},
                   {"verdict", verdict_json(p.verdict)}});
  }
  return arr;
}

/// Bigraded verdicts laid out as a diagram: q grows upward, p to the right.
inline std::string diagram(const std::vector<DimensionProfile> &profiles, Theory t, int m) {
  std::vector<std::vector<std::string>> rows;
  for (int q = m; q >= 0; --q) {
    std::vector<std::string> r = {std::to_string(q) + " |"};
    for (int p = 0; p <= m; ++p) {
      const DimensionProfile *prof = find_profile(profiles, t, Grading::bidegree(p, q));
      r.push_back(prof->verdict.stabilized ? std::to_string(prof->verdict.value) : "grows");
    }
    rows.push_back(r);
  }
  std::vector<std::string> axis = {"q/p"};
  for (int p = 0; p <= m; ++p)
    axis.push_back(std::to_string(p));
  rows.push_back(axis);
  return aligned(rows, "    ");
}

inline std::string profiles_table(const Job &job, const std::vector<DimensionProfile> &profiles) {
  std::string out;
  for (Theory t : job.theories) {
    out += std::string(to_string(t)) + "\n";
    if (is_bigraded(t))
      out += diagram(profiles, t, job.n() / 2) + "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"grading"};
    for (long n = 0; n <= job.config.max_n; ++n)
      header.push_back("N=" + std::to_string(n));
    header.push_back("verdict");
    rows.push_back(header);
    for (const auto &p : profiles) {
      if (p.theory != t)
        continue;
      std::vector<std::string> r = {p.grading.str()};
      for (const auto &s : p.samples)
        r.push_back(std::to_string(s.second));
      r.push_back(verdict_text(p.verdict));
      rows.push_back(r);
    }
    out += aligned(rows, "  ") + "\n";
  }
  return out;
}

inline json per_orbit_json(const std::vector<OrbitResult> &results) {
  json arr = json::array();
  for (const auto &r : results) {
    json o;
    o["representative"] = vector_json(r.orbit.representative);
    o["size"] = std::to_string(r.orbit.size());
    json dims;
    for (const auto &[t, table] : r.tables) {
      json g;
      for (const auto &[grading, d] : table)
        g[grading.str()] = std::to_string(d);
      dims[to_string(t)] = g;
    }
    o["dims"] = dims;
    arr.push_back(o);
  }
  return arr;
}

inline std::string per_orbit_table(const Job &job, const std::vector<OrbitResult> &results) {
  std::string out = "per orbit\n";
  for (Theory t : job.theories) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {std::string(to_string(t)), "size"};
    for (Grading g : gradings_for(t, job.n()))
      header.push_back(g.str());
    rows.push_back(header);
    for (const auto &r : results) {
      std::vector<std::string> row = {to_string(r.orbit.representative), std::to_string(r.orbit.size())};
      for (Grading g : gradings_for(t, job.n()))
        row.push_back(std::to_string(r.tables.at(t).at(g)));
      rows.push_back(row);
    }
    out += aligned(rows, "  ") + "\n";
  }
  return out;
}

inline std::string header_text(const Job &job) {
  return "matrix\n" + matrix_text(job.a) + "structures:" + structures_text(job) + "\ntruncation N = 0.." +
         std::to_string(job.config.max_n) + ", window " + std::to_string(job.config.window) + "\n\n";
}

inline bool any_failed(const std::vector<CheckLine> &checks) {
  return std::any_of(checks.begin(), checks.end(), [](const CheckLine &c) { return c.failed(); });
}

} // namespace detail

// --- compute ---------------------------------------------------------------

inline Outcome cmd_compute(const Job &job) {
  using namespace detail;
  require_samples(job.config);
  const bool with_checks = job.config.checks && !job.config.checks->empty();
  const std::vector<Theory> computed = with_checks ? job.available() : job.theories;
  const auto results = survey(job.a, job.structures, job.config.max_n, computed);
  const auto profiles = aggregate(results, job.n(), job.config.max_n, job.theories, job.config.window);

  std::vector<CheckLine> checks = {monotone_line(profiles)};
  if (with_checks) {
    auto more = run_checks(job, results, *job.config.checks, computed);
    checks.insert(checks.end(), more.begin(), more.end());
  }

  std::string out;
  switch (job.config.format) {
  case Format::Json: {
    json doc;
    doc["matrix"] = matrix_json(job.a);
    doc["structures"] = structures_json(job);
    doc["profiles"] = profiles_json(profiles);
    doc["checks"] = checks_json(checks);
    if (job.config.per_orbit)
      doc["orbits"] = per_orbit_json(results);
    out = doc.dump(2) + "\n";
    break;
  }
  case Format::Csv:
    out = csv_row({"theory", "grading", "N", "dimension"});
    for (const auto &p : profiles)
      for (const auto &[n, d] : p.samples)
        out += csv_row({to_string(p.theory), p.grading.str(), std::to_string(n), std::to_string(d)});
    break;
  case Format::Table:
    out = header_text(job) + profiles_table(job, profiles);
    if (job.config.per_orbit)
      out += per_orbit_table(job, results);
    out += "checks\n" + checks_table(checks);
    break;
  }
  return {out, any_failed(checks) ? exit_code::property_violation : exit_code::ok};
}

// --- check -----------------------------------------------------------------

inline Outcome cmd_check(const Job &job) {
  using namespace detail;
  require_samples(job.config);
  const std::vector<Theory> computed = job.available();
  const auto results = survey(job.a, job.structures, job.config.max_n, computed, true);
  const auto profiles = aggregate(results, job.n(), job.config.max_n, job.theories, job.config.window);

  std::vector<CheckLine> checks = identity_lines(job, results);
  checks.push_back(monotone_line(profiles));
  auto more = run_checks(job, results, job.config.checks ? *job.config.checks : applicable_checks(job), computed);
  checks.insert(checks.end(), more.begin(), more.end());

  std::string out;
  switch (job.config.format) {
  case Format::Json: {
    json doc;
    doc["matrix"] = matrix_json(job.a);
    doc["structures"] = structures_json(job);
    doc["profiles"] = profiles_json(profiles);
    doc["checks"] = checks_json(checks);
    if (job.config.per_orbit)
      doc["orbits"] = per_orbit_json(results);
    out = doc.dump(2) + "\n";
    break;
  }
  case Format::Csv:
    out = csv_row({"name", "location", "status", "detail"});
    for (const auto &c : checks)
      out += csv_row({c.name, c.location, c.status, c.detail});
    break;
  case Format::Table:
    out = header_text(job);
    if (job.config.per_orbit)
      out += per_orbit_table(job, results);
    out += "checks\n" + checks_table(checks);
    break;
  }
  return {out, any_failed(checks) ? exit_code::property_violation : exit_code::ok};
}

} // namespace folcoh::job
