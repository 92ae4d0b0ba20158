#pragma once

// Aggregation of per-orbit dimensions over truncation radii 0..N and the
// stabilized / growing classification of each profile.

#include "engines.hpp"
#include "identities.hpp"
#include "lattice.hpp"
#include "orbit_complex.hpp"
#include "structures.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace folcoh {

struct Structures {
  std::optional<SymplecticData> symplectic;
  std::optional<ComplexData> complex;
};

inline void require_structures(const Structures &s, const std::vector<Theory> &theories) {
  for (Theory t : theories) {
    if (needs_complex(t) && !s.complex)
      throw Error(ErrorKind::StructureMissing, std::string(to_string(t)) + " requires a validated complex structure");
    if (needs_symplectic(t) && !s.symplectic)
      throw Error(ErrorKind::StructureMissing,
                  std::string(to_string(t)) + " requires a validated symplectic structure");
  }
}

struct LefschetzRank {
  int power = 0;
  std::size_t rank = 0;
  std::size_t target = 0;
  bool surjective() const { return rank == target; }
};

/// Everything computed for one orbit.
struct OrbitResult {
  LatticeOrbit orbit;
  long radius = 0;
  std::vector<std::size_t> fiber_dims;
  std::map<Theory, DimTable> tables;
  std::vector<LefschetzRank> lefschetz;
  std::vector<IdentityFailure> identity_failures; // filled only on request
};

inline OrbitResult analyze_orbit(const UnimodularMatrix &a, const Structures &s, LatticeOrbit orbit,
                                 const std::vector<Theory> &theories, bool with_identities = false) {
  OrbitResult r;
  r.radius = orbit.radius().get_si();
  OrbitModel model(a, orbit, s.symplectic ? &*s.symplectic : nullptr, s.complex ? &*s.complex : nullptr);
  for (int k = 0; k <= model.n(); ++k)
    r.fiber_dims.push_back(model.dim(k));
  for (Theory t : theories)
    r.tables[t] = compute_theory(model, t);
  if (s.symplectic) {
    const int m = model.half();
    for (int power = 0; power <= m; ++power)
      r.lefschetz.push_back({power, rank(model.lefschetz(power)), model.dim(m + power)});
  }
  if (with_identities)
    r.identity_failures = identity_failures(model);
  r.orbit = std::move(orbit);
  return r;
}

/// Per-orbit results for every orbit counted at radius max_n.
inline std::vector<OrbitResult> survey(const UnimodularMatrix &a, const Structures &s, long max_n,
                                       const std::vector<Theory> &theories, bool with_identities = false) {
  require_structures(s, theories);
  std::vector<OrbitResult> out;
  for (auto &o : enumerate_orbits(a, max_n))
    out.push_back(analyze_orbit(a, s, std::move(o), theories, with_identities));
  return out;
}

/// Sum of per-orbit tables over the orbits counted at radius n.
inline std::map<Theory, DimTable> totals_at(const std::vector<OrbitResult> &results, long n) {
  std::map<Theory, DimTable> out;
  for (const auto &r : results) {
    if (r.radius > n)
      continue;
    for (const auto &[t, table] : r.tables)
      for (const auto &[g, dim] : table)
        out[t][g] += dim;
  }
  return out;
}

struct Verdict {
  bool stabilized = false;
  std::size_t value = 0;                  // when stabilized
  std::vector<long long> differences;     // when growing
};

struct DimensionProfile {
  Theory theory;
  Grading grading;
  std::vector<std::pair<long, std::size_t>> samples; // (N, total dimension)
  Verdict verdict;
};

inline Verdict classify_growth(const std::vector<std::size_t> &values, std::size_t window) {
  if (window == 0 || values.size() < window)
    throw Error(ErrorKind::InsufficientSamples, std::to_string(values.size()) + " samples for window " +
                                                    std::to_string(window));
  Verdict v;
  const std::size_t last = values.back();
  v.stabilized = std::all_of(values.end() - static_cast<std::ptrdiff_t>(window), values.end(),
                             [&](std::size_t x) { return x == last; });
  if (v.stabilized) {
    v.value = last;
  } else {
    for (std::size_t i = 1; i < values.size(); ++i)
      v.differences.push_back(static_cast<long long>(values[i]) - static_cast<long long>(values[i - 1]));
  }
  return v;
}

inline Verdict classify_growth(const DimensionProfile &p, std::size_t window) {
  std::vector<std::size_t> values;
  for (const auto &s : p.samples)
    values.push_back(s.second);
  return classify_growth(values, window);
}

inline std::vector<DimensionProfile> aggregate(const std::vector<OrbitResult> &results, int n, long max_n,
                                               const std::vector<Theory> &theories, std::size_t window) {
  std::vector<std::map<Theory, DimTable>> per_n;
  for (long radius = 0; radius <= max_n; ++radius)
    per_n.push_back(totals_at(results, radius));
  std::vector<DimensionProfile> out;
  for (Theory t : theories)
    for (Grading g : gradings_for(t, n)) {
      DimensionProfile p{t, g, {}, {}};
      for (long radius = 0; radius <= max_n; ++radius) {
        const auto &tot = per_n[static_cast<std::size_t>(radius)];
        std::size_t v = 0;
        if (auto it = tot.find(t); it != tot.end())
          if (auto jt = it->second.find(g); jt != it->second.end())
            v = jt->second;
        p.samples.emplace_back(radius, v);
      }
      p.verdict = classify_growth(p, window);
      out.push_back(std::move(p));
    }
  return out;
}

inline std::vector<DimensionProfile> aggregate(const UnimodularMatrix &a, const Structures &s, long max_n,
                                               const std::vector<Theory> &theories, std::size_t window = 3) {
  return aggregate(survey(a, s, max_n, theories), static_cast<int>(a.n()), max_n, theories, window);
}

inline const DimensionProfile *find_profile(const std::vector<DimensionProfile> &profiles, Theory t, Grading g) {
  for (const auto &p : profiles)
    if (p.theory == t && p.grading == g)
      return &p;
  return nullptr;
}

struct OrientabilityIndicator {
  bool orientable = false;
  std::string note;
};

/// Homological orientability at truncation: top de Rham degree stabilizes at 1.
inline OrientabilityIndicator orientability_indicator(const std::vector<DimensionProfile> &profiles, int n) {
  const DimensionProfile *top = find_profile(profiles, Theory::DeRham, Grading::degree(n));
  if (!top)
    throw Error(ErrorKind::StructureMissing, "orientability needs the de Rham top-degree profile");
  OrientabilityIndicator ind;
  ind.orientable = top->verdict.stabilized && top->verdict.value == 1;
  ind.note = ind.orientable ? "top degree stabilized at 1 (evidence over the sampled truncations, not a proof)"
                            : "top degree not stabilized at 1 over the sampled truncations";
  return ind;
}

struct LefschetzLine {
  int power = 0;
  std::size_t rank = 0;
  std::size_t target = 0;
  bool epimorphism = false; // surjective on every counted orbit
};

inline std::vector<LefschetzLine> lefschetz_report(const std::vector<OrbitResult> &results, int m, long n) {
  std::vector<LefschetzLine> out;
  for (int power = 0; power <= m; ++power) {
    LefschetzLine line{power, 0, 0, true};
    for (const auto &r : results) {
      if (r.radius > n || r.lefschetz.empty())
        continue;
      const auto &l = r.lefschetz[static_cast<std::size_t>(power)];
      line.rank += l.rank;
      line.target += l.target;
      line.epimorphism = line.epimorphism && l.surjective();
    }
    out.push_back(line);
  }
  return out;
}

inline std::vector<LefschetzLine> lefschetz_report(const UnimodularMatrix &a, const SymplecticData &s, long n) {
  Structures st;
  st.symplectic = s;
  return lefschetz_report(survey(a, st, n, {}), s.m, n);
}

} // namespace folcoh
