#pragma once

// Dimensions of the seven basic cohomologies on a single orbit, plus the
// finite-level inequalities and dualities relating them.

#include "error.hpp"
#include "linalg.hpp"
#include "orbit_complex.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace folcoh {

enum class Theory { DeRham, Dolbeault, BottChern, Aeppli, DLambda, DDLambda, DPlusDLambda };

inline constexpr std::array<Theory, 7> all_theories = {Theory::DeRham,  Theory::Dolbeault, Theory::BottChern,
                                                       Theory::Aeppli,  Theory::DLambda,   Theory::DDLambda,
                                                       Theory::DPlusDLambda};

inline const char *to_string(Theory t) {
  switch (t) {
  case Theory::DeRham: return "deRham";
  case Theory::Dolbeault: return "dolbeault";
  case Theory::BottChern: return "bottChern";
  case Theory::Aeppli: return "aeppli";
  case Theory::DLambda: return "dLambda";
  case Theory::DDLambda: return "ddLambda";
  case Theory::DPlusDLambda: return "dPlusDLambda";
  }
  return "?";
}

inline std::optional<Theory> parse_theory(const std::string &s) {
  for (Theory t : all_theories)
    if (s == to_string(t))
      return t;
  return std::nullopt;
}

inline bool is_bigraded(Theory t) {
  return t == Theory::Dolbeault || t == Theory::BottChern || t == Theory::Aeppli;
}

inline bool needs_complex(Theory t) { return is_bigraded(t); }

inline bool needs_symplectic(Theory t) {
  return t == Theory::DLambda || t == Theory::DDLambda || t == Theory::DPlusDLambda;
}

/// A degree k (q < 0) or a bidegree (p, q).
struct Grading {
  int p = 0;
  int q = -1;

  static Grading degree(int k) { return {k, -1}; }
  static Grading bidegree(int p, int q) { return {p, q}; }

  bool bigraded() const { return q >= 0; }
  int total() const { return bigraded() ? p + q : p; }

  std::string str() const {
    return bigraded() ? "(" + std::to_string(p) + "," + std::to_string(q) + ")" : std::to_string(p);
  }

  auto operator<=>(const Grading &) const = default;
};

/// The gradings a theory is reported on, in output order.
inline std::vector<Grading> gradings_for(Theory t, int n) {
  std::vector<Grading> out;
  if (is_bigraded(t)) {
    for (int p = 0; p <= n / 2; ++p)
      for (int q = 0; q <= n / 2; ++q)
        out.push_back(Grading::bidegree(p, q));
  } else {
    for (int k = 0; k <= n; ++k)
      out.push_back(Grading::degree(k));
  }
  return out;
}

using DimTable = std::map<Grading, std::size_t>;

struct OrbitCohomology {
  LatticeVector orbit;
  Theory theory;
  Grading grading;
  std::size_t dimension;
};

inline std::vector<std::size_t> de_rham_dims(const OrbitModel &x) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= x.n(); ++k)
    out.push_back(quotient_dim(kernel_basis(x.d(k)), image_basis(x.d(k - 1))));
  return out;
}

inline std::vector<std::size_t> de_rham_dims(const UnimodularMatrix &a, const LatticeOrbit &o) {
  return de_rham_dims(OrbitModel(a, o));
}

using Bidims = std::vector<std::vector<std::size_t>>; // [p][q]

inline Bidims dolbeault_dims(const OrbitModel &x) {
  const int m = x.half();
  Bidims out(static_cast<std::size_t>(m + 1), std::vector<std::size_t>(static_cast<std::size_t>(m + 1)));
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q)
      out[p][q] = quotient_dim(kernel_basis(x.delbar(p, q)), image_basis(x.delbar(p, q - 1)));
  return out;
}

inline Bidims bott_chern_dims(const OrbitModel &x) {
  const int m = x.half();
  Bidims out(static_cast<std::size_t>(m + 1), std::vector<std::size_t>(static_cast<std::size_t>(m + 1)));
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      auto closed = subspace_intersect(kernel_basis(x.del(p, q)), kernel_basis(x.delbar(p, q)));
      Matrix ddbar = x.del(p - 1, q) * x.delbar(p - 1, q - 1);
      out[p][q] = quotient_dim(closed, image_basis(ddbar));
    }
  return out;
}

inline Bidims aeppli_dims(const OrbitModel &x) {
  const int m = x.half();
  Bidims out(static_cast<std::size_t>(m + 1), std::vector<std::size_t>(static_cast<std::size_t>(m + 1)));
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q <= m; ++q) {
      auto num = kernel_basis(x.del(p, q + 1) * x.delbar(p, q));
      auto den = subspace_sum(image_basis(x.del(p - 1, q)), image_basis(x.delbar(p, q - 1)));
      out[p][q] = quotient_dim(num, den);
    }
  return out;
}

inline std::vector<std::size_t> d_lambda_dims(const OrbitModel &x) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= x.n(); ++k)
    out.push_back(quotient_dim(kernel_basis(x.d_lambda(k)), image_basis(x.d_lambda(k + 1))));
  return out;
}

/// dd^Lambda on degree k: d^Lambda down to k-1, then d back up.
inline Matrix dd_lambda(const OrbitModel &x, int k) { return x.d(k - 1) * x.d_lambda(k); }

inline std::vector<std::size_t> dd_lambda_dims(const OrbitModel &x) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= x.n(); ++k) {
    auto num = kernel_basis(dd_lambda(x, k));
    auto den = subspace_sum(image_basis(x.d(k - 1)), image_basis(x.d_lambda(k + 1)));
    out.push_back(quotient_dim(num, den));
  }
  return out;
}

/// (d + d^Lambda) vanishes on a pure-degree form iff both components do.
inline std::vector<std::size_t> d_plus_dlambda_dims(const OrbitModel &x) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= x.n(); ++k) {
    auto num = subspace_intersect(kernel_basis(x.d(k)), kernel_basis(x.d_lambda(k)));
    out.push_back(quotient_dim(num, image_basis(dd_lambda(x, k))));
  }
  return out;
}

inline DimTable from_degrees(const std::vector<std::size_t> &v) {
  DimTable t;
  for (std::size_t k = 0; k < v.size(); ++k)
    t[Grading::degree(static_cast<int>(k))] = v[k];
  return t;
}

inline DimTable from_bidegrees(const Bidims &b) {
  DimTable t;
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = 0; q < b[p].size(); ++q)
      t[Grading::bidegree(static_cast<int>(p), static_cast<int>(q))] = b[p][q];
  return t;
}

inline DimTable compute_theory(const OrbitModel &x, Theory t) {
  if (needs_complex(t) && !x.has_complex())
    throw Error(ErrorKind::StructureMissing, std::string(to_string(t)) + " needs a complex structure");
  if (needs_symplectic(t) && !x.has_symplectic())
    throw Error(ErrorKind::StructureMissing, std::string(to_string(t)) + " needs a symplectic structure");
  switch (t) {
  case Theory::DeRham: return from_degrees(de_rham_dims(x));
  case Theory::Dolbeault: return from_bidegrees(dolbeault_dims(x));
  case Theory::BottChern: return from_bidegrees(bott_chern_dims(x));
  case Theory::Aeppli: return from_bidegrees(aeppli_dims(x));
  case Theory::DLambda: return from_degrees(d_lambda_dims(x));
  case Theory::DDLambda: return from_degrees(dd_lambda_dims(x));
  case Theory::DPlusDLambda: return from_degrees(d_plus_dlambda_dims(x));
  }
  return {};
}

// --- inequalities ----------------------------------------------------------

struct Inequality {
  std::string name;
  std::string location;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs <= rhs; }
};

/// Finite-level forms of the exact-in-the-middle argument and the Frölicher
/// bound, evaluated on already computed tables (one orbit or an aggregate).
inline std::vector<Inequality> inequalities(const std::map<Theory, DimTable> &tables, int n) {
  std::vector<Inequality> out;
  auto has = [&](Theory t) { return tables.count(t) > 0; };
  auto get = [&](Theory t, Grading g) { return tables.at(t).at(g); };
  if (has(Theory::Dolbeault) && has(Theory::BottChern) && has(Theory::Aeppli))
    for (Grading g : gradings_for(Theory::Dolbeault, n))
      out.push_back({"dolbeault<=bottChern+aeppli", g.str(), get(Theory::Dolbeault, g),
                     get(Theory::BottChern, g) + get(Theory::Aeppli, g)});
  if (has(Theory::DeRham) && has(Theory::DPlusDLambda) && has(Theory::DDLambda))
    for (Grading g : gradings_for(Theory::DeRham, n))
      out.push_back({"deRham<=dPlusDLambda+ddLambda", g.str(), get(Theory::DeRham, g),
                     get(Theory::DPlusDLambda, g) + get(Theory::DDLambda, g)});
  if (has(Theory::DeRham) && has(Theory::Dolbeault))
    for (int k = 0; k <= n; ++k) {
      std::size_t sum = 0;
      for (int p = 0; p <= n / 2; ++p) {
        int q = k - p;
        if (q >= 0 && q <= n / 2)
          sum += get(Theory::Dolbeault, Grading::bidegree(p, q));
      }
      out.push_back({"frolicher", std::to_string(k), get(Theory::DeRham, Grading::degree(k)), sum});
    }
  return out;
}

inline std::map<Theory, DimTable> compute_available(const OrbitModel &x) {
  std::map<Theory, DimTable> t;
  for (Theory th : all_theories)
    if ((!needs_complex(th) || x.has_complex()) && (!needs_symplectic(th) || x.has_symplectic()))
      t[th] = compute_theory(x, th);
  return t;
}

inline std::vector<Inequality> inequality_check(const OrbitModel &x) {
  return inequalities(compute_available(x), x.n());
}

// --- dualities -------------------------------------------------------------

struct DualityFinding {
  std::string pair;
  Grading left;
  Grading right;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  bool expected_to_hold = false; // symplectic Poincare dualities hold; the metric-dependent ones need not
  bool equal() const { return left_dim == right_dim; }
};

inline std::vector<DualityFinding> duality_report(const std::map<Theory, DimTable> &tables, int n) {
  std::vector<DualityFinding> out;
  auto degree_pairs = [&](Theory t, const char *name) {
    if (!tables.count(t))
      return;
    for (int k = 0; k <= n; ++k)
      out.push_back({name, Grading::degree(k), Grading::degree(n - k), tables.at(t).at(Grading::degree(k)),
                     tables.at(t).at(Grading::degree(n - k)), true});
  };
  degree_pairs(Theory::DDLambda, "poincare:ddLambda");
  degree_pairs(Theory::DPlusDLambda, "poincare:dPlusDLambda");

  const int m = n / 2;
  auto bigraded_pairs = [&](Theory left, Theory right, const char *name) {
    if (!tables.count(left) || !tables.count(right))
      return;
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        Grading g = Grading::bidegree(p, q), h = Grading::bidegree(m - p, m - q);
        out.push_back({name, g, h, tables.at(left).at(g), tables.at(right).at(h), false});
      }
  };
  bigraded_pairs(Theory::BottChern, Theory::Aeppli, "bottChern<->aeppli");
  bigraded_pairs(Theory::Dolbeault, Theory::Dolbeault, "serre:dolbeault");
  return out;
}

} // namespace folcoh
