#pragma once

// Operator identities that must hold on every orbit complex.

#include "engines.hpp"
#include "orbit_complex.hpp"

#include <string>
#include <vector>

namespace folcoh {

struct IdentityFailure {
  std::string name;
  std::string location;
};

inline std::vector<std::string> identity_names(bool symplectic, bool complex) {
  std::vector<std::string> out = {"d^2=0"};
  if (complex)
    out.insert(out.end(), {"del^2=0", "delbar^2=0", "del*delbar+delbar*del=0"});
  if (symplectic)
    out.insert(out.end(), {"dLambda^2=0", "d*dLambda+dLambda*d=0", "star^2=id"});
  return out;
}

/// Every identity that fails on this orbit; empty when all hold.
inline std::vector<IdentityFailure> identity_failures(const OrbitModel &x) {
  std::vector<IdentityFailure> out;
  auto expect = [&](bool ok, const char *name, const std::string &where) {
    if (!ok)
      out.push_back({name, where});
  };
  const int n = x.n();
  for (int k = 0; k <= n; ++k)
    expect((x.d(k + 1) * x.d(k)).is_zero(), "d^2=0", std::to_string(k));
  if (x.has_complex()) {
    const int m = x.half();
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        const std::string at = Grading::bidegree(p, q).str();
        expect((x.del(p + 1, q) * x.del(p, q)).is_zero(), "del^2=0", at);
        expect((x.delbar(p, q + 1) * x.delbar(p, q)).is_zero(), "delbar^2=0", at);
        expect((x.del(p, q + 1) * x.delbar(p, q) + x.delbar(p + 1, q) * x.del(p, q)).is_zero(),
               "del*delbar+delbar*del=0", at);
      }
  }
  if (x.has_symplectic()) {
    for (int k = 0; k <= n; ++k) {
      const std::string at = std::to_string(k);
      expect((x.d_lambda(k - 1) * x.d_lambda(k)).is_zero(), "dLambda^2=0", at);
      expect((x.d(k - 1) * x.d_lambda(k) + x.d_lambda(k + 1) * x.d(k)).is_zero(), "d*dLambda+dLambda*d=0", at);
      expect(x.star(n - k) * x.star(k) == Matrix::identity(x.dim(k)), "star^2=id", at);
    }
  }
  return out;
}

} // namespace folcoh
