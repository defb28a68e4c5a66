// Shared test fixtures: small concrete structures used across the suites.
#pragma once

#include <random>

#include "skewcat/oplax.hpp"

namespace skewcat::testing {

inline AltSkewMonoidale xor_monoidale() {
  return to_kappa(monoid_monoidale(2, {0, 1, 1, 0}, 0, "Z2"));
}

// All monoid tables on {0..n-1} together with their unit element.
inline std::vector<std::pair<std::vector<std::size_t>, std::size_t>> all_monoids(std::size_t n) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
  std::vector<std::size_t> mul(n * n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& v : mul) {
      v = c % n;
      c /= n;
    }
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t d = 0; d < n && assoc; ++d)
          if (mul[mul[a * n + b] * n + d] != mul[a * n + mul[b * n + d]]) assoc = false;
    if (!assoc) continue;
    for (std::size_t e = 0; e < n; ++e) {
      bool unital = true;
      for (std::size_t a = 0; a < n && unital; ++a)
        if (mul[e * n + a] != a || mul[a * n + e] != a) unital = false;
      if (unital) out.push_back({mul, e});
    }
  }
  return out;
}

// Data-bearing skew monoidales on the one-point carrier: the product cell has
// a single entry of cardinality k, the unit is the delta point, and the
// structure cells are searched exhaustively against the axiom checker.  These
// give suite members whose 2-cells are honest functions rather than unique
// structural maps.
inline std::vector<AltSkewMonoidale> point_data_monoidales(uint32_t k = 2,
                                                           std::size_t limit = 4) {
  std::vector<AltSkewMonoidale> out;
  Obj X = Obj::atom(1, "P");
  auto adj = point_adjunction(X, 0);
  auto m = make_generator("mP", X * X, X, {k});
  auto idX = identity_cell(X);
  auto asrc = compose(tensor(idX, m), m);
  auto adst = compose(tensor(m, idX), m);
  auto ksrc = tensor(adj.right, idX);
  auto rsrc = compose(tensor(idX, adj.left), m);
  const std::size_t apos = asrc.entries[0].size();  // = k*k
  std::vector<uint32_t> amap(apos, 0u);
  // enumerate alpha maps (k*k)^(k*k) together with kappa in 0..k-1
  std::size_t total = 1;
  for (std::size_t i = 0; i < apos; ++i) total *= apos;
  for (std::size_t code = 0; code < total && out.size() < limit; ++code) {
    std::size_t c = code;
    for (auto& v : amap) {
      v = static_cast<uint32_t>(c % apos);
      c /= apos;
    }
    for (uint32_t kv = 0; kv < k && out.size() < limit; ++kv) {
      AltSkewMonoidale sm;
      sm.M = X;
      sm.adj = adj;
      sm.m = m;
      sm.alpha = TwoCell{asrc, adst, {amap}};
      sm.kappa = TwoCell{ksrc, m, {{kv}}};
      sm.rho = structural_two(rsrc, idX);
      if (check_skew_monoidale(sm).all_passed()) out.push_back(sm);
    }
  }
  return out;
}

}  // namespace skewcat::testing
