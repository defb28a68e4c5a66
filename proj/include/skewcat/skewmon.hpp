// Right skew monoidales, their kappa presentation, the induced and enveloping
// examples, and the five-axiom checker.
#pragma once

#include "skewcat/catalog.hpp"
#include "skewcat/duality.hpp"

namespace skewcat {

// Standard presentation (M, m, u, alpha, lambda, rho).
struct SkewMonoidale {
  Obj M;
  OneCell m, u;
  TwoCell alpha;   // (1⊗m);m => (m⊗1);m
  TwoCell lambda;  // 1 => (u⊗1);m
  TwoCell rho;     // (1⊗u);m => 1
};

// Kappa presentation (M, i ⊣ i*, m, alpha, kappa, rho); the unit is i.
struct AltSkewMonoidale {
  Obj M;
  Adjunction adj;
  OneCell m;
  TwoCell alpha;
  TwoCell kappa;  // (i*⊗1) => m
  TwoCell rho;

  const OneCell& unit() const { return adj.left; }
};

struct AxiomResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string kind;
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    for (const auto& a : axioms)
      if (!a.passed) return false;
    return true;
  }
  const AxiomResult* failed() const {
    for (const auto& a : axioms)
      if (!a.passed) return &a;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Presentations.
// ---------------------------------------------------------------------------
inline SkewMonoidale to_standard(const AltSkewMonoidale& a, Model model = Model::finmat) {
  SkewMonoidale s;
  s.M = a.M;
  s.m = a.m;
  s.u = a.adj.left;
  s.alpha = a.alpha;
  s.lambda = kappa_to_lambda(a.kappa, a.adj, model);
  s.rho = a.rho;
  return s;
}

// Detect the point of a 0/1 row matrix I -> R; the unit of a skew monoidale
// must be of this shape for a kappa presentation to exist.
inline std::optional<std::size_t> point_of(const OneCell& u) {
  if (!u.src.is_unit() || u.token_len != 0) return std::nullopt;
  std::optional<std::size_t> p;
  for (std::size_t r = 0; r < u.dst.size(); ++r) {
    if (u.at(0, r).size() > 1) return std::nullopt;
    if (u.at(0, r).size() == 1) {
      if (p) return std::nullopt;
      p = r;
    }
  }
  return p;
}

inline AltSkewMonoidale to_kappa(const SkewMonoidale& s, Model model = Model::finmat) {
  auto p = point_of(s.u);
  if (!p) throw Error("to_kappa: the unit is not a point, so it has no right adjoint here");
  AltSkewMonoidale a;
  a.M = s.M;
  a.adj = point_adjunction(s.M, *p, model);
  a.m = s.m;
  a.alpha = s.alpha;
  a.kappa = lambda_to_kappa(s.lambda, a.adj, s.m, model);
  a.rho = s.rho;
  return a;
}

// ---------------------------------------------------------------------------
// Examples.
// ---------------------------------------------------------------------------

// The right skew monoidale induced by an adjunction: product i*⊗1, unit i,
// associator the identity of the common normal form, unitors pasted from eta
// and eps.
inline AltSkewMonoidale induced_skew_monoidale(const Adjunction& adj,
                                               Model model = Model::finmat) {
  const Obj& R = adj.carrier();
  auto idR = identity_cell(R);
  AltSkewMonoidale a;
  a.M = R;
  a.adj = adj;
  a.m = tensor(adj.right, idR, model);
  auto lhs = compose(tensor(idR, a.m, model), a.m, model);
  auto rhs = compose(tensor(a.m, idR, model), a.m, model);
  if (lhs != rhs) throw Error("induced_skew_monoidale: associator boundaries are not strict");
  a.alpha = identity_two(lhs);
  a.kappa = identity_two(a.m);
  // rho : (1⊗i);(i*⊗1) => 1_R, the eps-based cell
  a.rho = structural_two(compose(tensor(idR, adj.left, model), a.m, model), idR, "rho");
  return a;
}

// The enveloping monoidale R°⊗R of a biduality: product 1⊗e⊗1, unit n; the
// structure cells are identities by strictness of the snakes.
inline SkewMonoidale enveloping_monoidale(const Biduality& bid, Model model = Model::finmat) {
  SkewMonoidale s;
  s.M = bid.Rdual * bid.R;
  auto idD = identity_cell(bid.Rdual), idR = identity_cell(bid.R);
  s.m = tensor(idD, tensor(bid.e, idR, model), model);
  s.u = bid.n;
  auto idM = identity_cell(s.M);
  auto a_src = compose(tensor(idM, s.m, model), s.m, model);
  auto a_dst = compose(tensor(s.m, idM, model), s.m, model);
  if (a_src != a_dst) throw Error("enveloping_monoidale: associator is not strict");
  s.alpha = identity_two(a_src);
  auto l_dst = compose(tensor(s.u, idM, model), s.m, model);
  if (l_dst != idM) throw Error("enveloping_monoidale: left unitor is not strict");
  s.lambda = identity_two(idM);
  auto r_src = compose(tensor(idM, s.u, model), s.m, model);
  if (r_src != idM) throw Error("enveloping_monoidale: right unitor is not strict");
  s.rho = identity_two(idM);
  return s;
}

// A finite monoid as a delta-matrix monoidale: mul[a*n+b] = a·b, e the unit.
inline SkewMonoidale monoid_monoidale(std::size_t n, const std::vector<std::size_t>& mul,
                                      std::size_t e, const std::string& name = "M") {
  Obj M = Obj::atom(static_cast<uint32_t>(n), name);
  SkewMonoidale s;
  s.M = M;
  s.m = delta_cell(M * M, M, mul);
  s.u = delta_cell(Obj::unit(), M, {e});
  auto a_src = compose(tensor(identity_cell(M), s.m), s.m);
  auto a_dst = compose(tensor(s.m, identity_cell(M)), s.m);
  if (a_src != a_dst) throw Error("monoid_monoidale: multiplication table is not associative");
  s.alpha = identity_two(a_src);
  auto idM = identity_cell(M);
  if (compose(tensor(s.u, idM), s.m) != idM || compose(tensor(idM, s.u), s.m) != idM)
    throw Error("monoid_monoidale: " + std::to_string(e) + " is not a two-sided unit");
  s.lambda = identity_two(idM);
  s.rho = identity_two(idM);
  return s;
}

// ---------------------------------------------------------------------------
// Checkers.
// ---------------------------------------------------------------------------
inline Env skew_env(const AltSkewMonoidale& a, Model model = Model::finmat) {
  Env env;
  env.model = model;
  env.objs["M"] = a.M;
  env.ones["m"] = a.m;
  env.ones["i"] = a.adj.left;
  env.ones["istar"] = a.adj.right;
  env.twos["alpha"] = a.alpha;
  env.twos["kappa"] = a.kappa;
  env.twos["rho"] = a.rho;
  env.twos["eta"] = a.adj.unit;
  env.twos["eps"] = a.adj.counit;
  return env;
}

inline Report check_skew_monoidale(const AltSkewMonoidale& a, Model model = Model::finmat) {
  Env env = skew_env(a, model);
  Report rep;
  rep.kind = "skewmon";
  for (const auto& eq : catalog::skew_monoidale()) {
    AxiomResult r;
    r.name = eq.name;
    try {
      auto v = check_equation(eq, env);
      r.passed = v.holds;
      r.detail = v.detail;
    } catch (const Error& err) {
      r.passed = false;
      r.detail = err.what();
    }
    rep.axioms.push_back(std::move(r));
  }
  return rep;
}

inline bool is_monoidale(const SkewMonoidale& s) {
  return is_invertible(s.alpha) && is_invertible(s.lambda) && is_invertible(s.rho);
}

}  // namespace skewcat
