// Oplax actions over a right skew monoidale, their cells, the canonical
// constructions (regular, self, underlying), and monads of oplax actions as
// raw data.
#pragma once

#include "skewcat/skewmon.hpp"

namespace skewcat {

// An oplax action of the base monoidale on A.  The base is carried in
// standard presentation (the lambda leg is what the axioms consume); when the
// base unit is a point the adjunction rides along for the constructions that
// need it.
struct OplaxAction {
  Obj A;
  SkewMonoidale base;
  std::optional<Adjunction> base_adj;
  OneCell a;   // A⊗M -> A
  TwoCell a2;  // (1⊗m);a => (a⊗1);a
  TwoCell a0;  // (1⊗u);a => 1_A
};

struct ActionCell {
  OplaxAction src, dst;  // same carrier, same base
  TwoCell phi;           // a => a'
};

// A monad of oplax actions: a 0-simplex (R, i ⊣ i*), a 1-simplex r over the
// induced base, and the two 2-simplex fillings mu0, mu2.
struct MonadOfOplaxActions {
  Adjunction adj;
  OplaxAction r;  // over induced_skew_monoidale(adj); carries r2 = r.a2, r0 = r.a0
  TwoCell mu2;    // (1⊗r);r => (r⊗1);r
  TwoCell mu0;    // (1⊗i*⊗1);(i*⊗1) => (i*⊗1⊗1);r
};

// ---------------------------------------------------------------------------
// Checkers.
// ---------------------------------------------------------------------------
inline Env action_env(const OplaxAction& act, Model model = Model::finmat) {
  Env env;
  env.model = model;
  env.objs["A"] = act.A;
  env.objs["M"] = act.base.M;
  env.ones["a"] = act.a;
  env.ones["m"] = act.base.m;
  env.ones["u"] = act.base.u;
  env.twos["a2"] = act.a2;
  env.twos["a0"] = act.a0;
  env.twos["alpha"] = act.base.alpha;
  env.twos["lambda"] = act.base.lambda;
  env.twos["rho"] = act.base.rho;
  return env;
}

inline Report check_oplax_action(const OplaxAction& act, Model model = Model::finmat) {
  Env env = action_env(act, model);
  Report rep;
  rep.kind = "oplax";
  for (const auto& eq : catalog::oplax_action()) {
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

inline Report check_action_cell(const ActionCell& c, Model model = Model::finmat) {
  Env env = action_env(c.src, model);
  env.ones["ap"] = c.dst.a;
  env.twos["a2p"] = c.dst.a2;
  env.twos["a0p"] = c.dst.a0;
  env.twos["phi"] = c.phi;
  Report rep;
  rep.kind = "action-cell";
  for (const auto& eq : catalog::action_cell()) {
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

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

// The regular oplax R-action on R of the induced skew monoidale: a = i*⊗1
// with identity associator and the eps-based unitor.
inline OplaxAction regular_action(const Adjunction& adj, Model model = Model::finmat) {
  auto ind = induced_skew_monoidale(adj, model);
  OplaxAction act;
  act.A = adj.carrier();
  act.base = to_standard(ind, model);
  act.base_adj = adj;
  act.a = ind.m;
  auto src = compose(tensor(identity_cell(act.A), ind.m, model), ind.m, model);
  act.a2 = identity_two(src);
  act.a0 = ind.rho;
  return act;
}

// The action of a skew monoidale on itself: a = m, a2 = alpha, a0 = rho.
inline OplaxAction self_action(const SkewMonoidale& sm, Model model = Model::finmat) {
  OplaxAction act;
  act.A = sm.M;
  act.base = sm;
  if (auto p = point_of(sm.u)) act.base_adj = point_adjunction(sm.M, *p, model);
  act.a = sm.m;
  act.a2 = sm.alpha;
  act.a0 = sm.rho;
  return act;
}

// The underlying action of a skew monoidale whose unit has a right adjoint:
// a = m over the induced base, with a2 = alpha after 1⊗kappa and a0 = rho.
inline OplaxAction underlying_action(const AltSkewMonoidale& sm, Model model = Model::finmat) {
  OplaxAction act;
  act.A = sm.M;
  auto ind = induced_skew_monoidale(sm.adj, model);
  act.base = to_standard(ind, model);
  act.base_adj = sm.adj;
  act.a = sm.m;
  auto idM = identity_cell(sm.M);
  auto pre = whisker_right(tensor_two(identity_two(idM), sm.kappa, model), sm.m, model);
  act.a2 = vcomp(pre, sm.alpha);
  act.a0 = sm.rho;
  return act;
}

}  // namespace skewcat
