// The axiom catalog: each labeled axiom is encoded once as a pair of 2-cell
// expressions over conventional generator names.  Checkers instantiate an
// equation by binding those names to concrete cells.
//
// Orientation conventions (fixed artifact-wide):
//   alpha : (1⊗m);m ⇒ (m⊗1);m          lambda : 1 ⇒ (u⊗1);m
//   rho   : (1⊗u);m ⇒ 1                kappa  : (i*⊗1) ⇒ m
//   a2    : (1⊗m);a ⇒ (a⊗1);a          a0     : (1⊗u);a ⇒ 1
//   C2    : m;C ⇒ (C⊗C);m'             C0     : u;C ⇒ u'
//   2-simplex cell : (1⊗s);t ⇒ (t⊗1);v
//   eta   : 1_I ⇒ i;i*                 eps    : i*;i ⇒ 1
#pragma once

#include "skewcat/expr.hpp"

namespace skewcat {
namespace catalog {

// --------------------------------------------------------------------------
// Right skew monoidale axioms in kappa presentation, over the object "M" with
// generators m, i, istar, alpha, kappa, rho, eta, eps.
// --------------------------------------------------------------------------
inline Equation skm1() {
  ObjExpr M = ow("M");
  auto m = g1("m"), im = id1(M);
  auto a = g2("alpha");
  // (1⊗1⊗m);(1⊗m);m ⇒ (m⊗1⊗1);(m⊗1);m
  auto lhs = vc({
      whr(t2({id2(im), a}), m),               // 1⊗alpha, then ;m
      whl(ten({im, m, im}), a),               // (1⊗m⊗1) ⋆ alpha
      whr(t2({a, id2(im)}), m),               // alpha⊗1, then ;m
  });
  auto rhs = vc({
      whl(ten({im, im, m}), a),
      whr(iso(seq({ten({im, im, m}), ten({m, im})}), seq({ten({m, im, im}), ten({im, m})})), m),
      whl(ten({m, im, im}), a),
  });
  return {"SKM1", lhs, rhs};
}

inline Equation skm2p() {
  ObjExpr M = ow("M");
  auto m = g1("m"), i = g1("i"), im = id1(M);
  // [1⊗eta⊗1 ⋆ m] then [(1⊗i⊗1) ⋆ 1⊗kappa ⋆ m] then [(1⊗i⊗1) ⋆ alpha] then [rho⊗1 ⋆ m]  =  1_m
  auto lhs = vc({
      whr(t2({id2(im), g2("eta"), id2(im)}), m),
      wh(ten({im, i, im}), t2({id2(im), g2("kappa")}), g1("m")),
      whl(ten({im, i, im}), g2("alpha")),
      whr(t2({g2("rho"), id2(im)}), m),
  });
  return {"SKM2'", lhs, id2(g1("m"))};
}

inline Equation skm3p() {
  ObjExpr M = ow("M");
  auto m = g1("m"), istar = g1("istar"), im = id1(M);
  auto lhs = vc({
      iso(seq({ten({im, m}), ten({istar, im})}), seq({ten({istar, im, im}), m})),
      whr(t2({g2("kappa"), id2(im)}), m),
  });
  auto rhs = vc({
      whl(ten({im, m}), g2("kappa")),
      g2("alpha"),
  });
  return {"SKM3'", lhs, rhs};
}

inline Equation skm4() {
  ObjExpr M = ow("M");
  auto m = g1("m"), i = g1("i"), im = id1(M);
  auto lhs = whr(t2({id2(im), g2("rho")}), m);
  auto rhs = vc({
      whl(ten({im, im, i}), g2("alpha")),
      whr(iso(seq({ten({im, im, i}), ten({m, im})}), seq({m, ten({im, i})})), m),
      whl(m, g2("rho")),
  });
  return {"SKM4", lhs, rhs};
}

inline Equation skm5p() {
  ObjExpr M = ow("M");
  auto i = g1("i"), istar = g1("istar"), im = id1(M);
  auto lhs = vc({whl(ten({im, i}), g2("kappa")), g2("rho")});
  auto rhs = vc({
      iso(seq({ten({im, i}), ten({istar, im})}), seq({istar, i})),
      g2("eps"),
  });
  return {"SKM5'", lhs, rhs};
}

inline std::vector<Equation> skew_monoidale() {
  return {skm1(), skm2p(), skm3p(), skm4(), skm5p()};
}

// --------------------------------------------------------------------------
// Oplax action axioms over a base skew monoidale: carrier object "A", base
// object "M"; generators a, a2, a0, and base m, u, alpha, lambda, rho.
// --------------------------------------------------------------------------
inline Equation ola1() {
  ObjExpr A = ow("A"), M = ow("M");
  auto a = g1("a"), m = g1("m"), iA = id1(A), iM = id1(M);
  auto lhs = vc({
      whl(ten({iA, iM, m}), g2("a2")),
      whr(iso(seq({ten({iA, iM, m}), ten({a, iM})}), seq({ten({a, iM, iM}), ten({iA, m})})), a),
      whl(ten({a, iM, iM}), g2("a2")),
  });
  auto rhs = vc({
      whr(t2({id2(iA), g2("alpha")}), a),
      whl(ten({iA, m, iM}), g2("a2")),
      whr(t2({g2("a2"), id2(iM)}), a),
  });
  return {"OLA1", lhs, rhs};
}

inline Equation ola2() {
  ObjExpr A = ow("A"), M = ow("M");
  auto a = g1("a"), u = g1("u"), iA = id1(A), iM = id1(M);
  auto lhs = whr(t2({id2(iA), g2("rho")}), a);
  auto rhs = vc({
      whl(ten({iA, iM, u}), g2("a2")),
      whr(iso(seq({ten({iA, iM, u}), ten({a, iM})}), seq({a, ten({iA, u})})), a),
      whl(a, g2("a0")),
  });
  return {"OLA2", lhs, rhs};
}

inline Equation ola3() {
  ObjExpr A = ow("A"), M = ow("M");
  auto a = g1("a"), iA = id1(A), iM = id1(M);
  auto lhs = vc({
      whr(t2({id2(iA), g2("lambda")}), a),
      whl(ten({iA, g1("u"), iM}), g2("a2")),
      whr(t2({g2("a0"), id2(iM)}), a),
  });
  return {"OLA3", lhs, id2(g1("a"))};
}

// Cells of oplax actions phi: a ⇒ a'.
inline Equation ola4() {
  ObjExpr A = ow("A"), M = ow("M");
  auto iA = id1(A), iM = id1(M);
  auto lhs = vc({
      g2("a2"),
      whl(ten({g1("a"), iM}), g2("phi")),
      whr(t2({g2("phi"), id2(iM)}), g1("ap")),
  });
  auto rhs = vc({
      whl(ten({iA, g1("m")}), g2("phi")),
      g2("a2p"),
  });
  return {"OLA4", lhs, rhs};
}

inline Equation ola5() {
  ObjExpr A = ow("A");
  auto lhs = g2("a0");
  auto rhs = vc({whl(ten({id1(A), g1("u")}), g2("phi")), g2("a0p")});
  return {"OLA5", lhs, rhs};
}

inline std::vector<Equation> oplax_action() { return {ola1(), ola2(), ola3()}; }
inline std::vector<Equation> action_cell() { return {ola4(), ola5()}; }

// --------------------------------------------------------------------------
// Simplex axioms for oplax actions, parameterized by carrier/base words so
// the same shapes serve both the plain 2-simplices (bases induced by point
// adjunctions) and the enveloping A(R;S;T) versions.
//
// Column data: a column X has a base word BX that factors as BXl ⊗ CX where
// CX is the carrier acted on; the filling 1-cells are
//   s : CS⊗BR → CS,  t : CT⊗BS → CT,  v : CT⊗BR → CT
// with base structure mS : BS⊗BS → BS, mR, uR : I → BR.
// --------------------------------------------------------------------------
struct TriangleShape {
  ObjExpr CT, BS, BSl, CS, BR;
  std::string s = "s", t = "t", v = "v", alpha = "alpha";
  std::string mS = "mS", mR = "mR", uR = "uR";
  std::string s2 = "s2", s0 = "s0", t2 = "t2", v2 = "v2", v0 = "v0";
  std::string label_prefix = "2SIM";
};

inline TriangleShape plain_triangle() {
  TriangleShape sh;
  sh.CT = ow("T");
  sh.BS = ow("S");
  sh.BSl = oI();
  sh.CS = ow("S");
  sh.BR = ow("R");
  return sh;
}

inline Equation sim2_1(const TriangleShape& sh) {
  auto s = g1(sh.s), t = g1(sh.t), v = g1(sh.v), mS = g1(sh.mS);
  auto iT = id1(sh.CT), iBS = id1(sh.BS), iBSl = id1(sh.BSl), iBR = id1(sh.BR);
  auto alpha = g2(sh.alpha), tt = g2(sh.t2);
  // source: (1_T⊗1_BS⊗1_BSl⊗s);(1_T⊗mS);t
  auto lhs = vc({
      whr(iso(seq({ten({iT, iBS, iBSl, s}), ten({iT, mS})}),
              seq({ten({iT, mS, iBR}), ten({iT, iBSl, s})})),
          t),
      whl(ten({iT, mS, iBR}), alpha),
      whr(t2({tt, id2(iBR)}), v),
  });
  auto rhs = vc({
      whl(ten({iT, iBS, iBSl, s}), tt),
      whr(iso(seq({ten({iT, iBS, iBSl, s}), ten({t, iBS})}),
              seq({ten({t, iBSl, id1(sh.CS), iBR}), ten({iT, iBSl, s})})),
          t),
      whl(ten({t, iBSl, id1(sh.CS), iBR}), alpha),
  });
  return {sh.label_prefix + "1", lhs, rhs};
}

inline Equation sim2_2(const TriangleShape& sh) {
  auto s = g1(sh.s), t = g1(sh.t), v = g1(sh.v), mR = g1(sh.mR);
  auto iT = id1(sh.CT), iBS = id1(sh.BS), iBSl = id1(sh.BSl), iBR = id1(sh.BR);
  auto alpha = g2(sh.alpha);
  // source: (1_T⊗1_BS⊗mR);(1_T⊗1_BSl⊗s);t
  auto lhs = vc({
      whr(t2({id2(iT), id2(iBSl), g2(sh.s2)}), t),
      whl(ten({iT, iBSl, s, iBR}), alpha),
      whr(t2({alpha, id2(iBR)}), v),
  });
  auto rhs = vc({
      whl(ten({iT, iBS, mR}), alpha),
      whr(iso(seq({ten({iT, iBS, mR}), ten({t, iBR})}), seq({ten({t, iBR, iBR}), ten({iT, mR})})),
          v),
      whl(ten({t, iBR, iBR}), g2(sh.v2)),
  });
  return {sh.label_prefix + "2", lhs, rhs};
}

inline Equation sim2_3(const TriangleShape& sh) {
  auto s = g1(sh.s), t = g1(sh.t), v = g1(sh.v), uR = g1(sh.uR);
  auto iT = id1(sh.CT), iBS = id1(sh.BS), iBSl = id1(sh.BSl);
  auto alpha = g2(sh.alpha);
  // source: (1_T⊗1_BS⊗uR);(1_T⊗1_BSl⊗s);t ⇒ t
  auto lhs = whr(t2({id2(iT), id2(iBSl), g2(sh.s0)}), t);
  auto rhs = vc({
      whl(ten({iT, iBS, uR}), alpha),
      whr(iso(seq({ten({iT, iBS, uR}), ten({t, id1(sh.BR)})}), seq({t, ten({iT, uR})})), v),
      whl(t, g2(sh.v0)),
  });
  return {sh.label_prefix + "3", lhs, rhs};
}

// Arrow condition for triples (sigma, tau, nu) between fillings alpha, alpha'.
inline Equation sim2_4(const TriangleShape& sh) {
  auto iT = id1(sh.CT), iBSl = id1(sh.BSl), iBR = id1(sh.BR);
  auto lhs = vc({
      whr(t2({id2(iT), id2(iBSl), g2("sigma")}), g1(sh.t)),
      whl(ten({iT, iBSl, g1(sh.s + "p")}), g2("tau")),
      g2(sh.alpha + "p"),
  });
  auto rhs = vc({
      g2(sh.alpha),
      whr(t2({g2("tau"), id2(iBR)}), g1(sh.v)),
      whl(ten({g1(sh.t + "p"), iBR}), g2("nu")),
  });
  return {sh.label_prefix + "4", lhs, rhs};
}

// Tetrahedra: columns R, S, T, U with fillings
//   alpha: (s,t,v)   beta: (s,x,w)   gamma: (v,q,w)   zeta: (t,q,x)
// where s: CS⊗BR→CS, t: CT⊗BS→CT, v: CT⊗BR→CT, w: CU⊗BR→CU, x: CU⊗BS→CU,
// q: CU⊗BT→CU.
struct TetraShape {
  ObjExpr CU, BT, BTl, CT, BS, BSl, CS, BR;
  std::string s = "s", t = "t", v = "v", w = "w", x = "x", q = "q";
  std::string alpha = "alpha", beta = "beta", gamma = "gamma", zeta = "zeta";
  std::string label = "3SIM";
};

inline TetraShape plain_tetra() {
  TetraShape sh;
  sh.CU = ow("U");
  sh.BT = ow("T");
  sh.BTl = oI();
  sh.CT = ow("T");
  sh.BS = ow("S");
  sh.BSl = oI();
  sh.CS = ow("S");
  sh.BR = ow("R");
  return sh;
}

inline Equation sim3(const TetraShape& sh) {
  auto s = g1(sh.s), t = g1(sh.t), x = g1(sh.x), q = g1(sh.q);
  auto iU = id1(sh.CU), iBT = id1(sh.BT), iBTl = id1(sh.BTl);
  auto iBS = id1(sh.BS), iBSl = id1(sh.BSl), iCS = id1(sh.CS), iBR = id1(sh.BR);
  // source: (1_U⊗1_BT⊗1_BSl⊗s);(1_U⊗1_BTl⊗t);q
  auto lhs = vc({
      whr(t2({id2(iU), id2(iBTl), g2(sh.alpha)}), q),
      whl(ten({iU, iBTl, t, iBR}), g2(sh.gamma)),
      whr(t2({g2(sh.zeta), id2(iBR)}), g1(sh.w)),
  });
  auto rhs = vc({
      whl(ten({iU, iBT, iBSl, s}), g2(sh.zeta)),
      whr(iso(seq({ten({iU, iBT, iBSl, s}), ten({q, iBS})}),
              seq({ten({q, iBS, iBR}), ten({iU, iBSl, s})})),
          x),
      whl(ten({q, iBS, iBR}), g2(sh.beta)),
  });
  return {sh.label, lhs, rhs};
}

// --------------------------------------------------------------------------
// Opmonoidal arrows C: M → N between skew monoidales in standard
// presentation.  Generators: mM, uM, alphaM, lambdaM, rhoM (and N versions),
// C, C2, C0; cells xi: C ⇒ C' with C2p/C0p for the primed arrow.
// --------------------------------------------------------------------------
inline Equation om1() {
  ObjExpr M = ow("M"), N = ow("N");
  auto C = g1("C"), mM = g1("mM"), mN = g1("mN"), iM = id1(M), iN = id1(N);
  auto lhs = vc({
      whr(g2("alphaM"), C),
      whl(ten({mM, iM}), g2("C2")),
      whr(iso(seq({ten({mM, iM}), ten({C, C})}), seq({ten({iM, iM, C}), ten({seq({mM, C}), iN})})),
          mN),
      wh(ten({iM, iM, C}), t2({g2("C2"), id2(iN)}), g1("mN")),
      whr(iso(seq({ten({iM, iM, C}), ten({seq({ten({C, C}), mN}), iN})}),
              seq({ten({C, C, C}), ten({mN, iN})})),
          mN),
  });
  auto rhs = vc({
      whl(ten({iM, mM}), g2("C2")),
      whr(iso(seq({ten({iM, mM}), ten({C, C})}), seq({ten({C, iM, iM}), ten({iN, seq({mM, C})})})),
          mN),
      wh(ten({C, iM, iM}), t2({id2(iN), g2("C2")}), g1("mN")),
      whr(iso(seq({ten({C, iM, iM}), ten({iN, seq({ten({C, C}), mN})})}),
              seq({ten({C, C, C}), ten({iN, mN})})),
          mN),
      whl(ten({C, C, C}), g2("alphaN")),
  });
  return {"OM1", lhs, rhs};
}

inline Equation om2() {
  ObjExpr M = ow("M"), N = ow("N");
  auto C = g1("C"), uM = g1("uM"), iM = id1(M), iN = id1(N);
  auto lhs = vc({
      whr(g2("lambdaM"), C),
      whl(ten({uM, iM}), g2("C2")),
      whr(iso(seq({ten({uM, iM}), ten({C, C})}), seq({C, ten({seq({uM, C}), iN})})), g1("mN")),
      wh(C, t2({g2("C0"), id2(iN)}), g1("mN")),
  });
  auto rhs = whl(C, g2("lambdaN"));
  return {"OM2", lhs, rhs};
}

inline Equation om3() {
  ObjExpr M = ow("M"), N = ow("N");
  auto C = g1("C"), uM = g1("uM"), iM = id1(M), iN = id1(N);
  auto lhs = whr(g2("rhoM"), C);
  auto rhs = vc({
      whl(ten({iM, uM}), g2("C2")),
      whr(iso(seq({ten({iM, uM}), ten({C, C})}), seq({C, ten({iN, seq({uM, C})})})), g1("mN")),
      wh(C, t2({id2(iN), g2("C0")}), g1("mN")),
      whl(C, g2("rhoN")),
  });
  return {"OM3", lhs, rhs};
}

inline Equation om4() {
  auto lhs = vc({g2("C2"), whr(t2({g2("xi"), g2("xi")}), g1("mN"))});
  auto rhs = vc({whl(g1("mM"), g2("xi")), g2("C2p")});
  return {"OM4", lhs, rhs};
}

inline Equation om5() {
  auto lhs = g2("C0");
  auto rhs = vc({whl(g1("uM"), g2("xi")), g2("C0p")});
  return {"OM5", lhs, rhs};
}

// Triangle cells between opmonoidal arrows: cells (sigmaB, tauB, nuB) between
// fillings alphaB: sB;tB ⇒ vB and alphaBp.
inline Equation om6() {
  auto lhs = vc({
      whl(g1("sB"), g2("tauB")),
      whr(g2("sigmaB"), g1("tBp")),
      g2("alphaBp"),
  });
  auto rhs = vc({g2("alphaB"), g2("nuB")});
  return {"OM6", lhs, rhs};
}

// Tetrahedron condition for opmonoidal 2-simplices (written on composites).
inline Equation om7() {
  auto lhs = vc({whr(g2("alphaB"), g1("qB")), g2("gammaB")});
  auto rhs = vc({whl(g1("sB"), g2("zetaB")), g2("betaB")});
  return {"OM7", lhs, rhs};
}

inline std::vector<Equation> opmonoidal_arrow() { return {om1(), om2(), om3()}; }
inline std::vector<Equation> opmonoidal_cell() { return {om4(), om5()}; }

// --------------------------------------------------------------------------
// Monad-of-oplax-actions specific equations.
// --------------------------------------------------------------------------

// The module laws for psi with respect to the monad of (1⊗i_op⊗1 ⊣ 1⊗i_co⊗1)
// on S⊗R.  Generators: s (the action), psi, i_op: I→Ro, i_co: Ro→I,
// eta_op: 1_I ⇒ i_op;i_co, eps_op: i_co;i_op ⇒ 1_Ro; objects S, R, Ro.
inline Equation psi_unit() {
  ObjExpr S = ow("S"), R = ow("R");
  auto lhs = vc({
      whr(t2({id2(id1(S)), g2("eta_op"), id2(id1(R))}), g1("s")),
      g2("psi"),
  });
  return {"PSI-UNIT", lhs, id2(g1("s"))};
}

inline Equation psi_assoc() {
  ObjExpr S = ow("S"), R = ow("R"), Ro = ow("Ro");
  auto T1 = seq({ten({id1(S), g1("i_op"), id1(R)}), ten({id1(S), g1("i_co"), id1(R)})});
  auto lhs = vc({whl(T1, g2("psi")), g2("psi")});
  auto rhs = vc({
      wh(ten({id1(S), g1("i_op"), id1(R)}),
         t2({id2(id1(S)), g2("eps_op"), id2(id1(R))}),
         seq({ten({id1(S), g1("i_co"), id1(R)}), g1("s")})),
      g2("psi"),
  });
  return {"PSI-ASSOC", lhs, rhs};
}

// Module-morphism conditions for a 2-simplex filling alpha, with the monads
// induced on the R and S legs.  Generators: s, t, v, alpha, psi_s?? — psi_t,
// psi_v bound as cells; i_op/i_co for R, j_op/j_co for S; objects T, S, R.
inline Equation eq_ir() {
  ObjExpr T = ow("T"), S = ow("S"), R = ow("R");
  auto iT = id1(T), iS = id1(S), iR = id1(R);
  auto TR1 = ten({iT, iS, g1("i_op"), iR});
  auto TR2 = ten({iT, iS, g1("i_co"), iR});
  auto lhs = vc({
      whr(t2({id2(iT), g2("psi_s")}), g1("t")),
      g2("alpha"),
  });
  auto rhs = vc({
      whl(seq({TR1, TR2}), g2("alpha")),
      whr(iso(seq({TR1, TR2, ten({g1("t"), iR})}),
              seq({ten({g1("t"), iR}), ten({iT, g1("i_op"), iR}), ten({iT, g1("i_co"), iR})})),
          g1("v")),
      whl(ten({g1("t"), iR}), g2("psi_v")),
  });
  return {"IR", lhs, rhs};
}

inline Equation eq_js() {
  ObjExpr T = ow("T"), S = ow("S"), R = ow("R");
  auto iT = id1(T), iS = id1(S), iR = id1(R);
  auto TS1 = ten({iT, g1("j_op"), iS, iR});
  auto TS2 = ten({iT, g1("j_co"), iS, iR});
  auto lhs = vc({
      whl(seq({TS1, TS2}), g2("alpha")),
      whr(t2({g2("psi_t"), id2(iR)}), g1("v")),
  });
  auto rhs = vc({
      whr(iso(seq({TS1, TS2, ten({iT, g1("s")})}),
              seq({ten({iT, g1("s")}), ten({iT, g1("j_op"), iS}), ten({iT, g1("j_co"), iS})})),
          g1("t")),
      whl(ten({iT, g1("s")}), g2("psi_t")),
      g2("alpha"),
  });
  return {"JS", lhs, rhs};
}

}  // namespace catalog
}  // namespace skewcat
