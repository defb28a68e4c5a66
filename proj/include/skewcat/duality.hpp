// Bidualities, point adjunctions, opposite adjunctions, mates and
// transposition in the concrete model.  The canonical right bidual of R is R
// itself with delta-shaped unit and counit, which makes the snake identities
// hold on the nose.
#pragma once

#include "skewcat/expr.hpp"

namespace skewcat {

struct Biduality {
  Obj R, Rdual;
  OneCell n;  // I -> Rdual⊗R
  OneCell e;  // R⊗Rdual -> I
};

struct Adjunction {
  OneCell left;   // i : I -> R
  OneCell right;  // i* : R -> I
  TwoCell unit;   // eta : 1_I => i;i*
  TwoCell counit; // eps : i*;i => 1_R
  const Obj& carrier() const { return left.dst; }
};

inline Biduality canonical_biduality(const Obj& R) {
  Biduality b;
  b.R = R;
  b.Rdual = R;
  OneCell n;
  n.src = Obj::unit();
  n.dst = R * R;
  n.token_len = 0;
  n.entries.assign(n.dst.size(), {});
  for (std::size_t r = 0; r < R.size(); ++r) n.at(0, r * R.size() + r).push_back(Token{});
  OneCell e;
  e.src = R * R;
  e.dst = Obj::unit();
  e.token_len = 0;
  e.entries.assign(e.src.size(), {});
  for (std::size_t r = 0; r < R.size(); ++r) e.at(r * R.size() + r, 0).push_back(Token{});
  b.n = n;
  b.e = e;
  return b;
}

// The left adjoints I -> R in this model are exactly the points of R.
inline Adjunction point_adjunction(const Obj& R, std::size_t p, Model model = Model::finmat) {
  if (p >= R.size()) throw Error("point_adjunction: index " + std::to_string(p) + " out of range");
  Adjunction a;
  std::vector<uint32_t> row(R.size(), 0u), col(R.size(), 0u);
  row[p] = col[p] = 1u;
  a.left = make_generator("i", Obj::unit(), R, row, model);
  a.right = make_generator("i*", R, Obj::unit(), col, model);
  a.unit = structural_two(identity_cell(Obj::unit()), compose(a.left, a.right, model), "eta");
  a.counit = structural_two(compose(a.right, a.left, model), identity_cell(R), "eps");
  return a;
}

// i_op := n;(1⊗i*) : I -> R°,  i_co := (i⊗1);e : R° -> I, with unit and
// counit pasted from eta, eps and the snakes; all are 0/1 cells here, so the
// pasted cells are the unique structural ones and the triangle identities are
// checked rather than constructed.
inline Adjunction opposite_adjunction(const Adjunction& adj, const Biduality& bid,
                                      Model model = Model::finmat) {
  if (adj.carrier() != bid.R) throw Error("opposite_adjunction: carrier mismatch");
  Adjunction op;
  op.left = compose(bid.n, tensor(identity_cell(bid.Rdual), adj.right, model), model);
  op.right = compose(tensor(adj.left, identity_cell(bid.Rdual), model), bid.e, model);
  op.unit = structural_two(identity_cell(Obj::unit()), compose(op.left, op.right, model),
                           "eta of the opposite adjunction");
  op.counit = structural_two(compose(op.right, op.left, model), identity_cell(bid.Rdual),
                             "eps of the opposite adjunction");
  return op;
}

inline bool triangle_identities_hold(const Adjunction& a, Model model = Model::finmat) {
  // [eta * i] then [i * eps]  ==  1_i
  auto l = vcomp(whisker_right(a.unit, a.left, model), whisker_left(a.left, a.counit, model));
  if (!equal_two(l, identity_two(a.left))) return false;
  // [i* * eta] then [eps * i*]  ==  1_{i*}
  auto r = vcomp(whisker_left(a.right, a.unit, model), whisker_right(a.counit, a.right, model));
  return equal_two(r, identity_two(a.right));
}

inline bool snake_identities_hold(const Biduality& b, Model model = Model::finmat) {
  auto lhs = compose(tensor(identity_cell(b.R), b.n, model),
                     tensor(b.e, identity_cell(b.R), model), model);
  if (lhs != identity_cell(b.R)) return false;
  auto rhs = compose(tensor(b.n, identity_cell(b.Rdual), model),
                     tensor(identity_cell(b.Rdual), b.e, model), model);
  return rhs == identity_cell(b.Rdual);
}

// ---------------------------------------------------------------------------
// Mates between lambda: 1_R => (i⊗1);m and kappa: (i*⊗1) => m under the
// adjunction i⊗1 ⊣ i*⊗1.
// ---------------------------------------------------------------------------
inline TwoCell lambda_to_kappa(const TwoCell& lambda, const Adjunction& adj, const OneCell& m,
                               Model model = Model::finmat) {
  const Obj& R = adj.carrier();
  auto idR = identity_cell(R);
  // (i*⊗1) ⋆ lambda, then (eps⊗1) ⋆ m
  auto step1 = whisker_left(tensor(adj.right, idR, model), lambda, model);
  auto step2 = whisker_right(tensor_two(adj.counit, identity_two(idR), model), m, model);
  return vcomp(step1, step2);
}

inline TwoCell kappa_to_lambda(const TwoCell& kappa, const Adjunction& adj,
                               Model model = Model::finmat) {
  const Obj& R = adj.carrier();
  auto idR = identity_cell(R);
  auto step1 = tensor_two(adj.unit, identity_two(idR), model);
  auto step2 = whisker_left(tensor(adj.left, idR, model), kappa, model);
  return vcomp(step1, step2);
}

// ---------------------------------------------------------------------------
// Transposition along a biduality S ⊣ S°.
//   out:  g : X -> S°⊗Y   ↦  (1_S⊗g);(e⊗1_Y) : S⊗X -> Y
//   in :  h : S⊗X -> Y    ↦  (n⊗1_X);(1_{S°}⊗h) : X -> S°⊗Y
// The two directions are mutually inverse on the nose.
// ---------------------------------------------------------------------------
inline OneCell transpose_out(const OneCell& g, const Biduality& bid, Model model = Model::finmat) {
  Obj Y = g.dst;
  if (Y.factors.size() < bid.Rdual.factors.size() ||
      !std::equal(bid.Rdual.factors.begin(), bid.Rdual.factors.end(), Y.factors.begin()))
    throw Error("transpose_out: target does not start with the dual object");
  Y.factors.erase(Y.factors.begin(), Y.factors.begin() + bid.Rdual.factors.size());
  Y.names.clear();
  return compose(tensor(identity_cell(bid.R), g, model),
                 tensor(bid.e, identity_cell(Y), model), model);
}

inline OneCell transpose_in(const OneCell& h, const Biduality& bid, Model model = Model::finmat) {
  Obj X = h.src;
  if (X.factors.size() < bid.R.factors.size() ||
      !std::equal(bid.R.factors.begin(), bid.R.factors.end(), X.factors.begin()))
    throw Error("transpose_in: source does not start with the dualized object");
  X.factors.erase(X.factors.begin(), X.factors.begin() + bid.R.factors.size());
  X.names.clear();
  return compose(tensor(bid.n, identity_cell(X), model),
                 tensor(identity_cell(bid.Rdual), h, model), model);
}

inline TwoCell transpose_out(const TwoCell& g, const Biduality& bid, Model model = Model::finmat) {
  Obj Y = g.src.dst;
  Y.factors.erase(Y.factors.begin(), Y.factors.begin() + bid.Rdual.factors.size());
  Y.names.clear();
  return whisker_right(tensor_two(identity_two(identity_cell(bid.R)), g, model),
                       tensor(bid.e, identity_cell(Y), model), model);
}

inline TwoCell transpose_in(const TwoCell& h, const Biduality& bid, Model model = Model::finmat) {
  Obj X = h.src.src;
  X.factors.erase(X.factors.begin(), X.factors.begin() + bid.R.factors.size());
  X.names.clear();
  return whisker_left(tensor(bid.n, identity_cell(X), model),
                      tensor_two(identity_two(identity_cell(bid.Rdual)), h, model), model);
}

}  // namespace skewcat
