// A small formal language of 1-cell and 2-cell expressions over named
// generators, with evaluation against a model and equation checking.
//
// Structural isomorphism nodes are validated by planar normalization: a
// 1-cell expression linearizes to a list of generator slices, two expressions
// denote the same pasting scheme iff their slice lists agree up to the
// commutation of independent slices.  The witnessing bijection permutes the
// per-generator token blocks accordingly.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "skewcat/core.hpp"

namespace skewcat {

// ---------------------------------------------------------------------------
// Expressions.
// ---------------------------------------------------------------------------
struct ObjExpr {
  std::vector<std::string> word;  // empty word = unit object I
};
inline ObjExpr oI() { return ObjExpr{}; }
inline ObjExpr ow(std::initializer_list<std::string> names) {
  return ObjExpr{std::vector<std::string>(names)};
}
inline ObjExpr ow(const std::string& n) { return ObjExpr{{n}}; }
inline ObjExpr operator+(ObjExpr a, const ObjExpr& b) {
  a.word.insert(a.word.end(), b.word.begin(), b.word.end());
  return a;
}

struct OneNode;
using OneExpr = std::shared_ptr<const OneNode>;
struct OneNode {
  enum Kind { gen, id, seq, ten } kind;
  std::string name;            // gen
  ObjExpr obj;                 // id
  std::vector<OneExpr> kids;   // seq, ten
};

inline OneExpr g1(const std::string& name) {
  return std::make_shared<OneNode>(OneNode{OneNode::gen, name, {}, {}});
}
inline OneExpr id1(ObjExpr o) {
  return std::make_shared<OneNode>(OneNode{OneNode::id, "", std::move(o), {}});
}
inline OneExpr seq(std::vector<OneExpr> kids) {
  return std::make_shared<OneNode>(OneNode{OneNode::seq, "", {}, std::move(kids)});
}
inline OneExpr ten(std::vector<OneExpr> kids) {
  return std::make_shared<OneNode>(OneNode{OneNode::ten, "", {}, std::move(kids)});
}

struct TwoNode;
using TwoExpr = std::shared_ptr<const TwoNode>;
struct TwoNode {
  enum Kind { gen, id, vcomp, whisk, ten, iso } kind;
  std::string name;           // gen
  OneExpr of;                 // id
  std::vector<TwoExpr> kids;  // vcomp (first applied first), ten
  OneExpr left, right;        // whisk (either may be null)
  TwoExpr body;               // whisk
  OneExpr iso_src, iso_dst;   // iso
};

inline TwoExpr g2(const std::string& name) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::gen;
  n->name = name;
  return n;
}
inline TwoExpr id2(OneExpr of) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::id;
  n->of = std::move(of);
  return n;
}
inline TwoExpr vc(std::vector<TwoExpr> kids) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::vcomp;
  n->kids = std::move(kids);
  return n;
}
inline TwoExpr wh(OneExpr left, TwoExpr body, OneExpr right) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::whisk;
  n->left = std::move(left);
  n->body = std::move(body);
  n->right = std::move(right);
  return n;
}
inline TwoExpr whl(OneExpr left, TwoExpr body) { return wh(std::move(left), std::move(body), nullptr); }
inline TwoExpr whr(TwoExpr body, OneExpr right) { return wh(nullptr, std::move(body), std::move(right)); }
inline TwoExpr t2(std::vector<TwoExpr> kids) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::ten;
  n->kids = std::move(kids);
  return n;
}
inline TwoExpr iso(OneExpr from, OneExpr to) {
  auto n = std::make_shared<TwoNode>();
  n->kind = TwoNode::iso;
  n->iso_src = std::move(from);
  n->iso_dst = std::move(to);
  return n;
}

inline std::string show(const OneExpr& e) {
  switch (e->kind) {
    case OneNode::gen: return e->name;
    case OneNode::id: {
      ObjExpr o = e->obj;
      if (o.word.empty()) return "1_I";
      std::string s = "1_";
      for (std::size_t i = 0; i < o.word.size(); ++i) s += (i ? "⊗" : "") + o.word[i];
      return s;
    }
    case OneNode::seq: {
      std::string s = "(";
      for (std::size_t i = 0; i < e->kids.size(); ++i) s += (i ? ";" : "") + show(e->kids[i]);
      return s + ")";
    }
    case OneNode::ten: {
      std::string s = "(";
      for (std::size_t i = 0; i < e->kids.size(); ++i) s += (i ? "⊗" : "") + show(e->kids[i]);
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Environment.
// ---------------------------------------------------------------------------
struct Env {
  Model model = Model::finmat;
  std::map<std::string, Obj> objs;
  std::map<std::string, OneCell> ones;
  std::map<std::string, TwoCell> twos;

  const Obj& obj(const std::string& n) const {
    auto it = objs.find(n);
    if (it == objs.end()) throw Error("unbound object: " + n);
    return it->second;
  }
  const OneCell& one(const std::string& n) const {
    auto it = ones.find(n);
    if (it == ones.end()) throw Error("unbound 1-cell generator: " + n);
    return it->second;
  }
  const TwoCell& two(const std::string& n) const {
    auto it = twos.find(n);
    if (it == twos.end()) throw Error("unbound 2-cell generator: " + n);
    return it->second;
  }
};

inline Obj eval_obj(const ObjExpr& e, const Env& env) {
  Obj o = Obj::unit();
  for (const auto& n : e.word) o = o * env.obj(n);
  return o;
}

inline OneCell eval_one(const OneExpr& e, const Env& env) {
  switch (e->kind) {
    case OneNode::gen: return env.one(e->name);
    case OneNode::id: return identity_cell(eval_obj(e->obj, env));
    case OneNode::seq: {
      if (e->kids.empty()) throw Error("empty composite");
      OneCell c = eval_one(e->kids[0], env);
      for (std::size_t i = 1; i < e->kids.size(); ++i) {
        OneCell n = eval_one(e->kids[i], env);
        if (c.dst != n.src)
          throw Error("incomposable: " + show(e->kids[i - 1]) + " then " + show(e->kids[i]) +
                      " (" + c.dst.show() + " vs " + n.src.show() + ")");
        c = compose(c, n, env.model);
      }
      return c;
    }
    case OneNode::ten: {
      OneCell c = identity_cell(Obj::unit());
      for (const auto& k : e->kids) c = tensor(c, eval_one(k, env), env.model);
      return c;
    }
  }
  throw Error("bad 1-cell expression");
}

// ---------------------------------------------------------------------------
// Planar slice normal form.
// ---------------------------------------------------------------------------
namespace planar {

struct Slice {
  int leaf;          // syntactic leaf index of the generator occurrence
  uint32_t offset;   // wire offset at firing time
  uint32_t in, out;  // factor arities
};

struct Diagram {
  std::vector<Slice> slices;          // syntactic firing order
  std::vector<std::string> leaf_gen;  // leaf index -> generator name
  std::vector<uint32_t> leaf_len;     // leaf index -> token block length
  uint32_t in_factors = 0, out_factors = 0;
};

inline Diagram linearize(const OneExpr& e, const Env& env) {
  Diagram d;
  switch (e->kind) {
    case OneNode::gen: {
      const OneCell& c = env.one(e->name);
      int leaf = 0;
      d.leaf_gen = {e->name};
      d.leaf_len = {c.token_len};
      d.in_factors = static_cast<uint32_t>(c.src.factors.size());
      d.out_factors = static_cast<uint32_t>(c.dst.factors.size());
      d.slices = {Slice{leaf, 0, d.in_factors, d.out_factors}};
      return d;
    }
    case OneNode::id: {
      Obj o = eval_obj(e->obj, env);
      d.in_factors = d.out_factors = static_cast<uint32_t>(o.factors.size());
      return d;
    }
    case OneNode::seq: {
      if (e->kids.empty()) throw Error("empty composite");
      d = linearize(e->kids[0], env);
      for (std::size_t i = 1; i < e->kids.size(); ++i) {
        Diagram n = linearize(e->kids[i], env);
        if (n.in_factors != d.out_factors)
          throw Error("linearize: factor count mismatch in " + show(e));
        int base = static_cast<int>(d.leaf_gen.size());
        for (auto s : n.slices) {
          s.leaf += base;
          d.slices.push_back(s);
        }
        d.leaf_gen.insert(d.leaf_gen.end(), n.leaf_gen.begin(), n.leaf_gen.end());
        d.leaf_len.insert(d.leaf_len.end(), n.leaf_len.begin(), n.leaf_len.end());
        d.out_factors = n.out_factors;
      }
      return d;
    }
    case OneNode::ten: {
      d.in_factors = d.out_factors = 0;
      for (const auto& k : e->kids) {
        Diagram n = linearize(k, env);
        int base = static_cast<int>(d.leaf_gen.size());
        for (auto s : n.slices) {
          s.leaf += base;
          s.offset += d.out_factors;  // fires to the right of what is built so far
          d.slices.push_back(s);
        }
        d.leaf_gen.insert(d.leaf_gen.end(), n.leaf_gen.begin(), n.leaf_gen.end());
        d.leaf_len.insert(d.leaf_len.end(), n.leaf_len.begin(), n.leaf_len.end());
        d.in_factors += n.in_factors;
        d.out_factors += n.out_factors;
      }
      return d;
    }
  }
  throw Error("bad 1-cell expression");
}

// Adjacent slices commute when the later one is wholly left or wholly right
// of the earlier one's output block; offsets shift by the arity difference.
inline bool try_swap(Slice& s, Slice& t) {
  if (t.offset + t.in <= s.offset) {  // t is left of s
    s.offset += t.out - t.in;
    std::swap(s, t);
    return true;
  }
  if (t.offset >= s.offset + s.out) {  // t is right of s
    t.offset -= s.out;
    t.offset += s.in;
    std::swap(s, t);
    return true;
  }
  return false;
}

struct Canonical {
  std::vector<Slice> slices;  // canonical firing order (leaf fields are from the input diagram)
};

// Exhaustive search over commutation-equivalent orderings; diagrams here are
// tiny (axiom legs), so this is cheap and makes the normal form unique by
// construction.
inline Canonical canonicalize(const Diagram& d) {
  auto key = [](const std::vector<Slice>& ss) {
    std::string k;
    for (const auto& s : ss) {
      k += std::to_string(s.leaf);
      k.push_back(',');
    }
    return k;
  };
  // Lexicographic rank by (offset, generator name, arities), with the leaf
  // index only as a final expression-local tie break; the name keeps the
  // canonical order comparable across different expressions of one pasting.
  auto rank = [&](const std::vector<Slice>& ss) {
    std::vector<std::tuple<uint32_t, std::string, uint32_t, uint32_t, uint32_t>> r;
    r.reserve(ss.size());
    for (const auto& s : ss)
      r.push_back({s.offset, d.leaf_gen[s.leaf], s.in, s.out, static_cast<uint32_t>(s.leaf)});
    return r;
  };
  std::set<std::string> seen;
  std::vector<std::vector<Slice>> frontier{d.slices};
  seen.insert(key(d.slices));
  std::vector<Slice> best = d.slices;
  auto best_rank = rank(best);
  while (!frontier.empty()) {
    auto cur = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto nxt = cur;
      if (try_swap(nxt[i], nxt[i + 1])) {
        auto k = key(nxt);
        if (seen.insert(k).second) {
          auto r = rank(nxt);
          if (r < best_rank) {
            best_rank = r;
            best = nxt;
          }
          frontier.push_back(std::move(nxt));
        }
      }
    }
  }
  return Canonical{best};
}

}  // namespace planar

// ---------------------------------------------------------------------------
// Structural isomorphisms between planar-equal expressions.
// ---------------------------------------------------------------------------
inline TwoCell structural_iso(const OneExpr& from, const OneExpr& to, const Env& env) {
  OneCell v1 = eval_one(from, env);
  OneCell v2 = eval_one(to, env);
  if (v1.src != v2.src || v1.dst != v2.dst)
    throw Error("structural iso: boundary mismatch between " + show(from) + " and " + show(to));
  if (v1 == v2) return identity_two(v1);

  planar::Diagram d1 = planar::linearize(from, env);
  planar::Diagram d2 = planar::linearize(to, env);
  auto c1 = planar::canonicalize(d1);
  auto c2 = planar::canonicalize(d2);
  if (c1.slices.size() != c2.slices.size())
    throw Error("structural iso: " + show(from) + " and " + show(to) +
                " have different generator content");
  for (std::size_t k = 0; k < c1.slices.size(); ++k) {
    const auto& a = c1.slices[k];
    const auto& b = c2.slices[k];
    if (a.offset != b.offset || a.in != b.in || a.out != b.out ||
        d1.leaf_gen[a.leaf] != d2.leaf_gen[b.leaf])
      throw Error("structural iso rejected: " + show(from) + " and " + show(to) +
                  " are not related by a structural isomorphism");
  }

  // token block layout per expression, in syntactic leaf order
  auto starts = [](const std::vector<uint32_t>& lens) {
    std::vector<uint32_t> s(lens.size() + 1, 0);
    for (std::size_t i = 0; i < lens.size(); ++i) s[i + 1] = s[i] + lens[i];
    return s;
  };
  auto st1 = starts(d1.leaf_len);
  auto st2 = starts(d2.leaf_len);

  TwoCell r;
  r.src = v1;
  r.dst = v2;
  r.maps.resize(v1.entries.size());
  for (std::size_t p = 0; p < v1.entries.size(); ++p) {
    const auto& e1 = v1.entries[p];
    const auto& e2 = v2.entries[p];
    if (e1.size() != e2.size())
      throw Error("structural iso rejected: entry cardinalities differ at " +
                  v1.show_entry_pos(p));
    r.maps[p].resize(e1.size());
    std::vector<uint32_t> used(e2.size(), 0u);
    for (std::size_t i = 0; i < e1.size(); ++i) {
      Token t(v2.token_len);
      for (std::size_t k = 0; k < c1.slices.size(); ++k) {
        int l1 = c1.slices[k].leaf, l2 = c2.slices[k].leaf;
        for (uint32_t j = 0; j < d1.leaf_len[l1]; ++j) t[st2[l2] + j] = e1[i][st1[l1] + j];
      }
      std::size_t jj = detail::find_token(e2, t, used);
      used[jj] = 1;
      r.maps[p][i] = static_cast<uint32_t>(jj);
    }
  }
  if (!is_invertible(r)) throw Error("structural iso: block permutation is not bijective");
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation of 2-cell expressions and equation checking.
// ---------------------------------------------------------------------------
inline TwoCell eval_two(const TwoExpr& e, const Env& env) {
  switch (e->kind) {
    case TwoNode::gen: return env.two(e->name);
    case TwoNode::id: return identity_two(eval_one(e->of, env));
    case TwoNode::vcomp: {
      if (e->kids.empty()) throw Error("empty vertical composite");
      TwoCell c = eval_two(e->kids[0], env);
      for (std::size_t i = 1; i < e->kids.size(); ++i) {
        TwoCell n = eval_two(e->kids[i], env);
        if (c.dst != n.src)
          throw Error("vertical composite: boundary mismatch before factor " + std::to_string(i));
        c = vcomp(c, n);
      }
      return c;
    }
    case TwoNode::whisk: {
      TwoCell c = eval_two(e->body, env);
      if (e->left) c = whisker_left(eval_one(e->left, env), c, env.model);
      if (e->right) c = whisker_right(c, eval_one(e->right, env), env.model);
      return c;
    }
    case TwoNode::ten: {
      if (e->kids.empty()) throw Error("empty 2-cell tensor");
      TwoCell c = eval_two(e->kids[0], env);
      for (std::size_t i = 1; i < e->kids.size(); ++i)
        c = tensor_two(c, eval_two(e->kids[i], env), env.model);
      return c;
    }
    case TwoNode::iso: {
      if (env.model == Model::rel) {
        OneCell v1 = eval_one(e->iso_src, env);
        OneCell v2 = eval_one(e->iso_dst, env);
        if (v1 != v2)
          throw Error("structural iso (rel): supports differ between " + show(e->iso_src) +
                      " and " + show(e->iso_dst));
        return identity_two(v1);
      }
      return structural_iso(e->iso_src, e->iso_dst, env);
    }
  }
  throw Error("bad 2-cell expression");
}

// Boundary of a 2-cell expression, as evaluated 1-cells.
inline std::pair<OneCell, OneCell> infer_boundary(const TwoExpr& e, const Env& env) {
  TwoCell c = eval_two(e, env);
  return {c.src, c.dst};
}

// ---------------------------------------------------------------------------
// Equations.
// ---------------------------------------------------------------------------
struct Equation {
  std::string name;
  TwoExpr lhs, rhs;
};

struct Verdict {
  bool holds = false;
  std::string detail;  // counterexample position or error text
};

inline Verdict check_equation(const Equation& eq, const Env& env) {
  TwoCell l = eval_two(eq.lhs, env);
  TwoCell r = eval_two(eq.rhs, env);
  auto d = diff_two(l, r);
  if (!d) return Verdict{true, ""};
  return Verdict{false, d->detail};
}

}  // namespace skewcat
