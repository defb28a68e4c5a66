// Finite-set-valued matrices between finite index sets, with a strictifying
// normal form: 1-cells are matrices whose entries are canonically ordered
// multisets of flat element tokens, 2-cells are entrywise functions.
//
// Tokens record only the elements chosen at *data* generators (generators
// with some entry of cardinality >= 2); 0/1-valued cells contribute nothing.
// Under this normal form composition and tensor are strictly associative and
// unital, and every canonical pasting of 0/1 cells (snake and triangle
// composites, delta-matrix functoriality) evaluates to an identity.
#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace skewcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Model { finmat, rel };

// ---------------------------------------------------------------------------
// Objects: tensor words of atomic finite index sets.  The unit object is the
// empty word.  Equality only looks at factor sizes; names are display-only.
// ---------------------------------------------------------------------------
struct Obj {
  std::vector<uint32_t> factors;
  std::vector<std::string> names;  // parallel to factors, may be empty

  static Obj unit() { return Obj{}; }
  static Obj atom(uint32_t n, std::string name = "") {
    Obj o;
    o.factors = {n};
    o.names = {std::move(name)};
    return o;
  }

  std::size_t size() const {
    std::size_t s = 1;
    for (auto f : factors) s *= f;
    return s;
  }
  bool is_unit() const { return factors.empty(); }

  friend Obj operator*(const Obj& a, const Obj& b) {
    Obj o = a;
    o.factors.insert(o.factors.end(), b.factors.begin(), b.factors.end());
    if (o.names.size() == a.factors.size() && b.names.size() == b.factors.size())
      o.names.insert(o.names.end(), b.names.begin(), b.names.end());
    else
      o.names.clear();
    return o;
  }
  bool operator==(const Obj& o) const { return factors == o.factors; }
  bool operator!=(const Obj& o) const { return !(*this == o); }

  // Row-major decode: the first factor is the most significant digit.
  std::vector<uint32_t> decode(std::size_t linear) const {
    std::vector<uint32_t> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      t[i] = static_cast<uint32_t>(linear % factors[i]);
      linear /= factors[i];
    }
    return t;
  }
  std::size_t encode(const std::vector<uint32_t>& tuple) const {
    std::size_t lin = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) lin = lin * factors[i] + tuple[i];
    return lin;
  }

  std::string show() const {
    if (factors.empty()) return "I";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "⊗";
      if (names.size() == factors.size() && !names[i].empty())
        os << names[i];
      else
        os << "[" << factors[i] << "]";
    }
    return os.str();
  }
  std::string show_index(std::size_t linear) const {
    auto t = decode(linear);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << ",";
      os << t[i];
    }
    os << ")";
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Element tokens.
// ---------------------------------------------------------------------------
struct Atom {
  uint32_t gen;  // generator id (registry)
  uint32_t pos;  // linear entry position src*|dst|+dst within the generator
  uint32_t idx;  // element index inside that entry
  auto operator<=>(const Atom&) const = default;
};
using Token = std::vector<Atom>;

namespace detail {
class GenRegistry {
 public:
  static GenRegistry& instance() {
    static GenRegistry r;
    return r;
  }
  uint32_t fresh(const std::string& name) {
    std::lock_guard<std::mutex> lk(mu_);
    names_.push_back(name);
    return static_cast<uint32_t>(names_.size() - 1);
  }
  std::string name(uint32_t id) const {
    std::lock_guard<std::mutex> lk(mu_);
    return id < names_.size() ? names_[id] : "?";
  }

 private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
};
}  // namespace detail

inline std::string show_token(const Token& t) {
  if (t.empty()) return "·";
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << " ";
    os << detail::GenRegistry::instance().name(t[i].gen) << "@" << t[i].pos << "#" << t[i].idx;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// 1-cells.
// ---------------------------------------------------------------------------
struct OneCell {
  Obj src, dst;
  uint32_t token_len = 0;
  // entries[x * dst.size() + y] is the sorted list (multiset) of tokens.
  std::vector<std::vector<Token>> entries;

  std::vector<Token>& at(std::size_t x, std::size_t y) { return entries[x * dst.size() + y]; }
  const std::vector<Token>& at(std::size_t x, std::size_t y) const {
    return entries[x * dst.size() + y];
  }
  std::size_t card(std::size_t x, std::size_t y) const { return at(x, y).size(); }

  bool operator==(const OneCell& o) const {
    return src == o.src && dst == o.dst && entries == o.entries;
  }
  bool operator!=(const OneCell& o) const { return !(*this == o); }

  std::string show_entry_pos(std::size_t linear) const {
    std::size_t x = linear / dst.size(), y = linear % dst.size();
    return src.show_index(x) + "|" + dst.show_index(y);
  }
};

inline OneCell identity_cell(const Obj& o) {
  OneCell c;
  c.src = c.dst = o;
  c.token_len = 0;
  c.entries.assign(o.size() * o.size(), {});
  for (std::size_t x = 0; x < o.size(); ++x) c.at(x, x).push_back(Token{});
  return c;
}

// A generator matrix with the given entry cardinalities.  If every entry has
// cardinality <= 1 the cell is structural: its elements carry no token atoms
// and equality degenerates to support equality, which is what makes snake and
// triangle composites strict.  Otherwise each element is a named atom.
inline OneCell make_generator(const std::string& name, const Obj& src, const Obj& dst,
                              const std::vector<uint32_t>& cards, Model model = Model::finmat) {
  if (cards.size() != src.size() * dst.size())
    throw Error("make_generator(" + name + "): need " + std::to_string(src.size() * dst.size()) +
                " entry cardinalities, got " + std::to_string(cards.size()));
  bool data = false;
  for (auto k : cards)
    if (k > 1) data = true;
  if (model == Model::rel) data = false;
  OneCell c;
  c.src = src;
  c.dst = dst;
  c.entries.assign(cards.size(), {});
  if (!data) {
    c.token_len = 0;
    for (std::size_t p = 0; p < cards.size(); ++p)
      if (cards[p] > 0) c.entries[p].push_back(Token{});
  } else {
    c.token_len = 1;
    uint32_t id = detail::GenRegistry::instance().fresh(name);
    for (std::size_t p = 0; p < cards.size(); ++p)
      for (uint32_t k = 0; k < cards[p]; ++k)
        c.entries[p].push_back(Token{Atom{id, static_cast<uint32_t>(p), k}});
  }
  return c;
}

// Graph of a function f: src -> dst (as linear indices).
inline OneCell delta_cell(const Obj& src, const Obj& dst, const std::vector<std::size_t>& f) {
  if (f.size() != src.size()) throw Error("delta_cell: function size mismatch");
  OneCell c;
  c.src = src;
  c.dst = dst;
  c.token_len = 0;
  c.entries.assign(src.size() * dst.size(), {});
  for (std::size_t x = 0; x < src.size(); ++x) {
    if (f[x] >= dst.size()) throw Error("delta_cell: value out of range");
    c.at(x, f[x]).push_back(Token{});
  }
  return c;
}

namespace detail {
inline void rel_clamp(OneCell& c) {
  c.token_len = 0;
  for (auto& e : c.entries) {
    if (e.empty()) continue;
    e.assign(1, Token{});
  }
}
inline Token cat(const Token& a, const Token& b) {
  Token t = a;
  t.insert(t.end(), b.begin(), b.end());
  return t;
}
}  // namespace detail

// Composite entry (x,z) = disjoint union over y of A(x,y) x B(y,z); tokens are
// concatenated, so composition is strictly associative and unital.
inline OneCell compose(const OneCell& a, const OneCell& b, Model model = Model::finmat) {
  if (a.dst != b.src)
    throw Error("compose: boundary mismatch " + a.dst.show() + " vs " + b.src.show());
  OneCell c;
  c.src = a.src;
  c.dst = b.dst;
  c.token_len = a.token_len + b.token_len;
  const std::size_t nx = a.src.size(), ny = a.dst.size(), nz = b.dst.size();
  c.entries.assign(nx * nz, {});
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t z = 0; z < nz; ++z) {
      auto& e = c.at(x, z);
      for (std::size_t y = 0; y < ny; ++y) {
        const auto& ea = a.at(x, y);
        const auto& eb = b.at(y, z);
        for (const auto& ta : ea)
          for (const auto& tb : eb) e.push_back(detail::cat(ta, tb));
      }
      std::sort(e.begin(), e.end());
    }
  if (model == Model::rel) detail::rel_clamp(c);
  return c;
}

inline OneCell tensor(const OneCell& a, const OneCell& b, Model model = Model::finmat) {
  OneCell c;
  c.src = a.src * b.src;
  c.dst = a.dst * b.dst;
  c.token_len = a.token_len + b.token_len;
  const std::size_t sa = a.src.size(), sb = b.src.size(), da = a.dst.size(), db = b.dst.size();
  c.entries.assign(sa * sb * da * db, {});
  for (std::size_t xa = 0; xa < sa; ++xa)
    for (std::size_t xb = 0; xb < sb; ++xb)
      for (std::size_t ya = 0; ya < da; ++ya)
        for (std::size_t yb = 0; yb < db; ++yb) {
          auto& e = c.at(xa * sb + xb, ya * db + yb);
          for (const auto& ta : a.at(xa, ya))
            for (const auto& tb : b.at(xb, yb)) e.push_back(detail::cat(ta, tb));
          std::sort(e.begin(), e.end());
        }
  if (model == Model::rel) detail::rel_clamp(c);
  return c;
}

// Idempotent re-canonicalisation; values are built normalized, so this only
// re-sorts entry multisets.
inline OneCell normalize(OneCell c) {
  for (auto& e : c.entries) std::sort(e.begin(), e.end());
  return c;
}

// ---------------------------------------------------------------------------
// 2-cells: entrywise functions between matching entries.
// ---------------------------------------------------------------------------
struct TwoCell {
  OneCell src, dst;
  std::vector<std::vector<uint32_t>> maps;  // maps[p][i] = image element index

  bool operator==(const TwoCell& o) const {
    return src == o.src && dst == o.dst && maps == o.maps;
  }
  bool operator!=(const TwoCell& o) const { return !(*this == o); }
};

inline TwoCell identity_two(const OneCell& c) {
  TwoCell t;
  t.src = t.dst = c;
  t.maps.resize(c.entries.size());
  for (std::size_t p = 0; p < c.entries.size(); ++p) {
    t.maps[p].resize(c.entries[p].size());
    std::iota(t.maps[p].begin(), t.maps[p].end(), 0u);
  }
  return t;
}

inline TwoCell normalize(TwoCell t) { return t; }

// The unique 2-cell src => dst when dst has at most one element wherever src
// is inhabited.  This is how every canonical cell between 0/1 matrices (rel
// cells, units/counits of point adjunctions, ...) is produced.
inline TwoCell structural_two(const OneCell& src, const OneCell& dst,
                              const std::string& what = "cell") {
  if (src.src != dst.src || src.dst != dst.dst)
    throw Error("structural_two(" + what + "): boundary mismatch");
  TwoCell t;
  t.src = src;
  t.dst = dst;
  t.maps.resize(src.entries.size());
  for (std::size_t p = 0; p < src.entries.size(); ++p) {
    const std::size_t k = src.entries[p].size();
    if (k == 0) continue;
    if (dst.entries[p].empty())
      throw Error("no 2-cell " + what + ": entry " + src.show_entry_pos(p) +
                  " is inhabited in the source but empty in the target");
    if (dst.entries[p].size() > 1)
      throw Error("structural_two(" + what + "): target entry " + src.show_entry_pos(p) +
                  " is not a singleton");
    t.maps[p].assign(k, 0u);
  }
  return t;
}

inline std::optional<TwoCell> try_structural_two(const OneCell& src, const OneCell& dst) {
  try {
    return structural_two(src, dst);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline bool is_invertible(const TwoCell& t) {
  for (std::size_t p = 0; p < t.maps.size(); ++p) {
    if (t.src.entries[p].size() != t.dst.entries[p].size()) return false;
    std::vector<bool> hit(t.dst.entries[p].size(), false);
    for (auto v : t.maps[p]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

inline TwoCell invert(const TwoCell& t) {
  if (!is_invertible(t)) throw Error("invert: 2-cell is not entrywise bijective");
  TwoCell r;
  r.src = t.dst;
  r.dst = t.src;
  r.maps.resize(t.maps.size());
  for (std::size_t p = 0; p < t.maps.size(); ++p) {
    r.maps[p].resize(t.maps[p].size());
    for (std::size_t i = 0; i < t.maps[p].size(); ++i) r.maps[p][t.maps[p][i]] = i;
  }
  return r;
}

// Vertical composition, diagram order: a: f => g, b: g => h.
inline TwoCell vcomp(const TwoCell& a, const TwoCell& b) {
  if (a.dst != b.src)
    throw Error("vcomp: middle boundary mismatch (target of the first cell differs from the "
                "source of the second)");
  TwoCell c;
  c.src = a.src;
  c.dst = b.dst;
  c.maps.resize(a.maps.size());
  for (std::size_t p = 0; p < a.maps.size(); ++p) {
    c.maps[p].resize(a.maps[p].size());
    for (std::size_t i = 0; i < a.maps[p].size(); ++i) c.maps[p][i] = b.maps[p][a.maps[p][i]];
  }
  return c;
}

namespace detail {
// compose() along with, per composite entry in sorted-token order, the route
// (y, ia, ib) that produced each element.
struct Route {
  Token token;
  std::size_t y, ia, ib;
  bool operator<(const Route& o) const {
    return std::tie(token, y, ia, ib) < std::tie(o.token, o.y, o.ia, o.ib);
  }
};
struct TrackedCompose {
  OneCell cell;
  std::vector<std::vector<Route>> routes;  // aligned with cell entries in finmat
};
inline TrackedCompose compose_tracked(const OneCell& a, const OneCell& b, Model model) {
  if (a.dst != b.src)
    throw Error("compose: boundary mismatch " + a.dst.show() + " vs " + b.src.show());
  TrackedCompose r;
  r.cell.src = a.src;
  r.cell.dst = b.dst;
  r.cell.token_len = model == Model::rel ? 0 : a.token_len + b.token_len;
  const std::size_t nx = a.src.size(), ny = a.dst.size(), nz = b.dst.size();
  r.cell.entries.assign(nx * nz, {});
  r.routes.assign(nx * nz, {});
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t z = 0; z < nz; ++z) {
      auto& rt = r.routes[x * nz + z];
      for (std::size_t y = 0; y < ny; ++y) {
        const auto& ea = a.at(x, y);
        const auto& eb = b.at(y, z);
        for (std::size_t ia = 0; ia < ea.size(); ++ia)
          for (std::size_t ib = 0; ib < eb.size(); ++ib)
            rt.push_back(Route{cat(ea[ia], eb[ib]), y, ia, ib});
      }
      std::sort(rt.begin(), rt.end());
      auto& e = r.cell.entries[x * nz + z];
      if (model == Model::rel) {
        if (!rt.empty()) {
          e.push_back(Token{});
          rt.resize(1);
          rt[0].token.clear();
        }
      } else {
        for (const auto& q : rt) e.push_back(q.token);
      }
    }
  return r;
}

inline std::size_t find_token(const std::vector<Token>& entry, const Token& t,
                              std::vector<uint32_t>& used) {
  auto it = std::lower_bound(entry.begin(), entry.end(), t);
  while (it != entry.end() && *it == t) {
    std::size_t i = static_cast<std::size_t>(it - entry.begin());
    if (!used[i]) return i;
    ++it;
  }
  // All occurrences taken (non-injective map); fall back to the first one.
  it = std::lower_bound(entry.begin(), entry.end(), t);
  if (it == entry.end() || *it != t) throw Error("internal: token not found in target entry");
  return static_cast<std::size_t>(it - entry.begin());
}
}  // namespace detail

// f * phi : f;src(phi) => f;dst(phi)
inline TwoCell whisker_left(const OneCell& f, const TwoCell& phi, Model model = Model::finmat) {
  auto s = detail::compose_tracked(f, phi.src, model);
  OneCell d = compose(f, phi.dst, model);
  TwoCell r;
  r.src = s.cell;
  r.dst = d;
  r.maps.resize(s.cell.entries.size());
  const std::size_t nz = phi.src.dst.size();
  for (std::size_t p = 0; p < s.cell.entries.size(); ++p) {
    const auto& rts = s.routes[p];
    r.maps[p].resize(s.cell.entries[p].size());
    if (rts.empty()) continue;
    if (model == Model::rel) {
      r.maps[p].assign(s.cell.entries[p].size(), 0u);
      continue;
    }
    const std::size_t x = p / nz, z = p % nz;
    std::vector<uint32_t> used(d.at(x, z).size(), 0u);
    for (std::size_t i = 0; i < rts.size(); ++i) {
      const auto& q = rts[i];
      const Token& tf = f.at(x, q.y)[q.ia];
      uint32_t jb = phi.maps[q.y * nz + z][q.ib];
      Token target = detail::cat(tf, phi.dst.at(q.y, z)[jb]);
      std::size_t j = detail::find_token(d.at(x, z), target, used);
      used[j] = 1;
      r.maps[p][i] = static_cast<uint32_t>(j);
    }
  }
  return r;
}

// phi * g : src(phi);g => dst(phi);g
inline TwoCell whisker_right(const TwoCell& phi, const OneCell& g, Model model = Model::finmat) {
  auto s = detail::compose_tracked(phi.src, g, model);
  OneCell d = compose(phi.dst, g, model);
  TwoCell r;
  r.src = s.cell;
  r.dst = d;
  r.maps.resize(s.cell.entries.size());
  const std::size_t nz = g.dst.size(), ny = g.src.size();
  for (std::size_t p = 0; p < s.cell.entries.size(); ++p) {
    const auto& rts = s.routes[p];
    r.maps[p].resize(s.cell.entries[p].size());
    if (rts.empty()) continue;
    if (model == Model::rel) {
      r.maps[p].assign(s.cell.entries[p].size(), 0u);
      continue;
    }
    const std::size_t x = p / nz, z = p % nz;
    std::vector<uint32_t> used(d.at(x, z).size(), 0u);
    for (std::size_t i = 0; i < rts.size(); ++i) {
      const auto& q = rts[i];
      uint32_t ja = phi.maps[x * ny + q.y][q.ia];
      Token target = detail::cat(phi.dst.at(x, q.y)[ja], g.at(q.y, z)[q.ib]);
      std::size_t j = detail::find_token(d.at(x, z), target, used);
      used[j] = 1;
      r.maps[p][i] = static_cast<uint32_t>(j);
    }
  }
  return r;
}

inline TwoCell tensor_two(const TwoCell& a, const TwoCell& b, Model model = Model::finmat) {
  OneCell s = tensor(a.src, b.src, model);
  OneCell d = tensor(a.dst, b.dst, model);
  TwoCell r;
  r.src = s;
  r.dst = d;
  r.maps.resize(s.entries.size());
  const std::size_t sa = a.src.src.size(), sb = b.src.src.size();
  const std::size_t da = a.src.dst.size(), db = b.src.dst.size();
  for (std::size_t xa = 0; xa < sa; ++xa)
    for (std::size_t xb = 0; xb < sb; ++xb)
      for (std::size_t ya = 0; ya < da; ++ya)
        for (std::size_t yb = 0; yb < db; ++yb) {
          const std::size_t p = (xa * sb + xb) * (da * db) + (ya * db + yb);
          const auto& sEntry = s.entries[p];
          r.maps[p].resize(sEntry.size());
          if (sEntry.empty()) continue;
          if (model == Model::rel) {
            r.maps[p].assign(sEntry.size(), 0u);
            continue;
          }
          const auto& ea = a.src.at(xa, ya);
          const auto& eb = b.src.at(xb, yb);
          std::vector<uint32_t> used(d.entries[p].size(), 0u);
          // enumerate in sorted-source order
          std::vector<std::pair<Token, std::pair<std::size_t, std::size_t>>> elems;
          for (std::size_t ia = 0; ia < ea.size(); ++ia)
            for (std::size_t ib = 0; ib < eb.size(); ++ib)
              elems.push_back({detail::cat(ea[ia], eb[ib]), {ia, ib}});
          std::sort(elems.begin(), elems.end());
          for (std::size_t i = 0; i < elems.size(); ++i) {
            auto [ia, ib] = elems[i].second;
            uint32_t ja = a.maps[xa * da + ya][ia];
            uint32_t jb = b.maps[xb * db + yb][ib];
            Token target = detail::cat(a.dst.at(xa, ya)[ja], b.dst.at(xb, yb)[jb]);
            std::size_t j = detail::find_token(d.entries[p], target, used);
            used[j] = 1;
            r.maps[p][i] = static_cast<uint32_t>(j);
          }
        }
  return r;
}

// Horizontal composition as whisker-then-whisker; by interchange the other
// bracketing gives the same cell on normal forms.
inline TwoCell hcomp(const TwoCell& phi, const TwoCell& psi, Model model = Model::finmat) {
  return vcomp(whisker_right(phi, psi.src, model), whisker_left(phi.dst, psi, model));
}

// ---------------------------------------------------------------------------
// Equality with first-counterexample reporting.
// ---------------------------------------------------------------------------
struct CellDiff {
  enum Kind { boundary, map } kind;
  std::string detail;
};

inline std::optional<CellDiff> diff_two(const TwoCell& a, const TwoCell& b) {
  if (a.src != b.src)
    return CellDiff{CellDiff::boundary, "source 1-cells differ (" + a.src.src.show() + "→" +
                                            a.src.dst.show() + " vs " + b.src.src.show() + "→" +
                                            b.src.dst.show() + ")"};
  if (a.dst != b.dst) return CellDiff{CellDiff::boundary, "target 1-cells differ"};
  for (std::size_t p = 0; p < a.maps.size(); ++p)
    for (std::size_t i = 0; i < a.maps[p].size(); ++i)
      if (a.maps[p][i] != b.maps[p][i]) {
        std::ostringstream os;
        os << "entry " << a.src.show_entry_pos(p) << ", element " << show_token(a.src.entries[p][i])
           << ": lhs→" << show_token(a.dst.entries[p][a.maps[p][i]]) << ", rhs→"
           << show_token(b.dst.entries[p][b.maps[p][i]]);
        return CellDiff{CellDiff::map, os.str()};
      }
  return std::nullopt;
}

inline bool equal_two(const TwoCell& a, const TwoCell& b) { return !diff_two(a, b).has_value(); }

// Local posetality in rel: parallel 2-cells are equal, and existence is
// support inclusion.
inline bool rel_two_exists(const OneCell& src, const OneCell& dst) {
  if (src.src != dst.src || src.dst != dst.dst) return false;
  for (std::size_t p = 0; p < src.entries.size(); ++p)
    if (!src.entries[p].empty() && dst.entries[p].empty()) return false;
  return true;
}

}  // namespace skewcat
