#include <catch2/catch_amalgamated.hpp>

#include "skewcat/catalog.hpp"
#include "skewcat/duality.hpp"

using namespace skewcat;

namespace {

Env xor_env() {
  // Z/2 with xor as multiplication, point 0; kappa presentation.
  Env env;
  Obj M = Obj::atom(2, "M");
  env.objs["M"] = M;
  auto m = delta_cell(M * M, M, {0, 1, 1, 0});
  env.ones["m"] = m;
  auto adj = point_adjunction(M, 0);
  env.ones["i"] = adj.left;
  env.ones["istar"] = adj.right;
  env.twos["eta"] = adj.unit;
  env.twos["eps"] = adj.counit;
  auto src = compose(tensor(identity_cell(M), m), m);
  env.twos["alpha"] = identity_two(src);
  env.twos["kappa"] = structural_two(tensor(adj.right, identity_cell(M)), m);
  env.twos["rho"] = structural_two(compose(tensor(identity_cell(M), adj.left), m),
                                   identity_cell(M));
  return env;
}

}  // namespace

TEST_CASE("boundary inference") {
  Env env = xor_env();
  SECTION("identity cell on a generator") {
    auto [s, t] = infer_boundary(id2(g1("m")), env);
    CHECK(s == env.ones["m"]);
    CHECK(t == env.ones["m"]);
  }
  SECTION("incomposable vertical composite is rejected") {
    CHECK_THROWS_AS(eval_two(vc({g2("kappa"), g2("rho")}), env), Error);
  }
  SECTION("the LHS of SKM3' runs from (1⊗m);(i*⊗1) to (m⊗1);m") {
    auto eq = catalog::skm3p();
    auto [s, t] = infer_boundary(eq.lhs, env);
    Obj M = env.objs["M"];
    auto im = identity_cell(M);
    CHECK(s == compose(tensor(im, env.ones["m"]), tensor(env.ones["istar"], im)));
    CHECK(t == compose(tensor(env.ones["m"], im), env.ones["m"]));
  }
}

TEST_CASE("evaluation is compositional") {
  Env env = xor_env();
  auto a = g2("kappa");
  auto b = id2(g1("m"));
  auto direct = eval_two(vc({a, b}), env);
  auto pieces = vcomp(eval_two(a, env), eval_two(b, env));
  CHECK(equal_two(direct, pieces));
}

TEST_CASE("structural isos") {
  Env env = xor_env();
  SECTION("interchange square evaluates to a bijection") {
    // (1⊗m);(i*⊗1) vs (i*⊗1⊗1);m
    auto e1 = seq({ten({id1(ow("M")), g1("m")}), ten({g1("istar"), id1(ow("M"))})});
    auto e2 = seq({ten({g1("istar"), id1(ow("M")), id1(ow("M"))}), g1("m")});
    auto cell = structural_iso(e1, e2, env);
    CHECK(is_invertible(cell));
    CHECK(cell.src == eval_one(e1, env));
    CHECK(cell.dst == eval_one(e2, env));
  }
  SECTION("distinct normal forms are rejected") {
    auto e1 = g1("m");
    auto e2 = seq({ten({g1("istar"), id1(ow("M")), id1(ow("M"))}), g1("m")});
    CHECK_THROWS_AS(structural_iso(e1, e2, env), Error);
  }
  SECTION("unit and associativity reshuffles are identities") {
    auto e1 = seq({g1("m"), id1(ow("M"))});
    auto cell = structural_iso(e1, g1("m"), env);
    CHECK(equal_two(cell, identity_two(env.ones["m"])));
  }
  SECTION("data blocks are permuted, not fixed") {
    Env denv;
    Obj X = Obj::atom(1, "X");
    denv.objs["X"] = X;
    denv.ones["f"] = make_generator("f", X, X, {2});
    denv.ones["g"] = make_generator("g", X, X, {2});
    // f⊗g vs (f⊗1);(1⊗g) vs (1⊗g);(f⊗1): all planar-equal
    auto e1 = ten({g1("f"), g1("g")});
    auto e2 = seq({ten({g1("f"), id1(ow("X"))}), ten({id1(ow("X")), g1("g")})});
    auto e3 = seq({ten({id1(ow("X")), g1("g")}), ten({g1("f"), id1(ow("X"))})});
    auto c12 = structural_iso(e1, e2, denv);
    auto c13 = structural_iso(e1, e3, denv);
    CHECK(is_invertible(c12));
    CHECK(is_invertible(c13));
    // e3 evaluates tokens in (g,f) order, so the iso swaps the blocks
    auto v1 = eval_one(e1, denv);
    auto v3 = eval_one(e3, denv);
    CHECK(v1 != v3);
    for (std::size_t i = 0; i < 4; ++i) {
      Token t = v1.entries[0][i];
      std::swap(t[0], t[1]);
      CHECK(v3.entries[0][c13.maps[0][i]] == t);
    }
  }
}

TEST_CASE("check_equation on the XOR monoidale") {
  Env env = xor_env();
  SECTION("SKM axioms hold") {
    for (const auto& eq : catalog::skew_monoidale()) {
      auto v = check_equation(eq, env);
      INFO(eq.name << ": " << v.detail);
      CHECK(v.holds);
    }
  }
  SECTION("a trivial equation holds") {
    Equation eq{"same", g2("kappa"), g2("kappa")};
    CHECK(check_equation(eq, env).holds);
  }
}

TEST_CASE("a corrupted associator fails with a located counterexample") {
  // one-point carrier with a two-element product entry, so the pentagon has
  // room for a genuine mutation
  Obj X = Obj::atom(1, "X");
  Env denv;
  denv.objs["M"] = X;
  auto m = make_generator("md", X * X, X, {2});
  denv.ones["m"] = m;
  auto good = structural_iso(seq({ten({id1(ow("M")), g1("m")}), g1("m")}),
                             seq({ten({g1("m"), id1(ow("M"))}), g1("m")}), denv);
  denv.twos["alpha"] = good;
  Equation pentagon = catalog::skm1();
  CHECK(check_equation(pentagon, denv).holds);
  auto corrupt = good;
  std::swap(corrupt.maps[0][0], corrupt.maps[0][1]);
  denv.twos["alpha"] = corrupt;
  auto v = check_equation(pentagon, denv);
  CHECK_FALSE(v.holds);
  CHECK(v.detail.find("entry") != std::string::npos);
}

TEST_CASE("check_equation is symmetric") {
  Env env = xor_env();
  auto eq = catalog::skm3p();
  Equation flipped{"SKM3'flip", eq.rhs, eq.lhs};
  CHECK(check_equation(eq, env).holds == check_equation(flipped, env).holds);
}
