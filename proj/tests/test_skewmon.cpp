#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "skewcat/oplax.hpp"

using namespace skewcat;
using testing::all_monoids;
using testing::point_data_monoidales;
using testing::xor_monoidale;

TEST_CASE("induced skew monoidales pass all five axioms, sizes 1..4, all points") {
  for (uint32_t n = 1; n <= 4; ++n)
    for (std::size_t p = 0; p < n; ++p) {
      auto adj = point_adjunction(Obj::atom(n, "R"), p);
      auto ind = induced_skew_monoidale(adj);
      auto rep = check_skew_monoidale(ind);
      INFO("size " << n << " point " << p << ": "
                   << (rep.failed() ? rep.failed()->name + " " + rep.failed()->detail : ""));
      CHECK(rep.all_passed());
    }
}

TEST_CASE("induced structure on size 2: product shape and non-invertible rho") {
  auto adj = point_adjunction(Obj::atom(2, "R"), 0);
  auto ind = induced_skew_monoidale(adj);
  // m((a,b),c) is a singleton iff a=0 and b=c
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(ind.m.card(a * 2 + b, c) == ((a == 0 && b == c) ? 1u : 0u));
  CHECK_FALSE(is_invertible(ind.rho));
  CHECK_FALSE(is_monoidale(to_standard(ind)));
  auto one = induced_skew_monoidale(point_adjunction(Obj::atom(1, "R"), 0));
  CHECK(is_monoidale(to_standard(one)));
}

TEST_CASE("induced structure's kappa presentation has kappa = id") {
  auto adj = point_adjunction(Obj::atom(3, "R"), 1);
  auto ind = induced_skew_monoidale(adj);
  // lambda = eta⊗1, and its mate is the identity of i*⊗1
  auto lambda = kappa_to_lambda(ind.kappa, adj);
  CHECK(equal_two(lambda, tensor_two(adj.unit, identity_two(identity_cell(adj.carrier())))));
  CHECK(equal_two(lambda_to_kappa(lambda, adj, ind.m), identity_two(ind.m)));
}

TEST_CASE("finite monoids give monoidales that pass everything") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto monoids = all_monoids(n);
    REQUIRE(!monoids.empty());
    for (const auto& [mul, e] : monoids) {
      auto sm = monoid_monoidale(n, mul, e);
      CHECK(is_monoidale(sm));
      auto alt = to_kappa(sm);
      auto rep = check_skew_monoidale(alt);
      INFO("monoid of size " << n << ", "
                             << (rep.failed() ? rep.failed()->name + " " + rep.failed()->detail
                                              : ""));
      CHECK(rep.all_passed());
    }
  }
}

TEST_CASE("presentations round trip") {
  SECTION("induced structure") {
    auto adj = point_adjunction(Obj::atom(2, "R"), 0);
    auto ind = induced_skew_monoidale(adj);
    auto back = to_kappa(to_standard(ind));
    CHECK(back.m == ind.m);
    CHECK(equal_two(back.kappa, ind.kappa));
    CHECK(equal_two(back.alpha, ind.alpha));
    CHECK(equal_two(back.rho, ind.rho));
  }
  SECTION("size 1") {
    auto adj = point_adjunction(Obj::atom(1, "R"), 0);
    auto ind = induced_skew_monoidale(adj);
    auto back = to_kappa(to_standard(ind));
    CHECK(equal_two(back.kappa, ind.kappa));
  }
  SECTION("XOR monoidale: kappa is the eps-based composite") {
    auto alt = xor_monoidale();
    auto expect = lambda_to_kappa(identity_two(identity_cell(alt.M)), alt.adj, alt.m);
    CHECK(equal_two(alt.kappa, expect));
    auto back = to_standard(alt);
    CHECK(equal_two(back.lambda, identity_two(identity_cell(alt.M))));
  }
  SECTION("data monoidales round trip too") {
    for (const auto& sm : point_data_monoidales()) {
      auto back = to_kappa(to_standard(sm));
      CHECK(equal_two(back.kappa, sm.kappa));
      CHECK(equal_two(back.alpha, sm.alpha));
    }
  }
  SECTION("enveloping unit is not a point") {
    auto env = enveloping_monoidale(canonical_biduality(Obj::atom(2, "R")));
    CHECK_THROWS_AS(to_kappa(env), Error);
  }
}

TEST_CASE("enveloping monoidales are monoidales and pass the axioms") {
  for (uint32_t n = 1; n <= 3; ++n) {
    auto bid = canonical_biduality(Obj::atom(n, "R"));
    auto env = enveloping_monoidale(bid);
    CHECK(is_monoidale(env));
    // product entry count at ((a,b,c,d),(x,y)): singleton iff b=c, a=x, d=y
    const std::size_t N = n;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c)
          for (std::size_t d = 0; d < N; ++d)
            for (std::size_t x = 0; x < N; ++x)
              for (std::size_t y = 0; y < N; ++y) {
                std::size_t row = ((a * N + b) * N + c) * N + d;
                bool one = (b == c && a == x && d == y);
                CHECK(env.m.card(row, x * N + y) == (one ? 1u : 0u));
              }
    CHECK(env.u == bid.n);
  }
}

TEST_CASE("data monoidales on the point exist and detect mutations") {
  auto found = point_data_monoidales();
  REQUIRE(!found.empty());
  auto sm = found.front();
  CHECK(check_skew_monoidale(sm).all_passed());

  SECTION("a swapped token in alpha fails SKM1 or SKM3' with a located entry") {
    auto mut = sm;
    REQUIRE(mut.alpha.maps[0].size() >= 2);
    std::swap(mut.alpha.maps[0][0], mut.alpha.maps[0][1]);
    auto rep = check_skew_monoidale(mut);
    CHECK_FALSE(rep.all_passed());
    REQUIRE(rep.failed() != nullptr);
    CHECK(rep.failed()->detail.find("entry") != std::string::npos);
  }
  SECTION("a retargeted kappa flips SKM2'") {
    auto mut = sm;
    REQUIRE(mut.kappa.dst.card(0, 0) == 2);
    mut.kappa.maps[0][0] = 1 - mut.kappa.maps[0][0];
    auto rep = check_skew_monoidale(mut);
    bool skm2_or_3_failed = false;
    for (const auto& ax : rep.axioms)
      if ((ax.name == "SKM2'" || ax.name == "SKM3'") && !ax.passed) skm2_or_3_failed = true;
    CHECK(skm2_or_3_failed);
  }
  SECTION("a wrong-boundary rho fails SKM5' with a boundary diagnosis") {
    auto mut = sm;
    mut.rho = identity_two(identity_cell(sm.M));
    auto rep = check_skew_monoidale(mut);
    auto it = std::find_if(rep.axioms.begin(), rep.axioms.end(),
                           [](const AxiomResult& r) { return r.name == "SKM5'"; });
    REQUIRE(it != rep.axioms.end());
    CHECK_FALSE(it->passed);
  }
}

TEST_CASE("XOR monoidale passes all five axioms") {
  auto rep = check_skew_monoidale(xor_monoidale());
  INFO((rep.failed() ? rep.failed()->name + " " + rep.failed()->detail : std::string{}));
  CHECK(rep.all_passed());
}
