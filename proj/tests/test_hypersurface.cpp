#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charpreg/determinantal.hpp"
#include "charpreg/hypersurface.hpp"
#include "charpreg/parse.hpp"
#include "oracles.hpp"

using namespace charpreg;

namespace {

bool same_span_over(const HypersurfaceContext& S,
                    std::span<const FreeVector> a,
                    std::span<const FreeVector> b) {
  for (const auto& v : a)
    if (!module_contains_over(S, b, v)) return false;
  for (const auto& v : b)
    if (!module_contains_over(S, a, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("context rejects degenerate equations") {
  RingPtr R = Ring::make_grevlex(5, {"x", "y"});
  CHECK_THROWS_AS(HypersurfaceContext(R, Polynomial::zero(R)), UsageError);
  CHECK_THROWS_AS(HypersurfaceContext(R, Polynomial::constant(R, 2)),
                  UsageError);
  CHECK_THROWS_AS(HypersurfaceContext(R, parse_polynomial(R, "x^2 - y")),
                  UsageError);
}

TEST_CASE("reduction modulo the equation") {
  RingPtr R = Ring::make_grevlex(3, {"x", "y"});
  HypersurfaceContext S(R, parse_polynomial(R, "x^2"));
  CHECK(S.reduce(parse_polynomial(R, "x^2")).is_zero());
  CHECK(S.reduce(parse_polynomial(R, "x^3 + x*y")) ==
        parse_polynomial(R, "x*y"));
  CHECK(S.equation() == parse_polynomial(R, "x^2"));
}

TEST_CASE("k[x]/(x^2) resolving the residue field is purely periodic") {
  RingPtr R = Ring::make_grevlex(2, {"x"});
  HypersurfaceContext S(R, parse_polynomial(R, "x^2"));
  std::vector<FreeVector> pres{FreeVector::wrap(parse_polynomial(R, "x"))};
  PeriodicResolution pr =
      resolve_over_hypersurface(S, FreeModule::free_of_rank(1),
                                std::move(pres), 6);
  CHECK_FALSE(pr.res.complete);
  BettiTable b = betti(pr.res);
  REQUIRE(b.twists.size() == 7);
  for (int i = 0; i <= 6; ++i) {
    REQUIRE(b.twists[static_cast<std::size_t>(i)].size() == 1);
    CHECK(b.twists[static_cast<std::size_t>(i)][0] == i);
  }
  REQUIRE(pr.period.start.has_value());
  CHECK(*pr.period.start == 0);
  CHECK(pr.period.shift == 2);
}

TEST_CASE("a unit column over the hypersurface has no syzygies") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y"});
  HypersurfaceContext S(R, parse_polynomial(R, "y"));
  std::vector<FreeVector> cols{FreeVector::wrap(parse_polynomial(R, "x"))};
  // x is a nonzerodivisor in k[x,y]/(y) = k[x]
  CHECK(syzygy_generators_over(S, cols).empty());
}

TEST_CASE("empty presentation resolves a free module") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y"});
  HypersurfaceContext S(R, parse_polynomial(R, "y"));
  PeriodicResolution pr = resolve_over_hypersurface(
      S, FreeModule::free_of_rank(2), {}, 5);
  CHECK(pr.res.complete);
  CHECK(pr.res.length() == 0);
  CHECK_FALSE(pr.period.start.has_value());
}

TEST_CASE("finite resolution over the hypersurface reports no period") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y"});
  HypersurfaceContext S(R, parse_polynomial(R, "y"));
  std::vector<FreeVector> pres{FreeVector::wrap(parse_polynomial(R, "x"))};
  PeriodicResolution pr = resolve_over_hypersurface(
      S, FreeModule::free_of_rank(1), std::move(pres), 6);
  CHECK(pr.res.complete);
  CHECK(pr.res.length() == 1);
  BettiTable b = betti(pr.res);
  CHECK(b.twists == std::vector<std::vector<int>>{{0}, {1}});
  CHECK_FALSE(pr.period.start.has_value());
}

TEST_CASE("step count below the detection window is rejected") {
  RingPtr R = Ring::make_grevlex(2, {"x"});
  HypersurfaceContext S(R, parse_polynomial(R, "x^2"));
  std::vector<FreeVector> pres{FreeVector::wrap(parse_polynomial(R, "x"))};
  CHECK_THROWS_AS(resolve_over_hypersurface(S, FreeModule::free_of_rank(1),
                                            std::move(pres), 3),
                  UsageError);
}

TEST_CASE("determinantal quotient matches the closed-form shape") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}}) {
    DeterminantalSetup D = determinantal_setup(p);
    unsigned q = static_cast<unsigned>(prime_power_checked(p, e));
    HypersurfaceContext S(D.ring, D.g1);
    std::vector<FreeVector> pres{FreeVector::wrap(D.g2.frobenius(e)),
                                 FreeVector::wrap(D.g3.frobenius(e))};
    PeriodicResolution pr = resolve_over_hypersurface(
        S, FreeModule::free_of_rank(1), std::move(pres), 6);
    BettiTable want = predicted_betti(q, 6);
    BettiTable got = betti(pr.res);
    CHECK(got.twists == want.twists);
    CHECK_FALSE(pr.res.complete);
    REQUIRE(pr.period.start.has_value());
    CHECK(*pr.period.start == 3);
    CHECK(pr.period.shift == 2);
  }
}

TEST_CASE("first syzygies of the bracket pair match the closed forms") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}}) {
    DeterminantalSetup D = determinantal_setup(p);
    HypersurfaceContext S(D.ring, D.g1);
    std::vector<FreeVector> cols{FreeVector::wrap(D.g2.frobenius(e)),
                                 FreeVector::wrap(D.g3.frobenius(e))};
    std::vector<FreeVector> got = syzygy_generators_over(S, cols);
    std::vector<FreeVector> want = predicted_first_syzygies(D, e);
    for (const auto& v : want) {
      // each closed-form column really is a syzygy over S
      Polynomial combo = v.coord(0).times(cols[0].coord(0))
                             .plus(v.coord(1).times(cols[1].coord(0)));
      CHECK(S.reduce(combo).is_zero());
    }
    CHECK(same_span_over(S, got, want));
  }
}

TEST_CASE("second syzygies match the closed forms") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {3, 1}}) {
    DeterminantalSetup D = determinantal_setup(p);
    HypersurfaceContext S(D.ring, D.g1);
    std::vector<FreeVector> first = predicted_first_syzygies(D, e);
    std::vector<FreeVector> got = syzygy_generators_over(S, first);
    std::vector<FreeVector> want = predicted_second_syzygies(D, e);
    for (const auto& v : want) {
      FreeVector image(D.ring, first[0].ambient());
      for (std::size_t j = 0; j < first.size(); ++j)
        image = image.plus(first[j].times_poly(v.coord(static_cast<int>(j))));
      CHECK(S.reduce(image).is_zero());
    }
    CHECK(same_span_over(S, got, want));
  }
}
