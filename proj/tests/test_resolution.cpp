#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charpreg/hilbert.hpp"
#include "charpreg/parse.hpp"
#include "charpreg/resolution.hpp"
#include "oracles.hpp"

using namespace charpreg;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> exprs) {
  std::vector<Polynomial> gens;
  for (const char* e : exprs) gens.push_back(parse_polynomial(R, e));
  return Ideal(R, std::move(gens));
}

void check_chain_consistency(const Resolution& res) {
  for (int i = 0; i < res.length(); ++i) {
    GradedMap m = res.map_at(i);  // validates column grading internally
    if (i + 1 < res.length()) {
      for (const auto& c : res.maps[static_cast<std::size_t>(i) + 1])
        CHECK(m.apply(c).is_zero());
    }
  }
}

// Hilbert function of the resolved quotient must match both the alternating
// Betti sum and independent monomial-count linear algebra.
void check_hilbert_consistency(const Ideal& I, const BettiTable& b, int reg) {
  const RingPtr& R = I.ring();
  for (int d = 0; d <= 3 * reg + 2; ++d) {
    long long viaBetti = oracle::betti_hilbert_value(b, R->arity(), d);
    long long viaBrute = oracle::quotient_piece_dim(R, I.generators(), d);
    long long viaSeries = hilbert_function(I, d);
    CHECK(viaBetti == viaBrute);
    CHECK(viaBetti == viaSeries);
  }
}

}  // namespace

TEST_CASE("resolution of a principal ideal") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y"});
  Ideal I = ideal_of(R, {"x"});
  Resolution res = free_resolution(I);
  BettiTable b = betti(res);
  REQUIRE(b.complete);
  REQUIRE(b.twists == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(regularity(b) == 0);
  CHECK(regularity_of_quotient(I) == 0);
  CHECK(regularity_of_ideal(I) == 1);
  check_chain_consistency(res);
}

TEST_CASE("koszul complex of the variables") {
  RingPtr R = Ring::make_grevlex(3, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x", "y", "z"});
  BettiTable b = betti(free_resolution(I));
  REQUIRE(b.complete);
  CHECK(b.twists ==
        std::vector<std::vector<int>>{{0}, {1, 1, 1}, {2, 2, 2}, {3}});
  CHECK(regularity(b) == 0);
}

TEST_CASE("complete intersections x^a, y^b") {
  RingPtr R = Ring::make_grevlex(3, {"x", "y", "z"});
  for (auto [a, bexp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3},
                                                         {4, 5}}) {
    std::string fa = "x^" + std::to_string(a);
    std::string fb = "y^" + std::to_string(bexp);
    Ideal I(R, {parse_polynomial(R, fa), parse_polynomial(R, fb)});
    BettiTable b = betti(free_resolution(I));
    REQUIRE(b.complete);
    CHECK(b.twists == std::vector<std::vector<int>>{
                          {0}, {a, bexp}, {a + bexp}});
    CHECK(regularity(b) == a + bexp - 2);
    CHECK(regularity_of_quotient(I) == a + bexp - 2);
    check_hilbert_consistency(I, b, a + bexp - 2);
  }
}

TEST_CASE("regularity of the whole ring is zero") {
  RingPtr R = Ring::make_grevlex(5, {"x", "y"});
  Ideal none = Ideal::zero(R);
  BettiTable b = betti(free_resolution(none));
  REQUIRE(b.complete);
  CHECK(b.twists == std::vector<std::vector<int>>{{0}});
  CHECK(regularity(b) == 0);
  CHECK(regularity_of_quotient(none) == 0);
  CHECK_THROWS_AS(regularity_of_ideal(none), UsageError);
}

TEST_CASE("hilbert-burch shape for the determinantal ideal") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y", "z", "u", "v", "w"});
  Ideal I = ideal_of(R, {"y*u - x*v", "z*u - x*w", "z*v - y*w"});
  BettiTable b = betti(free_resolution(I));
  REQUIRE(b.complete);
  CHECK(b.twists == std::vector<std::vector<int>>{{0}, {2, 2, 2}, {3, 3}});
  CHECK(regularity(b) == 1);
  check_hilbert_consistency(I, b, 1);
}

TEST_CASE("squares of the maximal ideal in two variables") {
  RingPtr R = Ring::make_grevlex(3, {"x", "y"});
  Ideal I = ideal_of(R, {"x^2", "x*y", "y^2"});
  BettiTable b = betti(free_resolution(I));
  REQUIRE(b.complete);
  CHECK(b.twists == std::vector<std::vector<int>>{{0}, {2, 2, 2}, {3, 3}});
  CHECK(regularity(b) == 1);
  CHECK(minimal_generator_degrees(I) == std::vector<int>{2, 2, 2});
  check_hilbert_consistency(I, b, 1);
}

TEST_CASE("redundant generators do not change the betti table") {
  RingPtr R = Ring::make_grevlex(5, {"x", "y"});
  Ideal lean = ideal_of(R, {"x"});
  Ideal fat = ideal_of(R, {"x", "x", "x^2", "3*x"});
  CHECK(minimal_generator_degrees(fat) == std::vector<int>{1});
  CHECK(betti(free_resolution(fat)).twists ==
        betti(free_resolution(lean)).twists);
}

TEST_CASE("minimalize strips unit pivots and fixes adjacent maps") {
  RingPtr R = Ring::make_grevlex(7, {"x", "y"});
  // presentation of R/(x) padded with a unit row/column pair
  FreeModule F0({0, 1});
  FreeModule F1({1, 1});
  std::vector<FreeVector> columns{
      FreeVector(R, F0, {parse_polynomial(R, "x"), Polynomial::zero(R)}),
      FreeVector(R, F0,
                 {parse_polynomial(R, "y"), Polynomial::constant(R, 1)})};
  Resolution raw;
  raw.ring = R;
  raw.modules = {F0, F1};
  raw.maps = {columns};
  raw.complete = true;
  minimalize(raw);
  BettiTable b = betti(raw);
  CHECK(b.twists == std::vector<std::vector<int>>{{0}, {1}});
  // the unit direction and its target generator are gone; the surviving
  // column still presents (x) after the row operation mixes it
  REQUIRE(raw.maps.size() == 1);
  REQUIRE(raw.maps[0].size() == 1);
  CHECK(raw.maps[0][0].coord(0).monic() == parse_polynomial(R, "x"));
}

TEST_CASE("betti table is invariant under the s-pair strategy") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y", "z", "u", "v", "w"});
  Ideal I = ideal_of(R, {"y*u - x*v", "z*u - x*w", "z*v - y*w"});
  ResolutionOptions normal;
  ResolutionOptions inorder;
  inorder.gb.strategy = SPairStrategy::input_order;
  BettiTable a = betti(free_resolution(I, normal));
  BettiTable b = betti(free_resolution(I, inorder));
  CHECK(a.twists == b.twists);
  CHECK(a.complete == b.complete);
}

TEST_CASE("random homogeneous ideals resolve consistently") {
  std::mt19937 rng(6061);
  RingPtr R = Ring::make_grevlex(3, {"x", "y", "z"});
  for (int it = 0; it < 6; ++it) {
    std::vector<Polynomial> gens;
    int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i)
      gens.push_back(oracle::random_homogeneous(
          R, 1 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 3),
          rng));
    Ideal I(R, gens);
    if (I.is_zero()) continue;
    Resolution res = free_resolution(I);
    BettiTable b = betti(res);
    REQUIRE(b.complete);
    check_chain_consistency(res);
    int reg = regularity(b);
    check_hilbert_consistency(I, b, reg);
    // length obeys the global bound for three variables
    CHECK(b.length() <= 3);
  }
}

TEST_CASE("length guard is an internal error") {
  RingPtr R = Ring::make_grevlex(3, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x", "y", "z"});
  ResolutionOptions opts;
  opts.max_length = 1;
  CHECK_THROWS_AS(free_resolution(I, opts), InvariantViolation);
}

TEST_CASE("regularity rejects truncated or empty tables") {
  BettiTable truncated;
  truncated.twists = {{0}, {2, 2}};
  truncated.complete = false;
  CHECK_THROWS_AS(regularity(truncated), UsageError);
  BettiTable empty;
  empty.complete = true;
  CHECK_THROWS_AS(regularity(empty), UsageError);
}

TEST_CASE("resolution needs homogeneous input") {
  RingPtr R = Ring::make_grevlex(5, {"x", "y"});
  CHECK_THROWS_AS(free_resolution(ideal_of(R, {"x^2 - y"})), UsageError);
  CHECK_THROWS_AS(regularity_of_quotient(ideal_of(R, {"x^2 - y"})),
                  UsageError);
}

TEST_CASE("hilbert series and dimension") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x*y", "y*z"});
  for (int d = 0; d <= 6; ++d)
    CHECK(hilbert_function(I, d) ==
          oracle::quotient_piece_dim(R, I.generators(), d));
  CHECK(krull_dimension(I) == 2);
  CHECK(krull_dimension(Ideal::zero(R)) == 3);
  CHECK(krull_dimension(Ideal::unit(R)) == -1);
  CHECK(krull_dimension(ideal_of(R, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(ideal_of(R, {"x^2", "y^3", "z"})) == 0);
}

TEST_CASE("regularity of monomial ideal families") {
  RingPtr R = Ring::make_grevlex(2, {"x", "y"});
  // powers of the maximal ideal: reg R/m^k = k - 1
  for (int k = 1; k <= 4; ++k) {
    std::vector<Polynomial> gens;
    for (int a = 0; a <= k; ++a) {
      std::string s = "x^" + std::to_string(a) + "*y^" + std::to_string(k - a);
      gens.push_back(parse_polynomial(R, s));
    }
    Ideal I(R, gens);
    CHECK(regularity_of_quotient(I) == k - 1);
  }
}
