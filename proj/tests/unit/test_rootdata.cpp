#include <catch2/catch.hpp>

#include "klrbraid/rootdata.hpp"
#include "oracles.hpp"

using namespace klrbraid;

TEST_CASE("Cartan data validate their axioms", "[rootdata]") {
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, -1}, {-1, 2}}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, 0}, {-1, 2}}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum({"1", "1"}, {{2, -1}, {-1, 2}}, {1, 1}), std::invalid_argument);
  CHECK_NOTHROW(CartanDatum({"a", "b"}, {{2, -1}, {-3, 2}}, {3, 1}));
}

TEST_CASE("bilinear form on simple roots", "[rootdata]") {
  auto g2 = CartanDatum::from_type("G2");
  CHECK(g2.bilin_simple(0, 0) == 6);
  CHECK(g2.bilin_simple(1, 1) == 2);
  CHECK(g2.bilin_simple(0, 1) == -3);
  CHECK(g2.bilin_simple(1, 0) == -3);
}

TEST_CASE("Weyl group action", "[rootdata]") {
  auto g2 = CartanDatum::from_type("G2");
  // s2 s1 (alpha_2) = s2(alpha_1 + alpha_2) = alpha_1 + 2 alpha_2
  CHECK(g2.weyl_act(make_word({1, 0}), RootVec::simple(2, 1)) == RootVec({1, 2}));
  auto a2 = CartanDatum::from_type("A2");
  Weight rho({1, 1});
  CHECK(a2.weyl_act(make_word({0, 1, 0}), rho) == Weight({-1, -1}));
}

TEST_CASE("reduced words", "[rootdata]") {
  auto a3 = CartanDatum::from_type("A3");
  CHECK(a3.reduced_words(make_word({0, 1, 0, 2, 1, 0})).size() == 16);
  auto a2 = CartanDatum::from_type("A2");
  auto w0 = a2.reduced_words(make_word({0, 1, 0}));
  CHECK(w0 == std::vector<Word>{make_word({0, 1, 0}), make_word({1, 0, 1})});
  auto g2 = CartanDatum::from_type("G2");
  CHECK(g2.reduced_words(make_word({0, 1, 0, 1, 0, 1})).size() == 2);
  CHECK(g2.non_reduced_witness(make_word({0, 1, 1})) == 2);
  CHECK_THROWS_AS(a2.reduced_words(make_word({0, 1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(a2.reduced_words(make_word({0, 1}), 9), BoundExceeded);
}

TEST_CASE("positive roots", "[rootdata]") {
  const std::vector<std::pair<const char*, size_t>> counts{
      {"A1xA1", 2}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}};
  for (auto [t, n] : counts) {
    auto c = CartanDatum::from_type(t);
    auto roots = c.positive_roots();
    CHECK(roots.size() == n);
    for (const auto& r : roots) CHECK(oracle::kostant_partitions(c, r.coords()) >= 1);
  }
  auto g2 = CartanDatum::from_type("G2");
  CHECK(g2.positive_roots().back() == RootVec({2, 3}));
  CHECK(CartanDatum::from_type("G2").is_finite_type());
  CHECK_FALSE(CartanDatum({"1", "2"}, {{2, -2}, {-2, 2}}, {1, 1}).is_finite_type());
}
