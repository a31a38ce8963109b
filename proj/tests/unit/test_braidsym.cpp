#include <catch2/catch.hpp>

#include "klrbraid/braidsym.hpp"

using namespace klrbraid;

TEST_CASE("orientation of T_i against the adjoint actions", "[braidsym]") {
  for (const char* t : {"A2", "B2", "G2"}) {
    UqFull u(CartanDatum::from_type(t));
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
      auto r = orientation(u, i, j);
      INFO(t << " i=" << i << " j=" << j);
      CHECK(r.ti_is_ad);
      CHECK(r.ti_inv_is_ad_star);
      CHECK(r.ti_in_Ui);
      CHECK(r.ti_inv_in_iU);
      CHECK(r.sigma_mirror);
    }
  }
}

TEST_CASE("bimodule identities on random samples", "[braidsym]") {
  for (const char* t : {"A2", "B2"}) {
    UqFull u(CartanDatum::from_type(t));
    for (int i = 0; i < 2; ++i) {
      auto rep = verify_bimodule(u, i, 4, 6, 17 + i);
      for (const auto& c : rep.checks) {
        INFO(t << " i=" << i << ": " << c.name);
        CHECK(c.pass);
      }
      CHECK(rep.samples > 0);
    }
  }
}

TEST_CASE("kernel dimensions follow the PBW factorization", "[braidsym]") {
  for (const char* t : {"A2", "B2", "G2"}) {
    UqFull u(CartanDatum::from_type(t));
    const UqMinus& m = u.minus();
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 4; ++b)
        for (int i = 0; i < 2; ++i) {
          RootVec beta({a, b});
          int total = 0;
          for (int k = 0; k <= beta[i]; ++k) total += kernel_dim(m, i, beta - k * RootVec::simple(2, i));
          CHECK(total == m.dim(beta));
        }
  }
}

TEST_CASE("delta_char of simple reflections", "[braidsym]") {
  UqFull u(CartanDatum::from_type("A2"));
  auto d = delta_char(u, make_word({0}), 1, false);
  CHECK(u.minus().equal(d, uj_elem(u, 0, 1, true)));
  CHECK_THROWS_AS(delta_char(u, make_word({0}), 0, false), std::invalid_argument);
  // independent of the reduced word
  auto x = delta_char(u, make_word({0, 1}), 0, true);
  CHECK(u.minus().equal(x, FWordElem::word(make_word({1})) * (RationalQ(1L) - RationalQ::q_pow(2))));
}
