#include <catch2/catch.hpp>

#include "klrbraid/config.hpp"
#include "klrbraid/json_io.hpp"
#include "klrbraid/suites.hpp"

using namespace klrbraid;

TEST_CASE("config by type and bounds", "[config]") {
  const RunConfig cfg = parse_config("[cartan]\ntype = G2\n[bounds]\nheight = 5\ndegree = 20\n");
  CHECK(cfg.type == "G2");
  CHECK(cfg.height == 5);
  CHECK(cfg.degree == 20);
  CHECK(cfg.datum().rank() == 2);
  CHECK(cfg.datum().d(0) == 3);
}

TEST_CASE("config with an inline datum and scalars", "[config]") {
  const RunConfig cfg = parse_config(
      "[cartan]\nlabels = a b\ngcm = 2 -1, -2 2\nsymmetrizers = 2 1\n"
      "[scalars]\nt(a,b) = 3/2\n");
  const CartanDatum c = cfg.datum();
  CHECK(c.a(1, 0) == -2);
  CHECK(c.label(1) == "b");
  CHECK(cfg.scalars.t_of(0, 1) == mpq_class(3, 2));
  CHECK(cfg.scalars.t_of(1, 0) == 1);
}

TEST_CASE("config errors", "[config]") {
  CHECK_THROWS_AS(parse_config("[cartan]\ntype = E9\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[bounds]\nheight = 7\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[bounds]\ndegree = 25\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[bounds]\nheight = four\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[extra]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[scalars]\nt(1,1) = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[scalars]\nt(1,2) = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[scalars]\nt(1,3) = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[scalars]\ns(1,2,1,1) = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[cartan]\ntype = A1xA1\n[scalars]\nt(1,2) = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[cartan]\nlabels = a b\ngcm = 2 -1, -1\nsymmetrizers = 1 1\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/klrbraid.ini"), ConfigError);
}

TEST_CASE("json round trips", "[json]") {
  LaurentPoly p;
  p.add_term(-3, mpq_class(5, 7));
  p.add_term(4, mpq_class("123456789012345678901234567890"));
  CHECK(laurent_from_json(to_json(p)) == p);

  const RationalQ x = RationalQ::q_pow(3) / (RationalQ(1L) - RationalQ::q_pow(2));
  CHECK(rational_from_json(to_json(x)) == x);

  FWordElem f = FWordElem::word(make_word({0, 1, 1}), x);
  f.add_term(make_word({1, 0, 1}), RationalQ(-2L));
  CHECK(fword_from_json(to_json(f)) == f);
  CHECK(to_json(f)["terms"][0]["word"] == json({1, 2, 2}));

  const KLRAlgebra r(CartanDatum::from_type("B2"));
  const Word nu = make_word({0, 1, 1});
  const KLRElem y = r.mul(r.tau_e(make_word({1, 0, 1}), 0), r.poly_e(Poly::var(3, 2) * mpq_class(3), nu)) +
                    r.poly_e(Poly::var(3, 0), nu);
  CHECK(klr_from_json(r, to_json(r, y)) == y);
  CHECK_THROWS_AS(word_from_json(json({0})), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic in the seed", "[suites]") {
  SuiteParams p;
  p.cfg.type = "A2";
  p.cfg.seed = 7;
  const json a = to_json(run_suite("nf-oracle", p));
  const json b = to_json(run_suite("nf-oracle", p));
  CHECK(a == b);
  CHECK(a.at("pass").get<bool>());
  CHECK(a.at("suite") == "nf-oracle");
  CHECK(a.contains("certifies"));
  CHECK_THROWS(run_suite("no-such-suite", p));
}

TEST_CASE("KLR relations hold for non-default scalars", "[suites]") {
  SuiteParams p;
  p.cfg = parse_config("[cartan]\ntype = B2\n[scalars]\nt(1,2) = 3/2\nt(2,1) = -5\n");
  const SuiteReport rep = run_suite("klr-relations", p);
  CHECK(rep.pass());
  const SuiteReport nf = run_suite("nf-oracle", p);
  CHECK(nf.pass());
}
