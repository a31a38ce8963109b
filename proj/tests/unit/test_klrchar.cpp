#include <catch2/catch.hpp>

#include "klrbraid/klrchar.hpp"
#include "oracles.hpp"

using namespace klrbraid;

namespace {

Word w(std::initializer_list<int> l) { return make_word(l); }

RationalQ inv_one_minus(int k) { return (RationalQ(1L) - RationalQ::q_pow(k)).inverse(); }

}  // namespace

TEST_CASE("closed-form Hilbert series", "[klrchar]") {
  KLRAlgebra a2(CartanDatum::from_type("A2"));
  CHECK(hilbert_full(a2, w({0}), w({0})) == inv_one_minus(2));
  CHECK(hilbert_full(a2, w({0, 1}), w({1, 0})) == RationalQ::q_pow(1) * inv_one_minus(2) * inv_one_minus(2));
  KLRAlgebra b2(CartanDatum::from_type("B2"));
  for (int i = 0; i < 2; ++i) {
    const int d = b2.datum().d(i);
    const Word ii = w({i, i});
    CHECK(hilbert_full(b2, ii, ii) ==
          (RationalQ(1L) + RationalQ::q_pow(-2 * d)) * inv_one_minus(2 * d) * inv_one_minus(2 * d));
  }
  CHECK(hilbert_full(a2, w({0, 1}), w({0, 0})).is_zero());
}

TEST_CASE("Hilbert series match normal-form counts", "[klrchar]") {
  for (const char* type : {"A2", "B2"}) {
    KLRAlgebra r(CartanDatum::from_type(type));
    const RootVec beta{2, 1};
    for (const auto& s : r.sequences(beta))
      for (const auto& t : r.sequences(beta)) {
        const GradedSeries count = hilbert_count(r, s, t, -12, 12);
        CHECK(series_truncate(hilbert_full(r, s, t), -12, 12) == count);
      }
  }
  // independent expansion of 1/(1-q^2)^2 against the normal-form count
  KLRAlgebra a2(CartanDatum::from_type("A2"));
  const auto coeffs = oracle::power_series({{0, 1}}, {{0, 1}, {2, -2}, {4, 1}}, 12);
  const GradedSeries count = hilbert_count(a2, w({0, 1}), w({0, 1}), 0, 12);
  for (int k = 0; k <= 12; ++k) CHECK(mpq_class(count.at(k)) == coeffs[k]);
}

TEST_CASE("character solve", "[klrchar]") {
  UqFull u(CartanDatum::from_type("A2"));
  KLRAlgebra r(u.datum());
  const UqMinus& m = u.minus();
  for (int i = 0; i < 2; ++i) {
    CharVector c = regular_character(r, w({i}), 0, 12);
    const ChiSolveResult s = chi_solve(m, c);
    REQUIRE(s.ok);
    CHECK(m.equal(s.chi, m.gen(i)));
  }
  CharVector zero{RootVec{1, 1}, {}};
  const ChiSolveResult z = chi_solve(m, zero);
  REQUIRE(z.ok);
  CHECK(m.is_zero(z.chi));

  const ChiSolveResult col = chi_solve(m, regular_character(r, w({0, 1}), 0, 12));
  REQUIRE(col.ok);
  CHECK(m.equal(col.chi, FWordElem::word(w({0, 1}))));

  CharVector bad{RootVec{1, 0}, {}};
  bad.series[w({0})] = series_truncate(RationalQ(1L), 0, 4);
  bad.series[w({0})].closed_form.reset();
  CHECK_FALSE(chi_solve(m, bad).ok);
}

TEST_CASE("reconstruction of truncated characters", "[klrchar]") {
  KLRAlgebra r(CartanDatum::from_type("B2"));
  CharVector c = regular_character(r, w({0, 1}), -4, 20);
  std::map<Word, RationalQ> want;
  for (auto& [nu, s] : c.series) {
    want[nu] = *s.closed_form;
    s.closed_form.reset();
  }
  REQUIRE(reconstruct(r.datum(), c));
  for (const auto& [nu, s] : c.series) CHECK(*s.closed_form == want[nu]);
}

TEST_CASE("restriction to e(i, *)", "[klrchar]") {
  for (const char* type : {"A2", "B2", "G2"}) {
    UqFull u(CartanDatum::from_type(type));
    KLRAlgebra r(u.datum());
    for (int i = 0; i < 2; ++i) {
      const ResCheck rc = res_check(u.minus(), r, i, RootVec{1, 1});
      CHECK(rc.pass);
      CHECK(rc.compared == 2);
    }
  }
}

TEST_CASE("characters of the root modules", "[klrchar]") {
  for (const char* type : {"A1xA1", "A2", "B2"}) {
    UqFull u(CartanDatum::from_type(type));
    KLRAlgebra r(u.datum());
    for (int i = 0; i < 2; ++i) {
      const MjResult res = mj_char(u, r, i, 1 - i, 16);
      CHECK(res.truncated);
      CHECK(res.exact);
      REQUIRE(res.shift);
      CHECK(*res.shift == u.datum().d(i) * res.n * (res.n - 1));
    }
  }
  UqFull a2(CartanDatum::from_type("A2"));
  KLRAlgebra r(a2.datum());
  CHECK_THROWS_AS(mj_char(a2, r, 0, 1, kMaxMjDegree + 1), BoundExceeded);
}
