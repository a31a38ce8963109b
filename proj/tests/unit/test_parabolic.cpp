#include <catch2/catch.hpp>

#include "klrbraid/parabolic.hpp"
#include "oracles.hpp"

using namespace klrbraid;

TEST_CASE("Freudenthal oracle sums to the Weyl dimension", "[parabolic]") {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto c = CartanDatum::from_type(t);
    for (auto lam : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}) {
      long total = 0;
      for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b) total += weyl_dim_oracle(c, Weight(lam), RootVec({a, b}));
      CHECK(total == oracle::weyl_dimension(c, lam));
    }
  }
  auto a2 = CartanDatum::from_type("A2");
  CHECK(weyl_dim_oracle(a2, Weight({1, 1}), RootVec({1, 1})) == 2);
  auto b2 = CartanDatum::from_type("B2");
  CHECK(weyl_dim_oracle(b2, Weight({0, 1}), RootVec({0, 1})) == 1);
}

TEST_CASE("slices of V_J(Lambda)", "[parabolic]") {
  UqFull a1(CartanDatum::from_type("A1"));
  ParabolicModule sl2(a1, {true}, Weight({1}));
  CHECK(sl2.dim(RootVec({2})) == 0);
  CHECK(sl2.dim(RootVec({1})) == 1);

  UqFull a2(CartanDatum::from_type("A2"));
  ParabolicModule adj(a2, {true, true}, Weight({1, 1}));
  CHECK(adj.dim(RootVec({1, 1})) == 2);
  ParabolicModule verma(a2, {false, false}, Weight({1, 1}));
  CHECK(verma.dim(RootVec({1, 1})) == 2);
  CHECK(verma.dim(RootVec({2, 2})) == a2.minus().dim(RootVec({2, 2})));
}

TEST_CASE("actions on V_J(Lambda)", "[parabolic]") {
  UqFull a1(CartanDatum::from_type("A1"));
  ParabolicModule m(a1, {true}, Weight({2}));
  VJVector v = m.highest_weight_vector();
  CHECK(m.act({VJGen::Kind::E, 0}, v).coords.empty());
  VJVector fv = m.act({VJGen::Kind::F, 0}, v);
  VJVector efv = m.act({VJGen::Kind::E, 0}, fv);
  CHECK(efv.coords[0] == RationalQ(quantum_int(2)));

  ParabolicModule m1(a1, {true}, Weight({1}));
  VJVector f1 = m1.act({VJGen::Kind::F, 0}, m1.highest_weight_vector());
  CHECK(m1.form(f1, f1) == RationalQ(1L));
  CHECK(m1.form(m1.highest_weight_vector(), m1.highest_weight_vector()) == RationalQ(1L));
}

TEST_CASE("q-boson relation and adjunction", "[parabolic]") {
  UqFull b2(CartanDatum::from_type("B2"));
  const auto& c = b2.datum();
  ParabolicModule m(b2, {true, false}, Weight({1, 2}));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      RootVec beta({a, b});
      for (int k = 0; k < m.dim(beta); ++k) {
        VJVector v = m.basis_vector(beta, k);
        for (int j = 0; j < 2; ++j) {
          // e'_2 f_j = q^{-(a_2,a_j)} f_j e'_2 + delta
          VJVector lhs = m.act({VJGen::Kind::Boson, 1}, m.act({VJGen::Kind::F, j}, v));
          VJVector down = m.act({VJGen::Kind::Boson, 1}, v);
          VJVector rhs{beta + RootVec::simple(2, j) - RootVec::simple(2, 1), {}};
          if (!down.coords.empty()) {
            rhs = m.act({VJGen::Kind::F, j}, down);
            for (auto& x : rhs.coords) x *= RationalQ::q_pow(-c.bilin_simple(1, j));
          } else {
            rhs = m.project(rhs.beta, FWordElem());
          }
          if (j == 1)
            for (size_t t = 0; t < rhs.coords.size(); ++t) rhs.coords[t] += v.coords[t];
          CHECK(lhs.coords == rhs.coords);
        }
        for (int i = 0; i < 2; ++i) {
          RootVec up = beta + RootVec::simple(2, i);
          for (int t = 0; t < m.dim(up); ++t) {
            VJVector y = m.basis_vector(up, t);
            CHECK(m.form(m.act({VJGen::Kind::F, i}, v), y) == m.form(v, m.form_adjoint(i, y)));
          }
        }
        for (int t = 0; t < m.dim(beta); ++t)
          CHECK(m.form(v, m.basis_vector(beta, t)) == m.form(m.basis_vector(beta, t), v));
      }
    }
}

TEST_CASE("e_j action is independent of the representative", "[parabolic]") {
  UqFull a2(CartanDatum::from_type("A2"));
  ParabolicModule m(a2, {true, true}, Weight({1, 0}));
  RootVec beta({2, 1});
  // f_1 f_1 f_2 is a relation element, so adding it must not change e_1
  FWordElem x = FWordElem::word(make_word({1, 0, 0}));
  FWordElem y = FWordElem::word(make_word({0, 0}));
  VJVector vx = m.project(beta, x);
  VJVector vy = m.project(beta, x + FWordElem::word(make_word({1})) * y);
  CHECK(vx.coords == vy.coords);
  FWordElem ax = a2.eval_highest_weight(a2.mul(a2.e(0), a2.from_f(x)), m.lambda());
  FWordElem ay = a2.eval_highest_weight(a2.mul(a2.e(0), a2.from_f(x + FWordElem::word(make_word({1})) * y)),
                                        m.lambda());
  CHECK(m.project(RootVec({1, 1}), ax).coords == m.project(RootVec({1, 1}), ay).coords);
}
