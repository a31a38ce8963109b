#include <catch2/catch.hpp>

#include "klrbraid/uqfull.hpp"

using namespace klrbraid;

namespace {

BraidWord bw(std::initializer_list<int> letters, bool inverse = false) {
  BraidWord w;
  for (int l : letters) w.push_back({l, inverse});
  return w;
}

}  // namespace

TEST_CASE("defining relations hold after straightening", "[uqfull]") {
  for (const char* t : {"A2", "B2", "G2"}) {
    UqFull u(CartanDatum::from_type(t));
    const auto& c = u.datum();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        // t_i e_j t_i^{-1} = q^{(a_i,a_j)} e_j
        CHECK(u.equals(u.mul({u.t(i), u.e(j), u.t(i, -1)}), u.e(j) * RationalQ::q_pow(c.bilin_simple(i, j))));
        CHECK(u.equals(u.mul({u.t(i), u.f(j), u.t(i, -1)}), u.f(j) * RationalQ::q_pow(-c.bilin_simple(i, j))));
        TriangularElem comm = u.mul(u.e(i), u.f(j)) - u.mul(u.f(j), u.e(i));
        TriangularElem rhs;
        if (i == j) {
          int d = c.d(i);
          rhs = (u.t(i) - u.t(i, -1)) * (RationalQ::q_pow(d) - RationalQ::q_pow(-d)).inverse();
        }
        CHECK(u.equals(comm, rhs));
      }
  }
}

TEST_CASE("multiplication is associative", "[uqfull]") {
  UqFull u(CartanDatum::from_type("B2"));
  TriangularElem a = u.mul(u.e(0), u.f(1)) + u.t(1);
  TriangularElem b = u.mul({u.f(0), u.e(1), u.e(0)});
  TriangularElem c = u.mul(u.f(1), u.f(0)) - u.e(1);
  CHECK(u.equals(u.mul(u.mul(a, b), c), u.mul(a, u.mul(b, c))));
}

TEST_CASE("T_1(f_2) in A2", "[uqfull]") {
  UqFull u(CartanDatum::from_type("A2"));
  TriangularElem img = u.ti_gen(0, Gen::F, 1, false);
  TriangularElem expected = u.mul(u.f(0), u.f(1)) - u.mul(u.f(1), u.f(0)) * RationalQ::q_pow(1);
  CHECK(u.equals(img, expected));
}

TEST_CASE("T_i and T_i^{-1} are inverse", "[uqfull]") {
  for (const char* t : {"A2", "B2", "G2"}) {
    UqFull u(CartanDatum::from_type(t));
    for (int i = 0; i < 2; ++i)
      for (Gen g : {Gen::E, Gen::F, Gen::T})
        for (int j = 0; j < 2; ++j) {
          TriangularElem x = u.generator(g, j);
          CHECK(u.equals(u.apply_braid({{i, false}, {i, true}}, x), x));
          CHECK(u.equals(u.apply_braid({{i, true}, {i, false}}, x), x));
        }
  }
}

TEST_CASE("braid relations on generators", "[uqfull]") {
  for (auto [t, m] : std::vector<std::pair<const char*, int>>{{"A1xA1", 2}, {"A2", 3}, {"B2", 4}, {"G2", 6}}) {
    UqFull u(CartanDatum::from_type(t));
    BraidWord w1, w2;
    for (int k = 0; k < m; ++k) {
      w1.push_back({k % 2, false});
      w2.push_back({(k + 1) % 2, false});
    }
    for (Gen g : {Gen::E, Gen::F, Gen::T})
      for (int j = 0; j < 2; ++j) {
        TriangularElem x = u.generator(g, j);
        CHECK(u.equals(u.apply_braid(w1, x), u.apply_braid(w2, x)));
      }
  }
}

TEST_CASE("sigma conjugates T_i to T_i^{-1}", "[uqfull]") {
  UqFull u(CartanDatum::from_type("B2"));
  for (int i = 0; i < 2; ++i)
    for (Gen g : {Gen::E, Gen::F, Gen::T})
      for (int j = 0; j < 2; ++j) {
        TriangularElem x = u.generator(g, j);
        CHECK(u.equals(u.sigma(u.apply_braid(bw({i}), u.sigma(x))), u.apply_braid(bw({i}, true), x)));
      }
  TriangularElem a = u.mul(u.e(0), u.f(1));
  TriangularElem b = u.mul(u.t(0), u.f(0));
  CHECK(u.equals(u.sigma(u.mul(a, b)), u.mul(u.sigma(b), u.sigma(a))));
  CHECK(u.equals(u.phi(u.mul(a, b)), u.mul(u.phi(b), u.phi(a))));
}
