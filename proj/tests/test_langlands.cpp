#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "u11/langlands.hpp"

using namespace u11::langlands;
using u11::ffield::FF;
using u11::ffield::FieldTower;
using u11::reps::LPacket;

TEST_CASE("embedding of the endoscopic parameters") {
  FieldTower t(5, 1, 1);
  CHECK(xi_embed(t, j_param(t, 0, 0)) == endo_param(t, 0, 0));
  CHECK(xi_embed(t, j_param(t, 2, 4)) == endo_param(t, 2, 4));
  CHECK_THROWS_AS(xi_embed(t, u1_param(t, 0)), std::invalid_argument);

  auto chars = restriction_chars(t, endo_param(t, 2, 4));
  FF minus_one = t.neg(t.one());
  CHECK(chars[0].lambda == minus_one);
  CHECK(chars[1].lambda == minus_one);
  CHECK(chars[0].r == ((1 - 5) * 2 % 24 + 24) % 24);
  CHECK(chars[1].r == ((1 - 5) * 4 % 24 + 24) % 24);
}

TEST_CASE("closed-form equivalence") {
  FieldTower t3(3, 1, 1);
  FieldTower t5(5, 1, 1);

  CHECK(param_equiv(t5, endo_param(t5, 2, 4), endo_param(t5, 4, 2)));
  CHECK_FALSE(param_equiv(t5, endo_param(t5, 2, 4), endo_param(t5, 2, 3)));

  // torus: (r, lambda) pairs with (-p r, lambda^{-1})
  CHECK(param_equiv(t5, torus_param(t5, 3, t5.from_int(2)),
                    torus_param(t5, 9, t5.from_int(3))));
  CHECK_FALSE(param_equiv(t5, torus_param(t5, 3, t5.from_int(2)),
                          torus_param(t5, 9, t5.from_int(2))));

  // singular endoscopic parameters degenerate to the torus family
  CHECK(param_equiv(t3, endo_param(t3, 1, 1), torus_param(t3, 6, t3.from_int(2))));
  CHECK_FALSE(param_equiv(t3, endo_param(t3, 0, 1), torus_param(t3, 6, t3.from_int(2))));
  CHECK_FALSE(param_equiv(t3, endo_param(t3, 1, 1), torus_param(t3, 6, t3.one())));

  // the two halves of the endoscopic pair do not swap upstairs
  CHECK_FALSE(param_equiv(t3, j_param(t3, 0, 1), j_param(t3, 1, 0)));
  CHECK(param_equiv(t3, j_param(t3, 0, 1), j_param(t3, 0, 1)));
  CHECK(param_equiv(t3, u1_param(t3, 2), u1_param(t3, 2)));

  // different dual groups cannot be compared
  CHECK_THROWS_AS(param_equiv(t3, u1_param(t3, 0), j_param(t3, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(param_equiv(t3, j_param(t3, 0, 0), endo_param(t3, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("intertwiner oracle agrees with the closed form") {
  SUBCASE("p = 3, exhaustive with lambda over F_9") {
    FieldTower t(3, 1, 2);
    auto res = sweep_oracle_agreement(t, 2);
    CHECK(res.disagreements == 0);
    CHECK(res.pairs == uint64_t((16 + 8 * 8) * (16 + 8 * 8)));
  }
  SUBCASE("parallel and serial sweeps agree") {
    FieldTower t(3, 1, 1);
    auto par = sweep_oracle_agreement(t, 1, true);
    auto ser = sweep_oracle_agreement(t, 1, false);
    CHECK(par.pairs == ser.pairs);
    CHECK(par.disagreements == ser.disagreements);
  }
  SUBCASE("spot checks") {
    FieldTower t(3, 1, 1);
    CHECK(intertwiner_oracle(t, endo_param(t, 0, 1), endo_param(t, 1, 0)));
    CHECK_FALSE(intertwiner_oracle(t, endo_param(t, 0, 1), torus_param(t, 6, t.from_int(2))));
    CHECK(intertwiner_oracle(t, endo_param(t, 1, 1), torus_param(t, 6, t.from_int(2))));
    CHECK_THROWS_AS(intertwiner_oracle(t, u1_param(t, 0), u1_param(t, 0)),
                    std::invalid_argument);
  }
}

TEST_CASE("closed-form equivalence is an equivalence relation") {
  FieldTower t(3, 1, 2);
  std::vector<LParam> params = all_endo_params(t);
  auto torus = all_torus_params(t, 2);
  params.insert(params.end(), torus.begin(), torus.end());
  const size_t n = params.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) eq[i][j] = param_equiv(t, params[i], params[j]);
  for (size_t i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (size_t j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      if (!eq[i][j]) continue;
      for (size_t k = 0; k < n; ++k)
        if (eq[j][k]) CHECK(eq[i][k]);
    }
  }
}

TEST_CASE("stored data is a consistent homomorphism image") {
  // squaring the Frobenius image recovers the unramified parts of the
  // restriction: A * pinned(A) = diag(lambda_1, lambda_2)
  using u11::finituni::Mat2;
  for (int64_t p : {3, 5}) {
    FieldTower t(p, 1, 2);
    std::vector<LParam> params = all_endo_params(t);
    auto torus = all_torus_params(t, 2);
    params.insert(params.end(), torus.begin(), torus.end());
    for (const auto& a : params) {
      Mat2 A = frobenius_matrix(t, a);
      FF det = mat_det(t, A);
      Mat2 sq = mat_mul(t, A, A);  // A * pinned(A) * det = A^2
      auto cs = restriction_chars(t, a);
      CHECK(t.div(sq.a, det) == cs[0].lambda);
      CHECK(t.div(sq.d, det) == cs[1].lambda);
      CHECK(t.is_zero(sq.b));
      CHECK(t.is_zero(sq.c));
    }
  }
}

TEST_CASE("explicit conjugator between the singular families") {
  // with d^2 = -1, the matrix [[1, -d], [1/2, d/2]] carries the singular
  // endoscopic Frobenius data to the torus one; check the conjugation
  // equation g A pinned(g)^{-1} = A' directly
  using u11::finituni::Mat2;
  for (int64_t p : {3, 5, 7}) {
    FieldTower t(p, 1, 1);
    FF d = t.sqrt_first(t.neg(t.one()));
    FF half = t.inv(t.from_int(2));
    Mat2 g{t.one(), t.neg(d), half, t.mul(half, d)};
    Mat2 A = frobenius_matrix(t, endo_param(t, 0, 0));
    Mat2 A2 = frobenius_matrix(t, torus_param(t, 0, t.neg(t.one())));
    // pinned(g)^{-1} = det(g) g^{-1}
    Mat2 pinned_inv = mat_scalar_mul(t, mat_det(t, g), mat_inv(t, g));
    CHECK(mat_mul(t, mat_mul(t, g, A), pinned_inv) == A2);
  }
}

TEST_CASE("twisting parameters") {
  FieldTower t(3, 1, 1);
  CHECK(twist_param(t, torus_param(t, 0, t.one()), 0) == torus_param(t, 0, t.one()));
  CHECK(twist_param(t, torus_param(t, 0, t.one()), 1) == torus_param(t, 6, t.one()));
  for (int64_t k = 0; k <= 3; ++k)
    for (int64_t l = 0; l <= 3; ++l)
      for (int64_t j = 0; j <= 3; ++j) {
        auto a = endo_param(t, k, l);
        CHECK(twist_param(t, twist_param(t, a, j), 4 - j) == a);
      }
}

TEST_CASE("restriction of the induced representation") {
  FieldTower t3(3, 1, 1);
  auto a = induce_restrict(t3, 0, t3.one());
  REQUIRE(a.size() == 2u);
  CHECK(a[0].r == 0);
  CHECK(a[1].r == 0);
  auto b = induce_restrict(t3, 1, t3.from_int(2));
  CHECK(b[0].r == 1);
  CHECK(b[1].r == 3);
  FieldTower t5(5, 1, 1);
  auto c = induce_restrict(t5, 7, t5.one());
  CHECK(c[0].r == 7);
  CHECK(c[1].r == 11);  // 35 mod 24

  // never an irreducible two-dimensional residue: always two characters,
  // the second the frobenius twist of the first
  for (int64_t p : {3, 5}) {
    FieldTower t(p, 1, 2);
    for (int64_t m = 0; m < p * p - 1; ++m)
      for (FF lambda : t.subfield_units(2)) {
        auto cs = induce_restrict(t, m, lambda);
        REQUIRE(cs.size() == 2u);
        auto tw = u11::chars::frobenius_twist(t, cs[0]);
        CHECK((tw == cs[1] || tw == cs[0]));
        CHECK(cs[0].lambda == lambda);
        CHECK(cs[1].lambda == lambda);
      }
  }
}

TEST_CASE("correspondence on the endoscopic side") {
  FieldTower t(3, 1, 1);
  auto pkt = correspond(t, endo_param(t, 0, 1));
  REQUIRE(pkt.size() == 2u);
  CHECK(pkt == u11::reps::sorted_packet(
                   t, LPacket{u11::reps::supercuspidal(t, 1, 2), u11::reps::supercuspidal(t, 0, 0)}));
  CHECK(pkt == u11::reps::packet_of(t, u11::reps::supercuspidal(t, 0, 0)));
}

TEST_CASE("correspondence on the torus side") {
  FieldTower t(3, 1, 1);
  // (1-p)k with trivial lambda: two characters and two Steinbergs
  for (int64_t k = 0; k <= 3; ++k) {
    auto pkt = correspond(t, torus_param(t, (1 - 3) * k, t.one()));
    REQUIRE(pkt.size() == 4u);
    auto want = u11::reps::sorted_packet(
        t, LPacket{u11::reps::character(t, k), u11::reps::steinberg(t, k),
                   u11::reps::character(t, k), u11::reps::steinberg(t, k)});
    CHECK(pkt == want);
  }
  // generic torus parameter: two principal series
  auto pkt = correspond(t, torus_param(t, 0, t.from_int(2)));
  REQUIRE(pkt.size() == 2u);
  for (const auto& x : pkt) CHECK(x.kind == u11::reps::IrrepLabel::Kind::PrincipalSeries);
}

TEST_CASE("bijection between regular classes and supercuspidal packets") {
  for (int64_t p : {3, 5, 7}) {
    FieldTower t(p, 1, 1);
    std::set<std::pair<int64_t, int64_t>> classes;
    std::set<std::vector<std::pair<int64_t, int64_t>>> packets;
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l) {
        if (k == l) continue;
        classes.insert({std::min(k, l), std::max(k, l)});
        auto pkt = correspond(t, endo_param(t, k, l));
        std::vector<std::pair<int64_t, int64_t>> key;
        for (const auto& x : pkt) {
          REQUIRE(x.kind == u11::reps::IrrepLabel::Kind::Supercuspidal);
          key.emplace_back(x.k, x.r);
        }
        packets.insert(key);
      }
    CHECK(int64_t(classes.size()) == p * (p + 1) / 2);
    CHECK(packets.size() == classes.size());  // injective on classes, so bijective

    // equivalent parameters give equal packets
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l)
        if (k != l)
          CHECK(correspond(t, endo_param(t, k, l)) == correspond(t, endo_param(t, l, k)));
  }
}

TEST_CASE("twist equivariance of the correspondence") {
  for (int64_t p : {3, 5}) {
    FieldTower t(p, 1, 2);
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l)
        for (int64_t j = 0; j <= p; ++j) {
          if (k == l) continue;
          auto lhs = correspond(t, twist_param(t, endo_param(t, k, l), j));
          auto rhs = u11::reps::packet_det_twist(t, correspond(t, endo_param(t, k, l)), j);
          CHECK(lhs == rhs);
        }
    for (int64_t r = 0; r < p * p - 1; ++r)
      for (FF lambda : t.subfield_units(1))
        for (int64_t j = 0; j <= p; ++j) {
          auto a = torus_param(t, r, lambda);
          auto lhs = correspond(t, twist_param(t, a, j));
          auto rhs = u11::reps::packet_det_twist(t, correspond(t, a), j);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("singular parameters route through the torus family") {
  for (int64_t p : {3, 5}) {
    FieldTower t(p, 1, 1);
    for (int64_t k = 0; k <= p; ++k) {
      auto via_endo = correspond(t, endo_param(t, k, k));
      auto via_torus = correspond(t, torus_param(t, (1 - p) * k, t.neg(t.one())));
      CHECK(via_endo == via_torus);
    }
  }
}

TEST_CASE("endoscopic transfer") {
  FieldTower t(3, 1, 1);
  auto diag = transfer(t, 0, 0);
  REQUIRE(diag.size() == 2u);
  CHECK(diag[0] == u11::reps::principal_series(t, 0, t.from_int(2)));
  CHECK(diag[1] == diag[0]);

  for (int64_t k = 0; k <= 3; ++k)
    for (int64_t l = 0; l <= 3; ++l) {
      CHECK(transfer(t, k, l) == transfer(t, l, k));
      CHECK(transfer(t, k, l) == correspond(t, xi_embed(t, j_param(t, k, l))));
    }
}

TEST_CASE("c-group layer") {
  FieldTower t(3, 1, 2);
  const int64_t p = 3;

  SUBCASE("central coordinate squares to the cyclotomic character") {
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l) {
        auto d = c_d(t, c_endo(t, k, l));
        CHECK(d.lambda == t.one());
        CHECK(d.r == p + 1);
      }
    for (int64_t r = 0; r < p * p - 1; ++r)
      for (FF lambda : t.subfield_units(2)) {
        auto d = c_d(t, c_torus(t, r, lambda));
        CHECK(d.lambda == t.one());
        CHECK(d.r == p + 1);
        auto d2 = c_d(t, c_torus(t, r, lambda, true));  // other square root
        CHECK(d2.r == p + 1);
      }
  }

  SUBCASE("equivalence with the shifted relations") {
    CHECK(c_equiv(t, c_torus(t, 2, t.from_int(2)), c_torus(t, 6, t.from_int(2))));
    CHECK(c_equiv(t, c_endo(t, 0, 1), c_endo(t, 1, 0)));
    CHECK(c_equiv(t, c_endo(t, 1, 1), c_torus(t, -1 + (1 - p) * 1, t.neg(t.one()))));
    CHECK_FALSE(c_equiv(t, c_endo(t, 0, 1), c_torus(t, 1, t.neg(t.one()))));
  }

  SUBCASE("oracle agreement on the c-layer") {
    for (bool alt : {false, true}) {
      std::vector<CParam> params;
      for (int64_t k = 0; k <= p; ++k)
        for (int64_t l = 0; l <= p; ++l) params.push_back(c_endo(t, k, l, alt));
      for (int64_t r = 0; r < p * p - 1; ++r)
        for (FF lambda : t.subfield_units(2)) params.push_back(c_torus(t, r, lambda, alt));
      for (const auto& a : params)
        for (const auto& b : params) CHECK(c_equiv(t, a, b) == c_intertwiner_oracle(t, a, b));
    }
  }

  SUBCASE("class counts match the plain layer under the index shift") {
    auto l = count_l_classes(t, 2);
    auto c = count_c_classes(t, 2);
    CHECK(l.regular_endo == p * (p + 1) / 2);
    CHECK(c.regular_endo == l.regular_endo);
    CHECK(c.torus == l.torus);
  }

  SUBCASE("correspondence matches across the shift") {
    // shifted index: the (r-1) + (1-p)k data corresponds to the same
    // packet as r + (1-p)k on the plain layer
    for (int64_t r = 0; r < p * p - 1; ++r)
      for (FF lambda : t.subfield_units(2)) {
        auto cpkt = c_correspond(t, c_torus(t, r - 1, lambda));
        auto lpkt = correspond(t, torus_param(t, r, lambda));
        CHECK(cpkt == lpkt);
      }
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l) {
        if (k == l) continue;
        CHECK(c_correspond(t, c_endo(t, k, l)) == correspond(t, endo_param(t, k, l)));
      }
    // singular consistency on the c side
    for (int64_t k = 0; k <= p; ++k)
      CHECK(c_correspond(t, c_endo(t, k, k)) ==
            c_correspond(t, c_torus(t, -1 + (1 - p) * k, t.neg(t.one()))));
  }

  SUBCASE("mixed square roots are rejected") {
    CHECK_THROWS_AS(c_equiv(t, c_torus(t, 0, t.one(), false), c_torus(t, 0, t.one(), true)),
                    std::invalid_argument);
  }
}
