#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "u11/chars.hpp"
#include "u11/finituni.hpp"
#include "u11/reps.hpp"

namespace u11::langlands {

using chars::MultChar;
using ffield::FF;
using ffield::FieldTower;
using finituni::Mat2;

// Langlands parameter, stored as the finite data that determines it: the
// indices of the inertial characters and the image of Frobenius.
//   U1(k)           parameter of the norm-one torus,        k in [0, p]
//   JPair(k, l)     parameter of the product of two norm-one tori;
//                   componentwise equality only, no swap
//   Endo(k, l)      image of JPair(k, l) in the big dual group;
//                   regular when k != l
//   Torus(r, lambda) parameter through the maximal-torus dual
struct LParam {
  enum class Kind : uint8_t { U1 = 0, JPair = 1, Endo = 2, Torus = 3 };
  Kind kind = Kind::U1;
  int64_t k = 0, l = 0, r = 0;
  FF lambda;
};
bool operator==(const LParam& x, const LParam& y);

LParam u1_param(const FieldTower& t, int64_t k);
LParam j_param(const FieldTower& t, int64_t k, int64_t l);
LParam endo_param(const FieldTower& t, int64_t k, int64_t l);
LParam torus_param(const FieldTower& t, int64_t r, FF lambda);

bool is_g_param(const LParam& a);
bool is_regular(const LParam& a);  // Endo with k != l

// The embedding of the endoscopic dual into the big dual group.
LParam xi_embed(const FieldTower& t, const LParam& j);

// Restriction to the unramified-quadratic Galois subgroup: the two
// diagonal characters.
std::array<MultChar, 2> restriction_chars(const FieldTower& t, const LParam& a);
// Image of Frobenius in the dual group.
Mat2 frobenius_matrix(const FieldTower& t, const LParam& a);

// Closed-form equivalence: Endo(k,l) ~ Endo(l,k); Torus(r,lambda) ~
// Torus(-pr, lambda^{-1}); Endo(k,k) ~ Torus((1-p)k, -1).  U1 and JPair
// compare by componentwise equality.  Parameters of different groups are
// rejected.
bool param_equiv(const FieldTower& t, const LParam& a, const LParam& b);

// Independent equivalence test: decides whether some invertible matrix
// conjugates one parameter to the other, solved exactly over the field
// layer.  Only the two big-group families are accepted.
bool intertwiner_oracle(const FieldTower& t, const LParam& a, const LParam& b);

// Twist by the j-th power of the canonical central character.
LParam twist_param(const FieldTower& t, const LParam& a, int64_t j);

// Restriction of the induced two-dimensional representation with the
// given character data: always a multiset of two characters.
std::vector<MultChar> induce_restrict(const FieldTower& t, int64_t m, FF lambda);

// The packet attached to a parameter of the big group.
reps::LPacket correspond(const FieldTower& t, const LParam& a);

// Endoscopic transfer of the (k, l) character of the endoscopic group.
reps::LPacket transfer(const FieldTower& t, int64_t k, int64_t l);

// ---- C-group layer ------------------------------------------------------

// Same index data with the central coordinate carried along.  alt_root
// selects the second realization of the square root of the cyclotomic
// character (shifts nothing observable; kept switchable).
struct CParam {
  enum class Kind : uint8_t { Endo = 0, Torus = 1 };
  Kind kind = Kind::Endo;
  int64_t k = 0, l = 0, r = 0;
  FF lambda;
  bool alt_root = false;
};
bool operator==(const CParam& x, const CParam& y);

CParam c_endo(const FieldTower& t, int64_t k, int64_t l, bool alt_root = false);
CParam c_torus(const FieldTower& t, int64_t r, FF lambda, bool alt_root = false);

bool c_equiv(const FieldTower& t, const CParam& a, const CParam& b);
bool c_intertwiner_oracle(const FieldTower& t, const CParam& a, const CParam& b);

// Character data of the central coordinate squared; always the mod-p
// cyclotomic character (tame exponent p+1, trivial unramified part).
MultChar c_d(const FieldTower& t, const CParam& a);

// Inertial characters of the matrix part (central coordinate folded in).
std::array<MultChar, 2> c_restriction_chars(const FieldTower& t, const CParam& a);
Mat2 c_frobenius_matrix(const FieldTower& t, const CParam& a);

reps::LPacket c_correspond(const FieldTower& t, const CParam& a);

// ---- exhaustive sweeps ----------------------------------------------------

std::vector<LParam> all_endo_params(const FieldTower& t);
std::vector<LParam> all_torus_params(const FieldTower& t, int lambda_degree);

struct SweepResult {
  uint64_t pairs = 0;
  uint64_t disagreements = 0;
  std::string first_disagreement;
};

// Compares the oracle with the closed form on every pair drawn from the
// two families; OpenMP-parallel with a deterministic reduction, or serial
// for the reference path.
SweepResult sweep_oracle_agreement(const FieldTower& t, int lambda_degree, bool parallel = true);

// Class counting (used by the listing front end and the count checks).
struct ClassCounts {
  int64_t regular_endo = 0;
  int64_t torus = 0;
};
ClassCounts count_l_classes(const FieldTower& t, int lambda_degree);
ClassCounts count_c_classes(const FieldTower& t, int lambda_degree);

}  // namespace u11::langlands
