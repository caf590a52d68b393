#pragma once

#include <cstdint>
#include <vector>

#include "u11/ffield.hpp"

namespace u11::reps {

using ffield::FF;
using ffield::FieldTower;

// Isomorphism-class label of an irreducible smooth representation of the
// rank-one unitary group.  Labels are canonical: distinct labels name
// non-isomorphic representations.
//   Character(k), Steinberg(k)         k in [0, p]
//   PrincipalSeries(r, lambda)         r in [0, p^2-2], lambda a unit,
//                                      (lambda, r) = (1, (p-1)m) excluded
//   Supercuspidal(k, r)                k in [0, p], r in [0, p-1]
struct IrrepLabel {
  enum class Kind : uint8_t { Character = 0, Steinberg = 1, PrincipalSeries = 2, Supercuspidal = 3 };
  Kind kind = Kind::Character;
  int64_t k = 0;
  int64_t r = 0;
  FF lambda;
};

bool operator==(const IrrepLabel& x, const IrrepLabel& y);
bool operator!=(const IrrepLabel& x, const IrrepLabel& y);

IrrepLabel character(const FieldTower& t, int64_t k);
IrrepLabel steinberg(const FieldTower& t, int64_t k);
IrrepLabel principal_series(const FieldTower& t, int64_t r, FF lambda);
IrrepLabel supercuspidal(const FieldTower& t, int64_t k, int64_t r);

// Sorted multiset of labels (duplicates meaningful).
using LPacket = std::vector<IrrepLabel>;
LPacket sorted_packet(const FieldTower& t, LPacket labels);
bool packet_less(const FieldTower& t, const IrrepLabel& x, const IrrepLabel& y);

// Label of an irreducible of the derived subgroup.  The cuspidal labels
// already fold in the r <-> p-1-r identification of the two halves of a
// restricted supercuspidal pair.
struct SLLabel {
  enum class Kind : uint8_t { Trivial = 0, Steinberg = 1, PrincipalSeries = 2, Cusp = 3 };
  Kind kind = Kind::Trivial;
  int64_t r = 0;
  FF lambda;
};
bool operator==(const SLLabel& x, const SLLabel& y);

// The complete duplicate-free list of labels with lambda running over the
// units of the degree-`lambda_degree` subfield.
std::vector<IrrepLabel> classify(const FieldTower& t, int lambda_degree);

SLLabel restrict_to_su(const FieldTower& t, const IrrepLabel& x);

// Twist by the k-th determinant character.
IrrepLabel det_twist(const FieldTower& t, const IrrepLabel& x, int64_t j);
LPacket packet_det_twist(const FieldTower& t, const LPacket& pkt, int64_t j);

// Orbit of a label under the similitude group: singleton for the
// nonsupercuspidal labels, a two-element set for the supercuspidals.
LPacket packet_of(const FieldTower& t, const IrrepLabel& x);

// Semisimplification of the quotient representation indexed by (r, lambda):
// one principal-series label away from (0,1) and (p-1,1), and a
// character/Steinberg pair at those two points.
LPacket pi_ss(const FieldTower& t, int64_t r, FF lambda);

// ---- bookkeeping for the general-linear source of the cuspidal labels --

// Smooth character of Q_p^x as (unramified value, tame exponent).
struct UnramTameChar {
  FF nu;
  int64_t a = 0;
};
bool operator==(const UnramTameChar& x, const UnramTameChar& y);

struct GL2Label {
  int64_t r = 0;
  UnramTameChar chi;
};
bool operator==(const GL2Label& x, const GL2Label& y);

// Canonical representative of the (at most four element) isomorphism
// class of a weight/twist pair; lexicographically minimal on
// (r, exponent of nu, a).
GL2Label gl2_normalize(const FieldTower& t, int64_t r, UnramTameChar chi);
std::vector<GL2Label> gl2_orbit(const FieldTower& t, int64_t r, UnramTameChar chi);

}  // namespace u11::reps
