#pragma once

#include <cstdint>

#include "u11/ffield.hpp"

namespace u11::chars {

using ffield::FF;
using ffield::FieldTower;

// A smooth character of Q_{p^n}^x (equivalently of the absolute Galois
// group of Q_{p^n}): unramified part lambda and tame exponent r reduced
// modulo p^n - 1.  Equality is componentwise on (n, lambda, r).
struct MultChar {
  int n = 1;
  FF lambda;
  int64_t r = 0;
};

inline bool operator==(const MultChar& a, const MultChar& b) {
  return a.n == b.n && a.lambda == b.lambda && a.r == b.r;
}
inline bool operator!=(const MultChar& a, const MultChar& b) { return !(a == b); }

// A character of the norm-one group U(1): exponent k modulo q + 1.
struct U1Char {
  int64_t k = 0;
};
inline bool operator==(U1Char a, U1Char b) { return a.k == b.k; }

int64_t tame_modulus(const FieldTower& t, int n);  // p^n - 1

MultChar make_mult_char(const FieldTower& t, int n, FF lambda, int64_t r);

// Pointwise product; both factors must live on the same group.
MultChar char_mul(const FieldTower& t, const MultChar& a, const MultChar& b);

// Conjugation by Frobenius multiplies the tame exponent by p.
MultChar frobenius_twist(const FieldTower& t, const MultChar& a);

// Restriction of a character of E^x to F^x: tame exponent reduced mod q-1.
MultChar restrict_E_to_F(const FieldTower& t, const MultChar& a);

struct ExtendResult {
  bool extends = false;
  U1Char character;  // meaningful only when extends
};

// A character of E^x extends to the full unitary group exactly when
// lambda = 1 and (q-1) | r; the extension is indexed by r/(q-1) mod q+1.
ExtendResult extends_to_G(const FieldTower& t, const MultChar& a);

// The unique representative of m in [0, p-1] modulo p+1.  Undefined
// exactly when m is congruent to p; that residue is rejected.
bool bracket_defined(int64_t m, int64_t p);
int64_t bracket(int64_t m, int64_t p);

}  // namespace u11::chars
