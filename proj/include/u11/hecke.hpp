#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "u11/finituni.hpp"

namespace u11::hecke {

using ffield::FF;
using ffield::FieldTower;

// A one-dimensional module over the Iwahori-level Hecke algebra: the
// character component it lives on and the scalars by which the two
// reflection operators act.  Scalars are canonical residues mod p.
struct Module1D {
  int64_t label = 0;       // subscript in [0, q-1]
  int64_t idem_index = 0;  // label mod (q-1), indexes the torus character
  int64_t a_s = 0;
  int64_t a_s_prime = 0;
};

inline bool operator==(const Module1D& x, const Module1D& y) {
  return x.label == y.label && x.idem_index == y.idem_index && x.a_s == y.a_s &&
         x.a_s_prime == y.a_s_prime;
}

// The q supersingular one-dimensional modules M_0, ..., M_{q-1}:
//   M_0       = (e_0 -> 1, a_s = 0,  a_s' = -1)
//   M_{q-1}   = (e_0 -> 1, a_s = -1, a_s' = 0)
//   M_r       = (e_r -> 1, a_s = 0,  a_s' = 0)   for 0 < r < q-1.
std::vector<Module1D> supersingular_table(const FieldTower& t);

// The module attached to the r-th supercuspidal of the derived group
// (f = 1 towers, 0 <= r <= p-1).
Module1D cusp_module(const FieldTower& t, int64_t r);

// e_r = |H|^{-1} sum over the finite torus of chi_r(h) T_h, as a
// U-biinvariant function; idempotent under convolution.
finituni::CosetFn make_idempotent(const FieldTower& t, const finituni::CosetAlgebra& A, int64_t r);

struct RelationReport {
  bool ok = true;
  int64_t q = 0;
  size_t idempotent_checks = 0;
  size_t module_checks = 0;
  std::vector<std::string> failures;
};

// Validates, against the convolution oracle on the SU table:
//   (i)  the idempotent laws e_r e_r = e_r, e_r e_{r'} = 0, sum e_r = unit;
//   (ii) the empirically derived quadratic relation of the reflection
//        operator annihilates every row of the module table, one scalar
//        component at a time.
// A table override substitutes for the built-in supersingular table (used
// by the mutation tests).
RelationReport validate_relations(const FieldTower& t, finituni::GroupTable& su_table,
                                  const std::optional<std::vector<Module1D>>& table_override = {},
                                  bool parallel = true);

}  // namespace u11::hecke
