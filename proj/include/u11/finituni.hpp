#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "u11/ffield.hpp"

namespace u11::finituni {

using ffield::FF;
using ffield::FieldTower;
using ffield::Layer;

// Row-major 2x2 matrix over the F_{q^2} layer.
struct Mat2 {
  FF a, b, c, d;
};
inline bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

Mat2 mat_id(const FieldTower& t);
Mat2 mat_mul(const FieldTower& t, const Mat2& x, const Mat2& y);
FF mat_det(const FieldTower& t, const Mat2& x);
Mat2 mat_inv(const FieldTower& t, const Mat2& x);
Mat2 mat_scalar_mul(const FieldTower& t, FF s, const Mat2& x);
Mat2 conj_transpose(const FieldTower& t, const Mat2& x);

// The antidiagonal reflection representative built from the first square
// root of the distinguished nonsquare unit.
Mat2 weyl_rep(const FieldTower& t);
Mat2 upper_unip(const FieldTower& t, FF x);       // [[1,x],[0,1]], x + conj(x) = 0
Mat2 torus_elem(const FieldTower& t, FF a);       // diag(a, conj(a)^{-1})

enum class Variant { U11, SU, GU, U1 };
std::string variant_name(Variant v);

bool member(const FieldTower& t, Variant v, const Mat2& g);

// Exhaustive table of one finite group, elements in the canonical order
// (lexicographic in the generator-exponent keys of the four entries).
// Immutable once built.
struct GroupTable {
  Variant variant = Variant::U11;
  const FieldTower* tower = nullptr;
  std::vector<Mat2> elements;
  std::vector<uint32_t> inverse;
  uint32_t identity = 0;
  std::vector<uint8_t> in_borel, in_unipotent, in_torus, in_center_u1, in_su;

  uint64_t mat_key(const Mat2& g) const;
  uint32_t index_of(const Mat2& g) const;  // throws if not a member
  bool contains(const Mat2& g) const;
  uint32_t product(uint32_t i, uint32_t j) const;
  size_t size() const { return elements.size(); }

  // dense product cache, built on demand for small tables
  void build_product_table();

  std::unordered_map<uint64_t, uint32_t> lookup;
  std::vector<uint32_t> mult;
  bool has_mult = false;
};

// Enumerates all matrices satisfying the variant predicate by solving the
// defining equations entry by entry.  The scan is OpenMP-parallel over the
// leading entry with a canonical merge; the serial variant runs the same
// algorithm single-threaded, and the brute variant is the plain predicate
// scan over the whole entry space, kept as the reference oracle for the
// tests.
GroupTable enumerate_group(const FieldTower& t, Variant v, int64_t q_bound = 9);
GroupTable enumerate_group_serial(const FieldTower& t, Variant v, int64_t q_bound = 9);
GroupTable enumerate_group_brute(const FieldTower& t, Variant v, int64_t q_bound = 9);

struct BruhatCell {
  bool big_cell = false;  // false: g in B with witness b1 = g
  Mat2 b1, b2;            // big cell: g = b1 * weyl_rep * b2
};
BruhatCell bruhat_decompose(const GroupTable& table, const Mat2& g);

// Index in the full unitary table of the kernel of the determinant map
// onto the norm-one group; equals q + 1.
int64_t det_norm_index(const GroupTable& table);

// U-invariants of the degree-r symmetric power over F_p (f = 1 towers),
// in the monomial coordinates x^{r-i} y^i.
struct WeightSpace {
  int dimension = 0;
  std::vector<std::vector<int64_t>> basis;
};
WeightSpace sym_weight_invariants(const FieldTower& t, int64_t r);

// ---- U-biinvariant functions and their convolution -------------------

// Double and single coset bookkeeping for U\G/U where U is the upper
// unipotent subgroup; representatives are canonical (first element of
// each coset in table order).
struct CosetAlgebra {
  const GroupTable* G = nullptr;
  std::vector<uint32_t> unipotent;        // element indices of U
  std::vector<uint32_t> coset_rep;        // double-coset id -> representative
  std::vector<uint32_t> coset_of;         // element -> double-coset id
  std::vector<uint32_t> left_reps;        // representatives of G/U
  size_t num_cosets() const { return coset_rep.size(); }
};

CosetAlgebra make_coset_algebra(GroupTable& table);

// Value per double coset; the function on G it represents is constant on
// each U g U.
using CosetFn = std::vector<FF>;

CosetFn zero_fn(const CosetAlgebra& A);
CosetFn unit_fn(const CosetAlgebra& A);                       // delta_U
CosetFn t_basis(const CosetAlgebra& A, uint32_t elt);         // one U g U
std::vector<FF> expand(const CosetAlgebra& A, const CosetFn& f);
// Rejects vectors that are not constant on double cosets.
CosetFn project(const CosetAlgebra& A, const std::vector<FF>& full);

CosetFn convolve(const CosetAlgebra& A, const CosetFn& f1, const CosetFn& f2);
CosetFn convolve_serial(const CosetAlgebra& A, const CosetFn& f1, const CosetFn& f2);

}  // namespace u11::finituni
