#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace u11::ffield {

// Canonical sublayers of the ambient field, ordered by inclusion:
// F_p <= F_q <= F_{q^2} <= F_{p^n} with q = p^f and n = 2*lcm(f, k).
enum class Layer : uint8_t { Prime = 0, Q = 1, Q2 = 2, Ambient = 3 };

// A field element: packed coefficient vector (base-p digits) plus the
// smallest canonical layer containing it.  Elements are meaningful only
// together with the FieldTower that produced them.
struct FF {
  uint32_t idx = 0;
  Layer layer = Layer::Prime;
};

inline bool operator==(FF a, FF b) { return a.idx == b.idx; }
inline bool operator!=(FF a, FF b) { return a.idx != b.idx; }
inline bool operator<(FF a, FF b) { return a.idx < b.idx; }

/// Exact arithmetic in the tower F_p <= F_q <= F_{q^2} <= F_{p^n}.
///
/// The ambient field is F_p[x]/(m(x)) for the canonical smallest monic
/// primitive polynomial m of degree n (smallest in the fixed order given
/// by the packed-integer encoding of the non-leading coefficients), so x
/// generates the multiplicative group and all tables are reproducible
/// bit-for-bit.  Sublayer generators are the canonical powers of x.
/// Immutable after construction; every operation is pure.
class FieldTower {
 public:
  // p an odd prime, q = p^f, and lambda values live in F_{p^{2k}}.
  // The ambient degree is 2*lcm(f,k) so that both F_{q^2} and F_{p^{2k}}
  // embed; for f = 1 this is exactly F_{p^{2k}}.
  FieldTower(int64_t p, int f, int k);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  int k() const { return k_; }
  int64_t q() const { return q_; }
  int ambient_degree() const { return n_; }
  int64_t ambient_order() const { return N_; }
  int layer_degree(Layer l) const { return layers_[size_t(l)].degree; }
  int64_t layer_order(Layer l) const { return layers_[size_t(l)].order; }

  FF zero() const { return FF{0, Layer::Prime}; }
  FF one() const { return FF{1, Layer::Prime}; }
  FF gen(Layer l) const { return layers_[size_t(l)].gen; }

  bool is_zero(FF a) const { return a.idx == 0; }
  bool in_layer(FF a, Layer l) const;
  bool in_subfield(FF a, int degree) const;

  FF from_int(int64_t a) const;                       // image of an integer
  FF from_dlog(Layer l, int64_t e) const;             // gen(l)^e
  FF from_coeffs(const std::vector<int64_t>& c) const;
  std::vector<int64_t> coeffs(FF a) const;            // length n, digits in [0,p)
  std::optional<int64_t> dlog(FF a) const;            // w.r.t. ambient generator
  std::optional<int64_t> dlog_in(Layer l, FF a) const;

  FF add(FF a, FF b) const;
  FF sub(FF a, FF b) const;
  FF neg(FF a) const;
  FF mul(FF a, FF b) const;
  FF inv(FF a) const;
  FF div(FF a, FF b) const;
  FF pow(FF a, int64_t e) const;

  // The nontrivial automorphism of F_{q^2} over F_q: x -> x^q.
  // Input must lie in the F_{q^2} layer.
  FF conj(FF a) const;
  // x * conj(x) = x^{q+1}; defined for nonzero x in the F_{q^2} layer,
  // lands in F_q.
  FF norm(FF a) const;
  FF frobenius(FF a) const { return pow(a, p_); }

  int64_t element_order(FF a) const;
  bool is_square(FF a) const;
  FF sqrt_first(FF a) const;  // root with the smaller generator exponent

  // The distinguished nonsquare unit of F_q (first nonsquare in
  // generator-power order, i.e. the layer generator itself) and its
  // first square root inside F_{q^2}.
  FF nonsquare_unit() const { return eps_; }
  FF sqrt_nonsquare() const { return sqrt_eps_; }

  // Sort key placing 0 first and units in generator-power order.
  uint64_t entry_key(FF a) const { return a.idx == 0 ? 0 : uint64_t(log_[a.idx]) + 1; }

  // Elements of a layer in canonical order: 0, g^0, g^1, ...
  std::vector<FF> layer_elements(Layer l) const;
  std::vector<FF> layer_units(Layer l) const;
  std::vector<FF> subfield_units(int degree) const;  // degree must divide n

  const std::vector<int64_t>& modulus() const { return modulus_; }
  std::vector<int64_t> layer_min_poly(Layer l) const;

  std::string format(FF a) const;      // "0", integers for F_p, else "g^e"
  FF parse(const std::string& s) const;

 private:
  struct LayerInfo {
    int degree = 1;
    int64_t order = 0;    // p^degree
    int64_t cof = 0;      // (N-1)/(order-1)
    FF gen;
  };

  void build_tables();
  Layer smallest_layer(uint32_t idx) const;
  FF tagged(uint32_t idx) const { return FF{idx, smallest_layer(idx)}; }

  int64_t p_ = 0, q_ = 0, N_ = 0;
  int f_ = 0, k_ = 0, n_ = 0;
  std::vector<int64_t> modulus_;     // monic, coefficient i of x^i, size n+1
  std::vector<uint32_t> exp_;        // size N-1
  std::vector<int32_t> log_;         // size N, -1 for zero
  std::vector<uint32_t> neg_;        // size N
  std::vector<uint32_t> add_;        // dense add table when N is small, else empty
  std::array<LayerInfo, 4> layers_;
  FF eps_, sqrt_eps_;
};

}  // namespace u11::ffield
