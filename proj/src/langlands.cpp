#include "u11/langlands.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace u11::langlands {

using chars::make_mult_char;
using reps::LPacket;

namespace {
int64_t reduce(int64_t v, int64_t m) { return ((v % m) + m) % m; }
}

bool operator==(const LParam& x, const LParam& y) {
  return x.kind == y.kind && x.k == y.k && x.l == y.l && x.r == y.r && x.lambda == y.lambda;
}

LParam u1_param(const FieldTower& t, int64_t k) {
  return LParam{LParam::Kind::U1, reduce(k, t.p() + 1), 0, 0, t.zero()};
}

LParam j_param(const FieldTower& t, int64_t k, int64_t l) {
  return LParam{LParam::Kind::JPair, reduce(k, t.p() + 1), reduce(l, t.p() + 1), 0, t.zero()};
}

LParam endo_param(const FieldTower& t, int64_t k, int64_t l) {
  return LParam{LParam::Kind::Endo, reduce(k, t.p() + 1), reduce(l, t.p() + 1), 0, t.zero()};
}

LParam torus_param(const FieldTower& t, int64_t r, FF lambda) {
  if (t.is_zero(lambda)) throw std::invalid_argument("torus_param: lambda must be a unit");
  return LParam{LParam::Kind::Torus, 0, 0, reduce(r, t.p() * t.p() - 1), lambda};
}

bool is_g_param(const LParam& a) {
  return a.kind == LParam::Kind::Endo || a.kind == LParam::Kind::Torus;
}

bool is_regular(const LParam& a) { return a.kind == LParam::Kind::Endo && a.k != a.l; }

LParam xi_embed(const FieldTower& t, const LParam& j) {
  if (j.kind != LParam::Kind::JPair) throw std::invalid_argument("xi_embed: expected a JPair parameter");
  return endo_param(t, j.k, j.l);
}

std::array<MultChar, 2> restriction_chars(const FieldTower& t, const LParam& a) {
  const int64_t p = t.p();
  FF minus_one = t.neg(t.one());
  switch (a.kind) {
    case LParam::Kind::Endo:
      return {make_mult_char(t, 2, minus_one, (1 - p) * a.k),
              make_mult_char(t, 2, minus_one, (1 - p) * a.l)};
    case LParam::Kind::Torus:
      return {make_mult_char(t, 2, t.inv(a.lambda), a.r),
              make_mult_char(t, 2, a.lambda, -p * a.r)};
    default:
      throw std::invalid_argument("restriction_chars: big-group parameter required");
  }
}

Mat2 frobenius_matrix(const FieldTower& t, const LParam& a) {
  switch (a.kind) {
    case LParam::Kind::Endo:
      return Mat2{t.zero(), t.neg(t.one()), t.one(), t.zero()};
    case LParam::Kind::Torus:
      return Mat2{t.one(), t.zero(), t.zero(), a.lambda};
    default:
      throw std::invalid_argument("frobenius_matrix: big-group parameter required");
  }
}

bool param_equiv(const FieldTower& t, const LParam& a, const LParam& b) {
  const int64_t p = t.p(), mod = p * p - 1;
  bool a_g = is_g_param(a), b_g = is_g_param(b);
  if (a_g != b_g || (!a_g && a.kind != b.kind))
    throw std::invalid_argument("param_equiv: parameters of different dual groups");
  switch (a.kind) {
    case LParam::Kind::U1:
      return a.k == b.k;
    case LParam::Kind::JPair:
      // componentwise; the swap holds only after passing to the big group
      return a.k == b.k && a.l == b.l;
    default:
      break;
  }
  if (a.kind == LParam::Kind::Endo && b.kind == LParam::Kind::Endo)
    return (a.k == b.k && a.l == b.l) || (a.k == b.l && a.l == b.k);
  if (a.kind == LParam::Kind::Torus && b.kind == LParam::Kind::Torus) {
    if (a.r == b.r && a.lambda == b.lambda) return true;
    return b.r == reduce(-p * a.r, mod) && b.lambda == t.inv(a.lambda);
  }
  const LParam& e = a.kind == LParam::Kind::Endo ? a : b;
  const LParam& s = a.kind == LParam::Kind::Endo ? b : a;
  return e.k == e.l && s.r == reduce((1 - p) * e.k, mod) && s.lambda == t.neg(t.one());
}

// ---- intertwiner oracle ---------------------------------------------------
//
// Conjugating a parameter by g multiplies the Frobenius image A on the
// right by the pinned-automorphism image of g^{-1}; for 2x2 matrices that
// image is g / det(g).  So g carries (D, A) to (g D g^{-1}, g A g^{-1} det g),
// and equivalence amounts to:
//   (1) g D(h) = D'(h) g   for all h   (entry (i,j) vanishes unless the
//       j-th source character equals the i-th target character), and
//   (2) g A = delta^{-1} A' g   together with det(g) = delta.
// Both are linear in g once delta is fixed, and taking determinants in (2)
// forces delta^2 = det(A')/det(A).  The solution set of (1)+(2) is a
// subspace V_delta; scaling g by c keeps (1)+(2) and scales det(g) by c^2,
// so over the algebraic closure a valid conjugator exists exactly when the
// determinant form is not identically zero on V_delta.

namespace {

struct OracleData {
  std::array<MultChar, 2> chars;
  Mat2 A;
};

bool char_multisets_match(const OracleData& x, const OracleData& y) {
  return (x.chars[0] == y.chars[0] && x.chars[1] == y.chars[1]) ||
         (x.chars[0] == y.chars[1] && x.chars[1] == y.chars[0]);
}

// nullspace of an m x 4 system over the field, as column vectors
std::vector<std::array<FF, 4>> nullspace4(const FieldTower& t, std::vector<std::array<FF, 4>> rows) {
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int col = 0; col < 4 && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && t.is_zero(rows[piv][size_t(col)])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    FF inv = t.inv(rows[rank][size_t(col)]);
    for (int j = 0; j < 4; ++j) rows[rank][size_t(j)] = t.mul(rows[rank][size_t(j)], inv);
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || t.is_zero(rows[rr][size_t(col)])) continue;
      FF f = rows[rr][size_t(col)];
      for (int j = 0; j < 4; ++j)
        rows[rr][size_t(j)] = t.sub(rows[rr][size_t(j)], t.mul(f, rows[rank][size_t(j)]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(4, false);
  for (int c : pivot_col) is_pivot[size_t(c)] = true;
  std::vector<std::array<FF, 4>> basis;
  for (int fc = 0; fc < 4; ++fc) {
    if (is_pivot[size_t(fc)]) continue;
    std::array<FF, 4> v{t.zero(), t.zero(), t.zero(), t.zero()};
    v[size_t(fc)] = t.one();
    for (size_t rr = 0; rr < rank; ++rr)
      v[size_t(pivot_col[rr])] = t.neg(rows[rr][size_t(fc)]);
    basis.push_back(v);
  }
  return basis;
}

FF det_of(const FieldTower& t, const std::array<FF, 4>& g) {
  return t.sub(t.mul(g[0], g[3]), t.mul(g[1], g[2]));
}

bool oracle_on_data(const FieldTower& t, const OracleData& x, const OracleData& y) {
  if (!char_multisets_match(x, y)) return false;
  FF ratio = t.div(mat_det(t, y.A), mat_det(t, x.A));
  if (!t.is_square(ratio))
    throw std::runtime_error("intertwiner_oracle: determinant ratio left the field layer");
  FF delta0 = t.sqrt_first(ratio);
  for (FF delta : {delta0, t.neg(delta0)}) {
    // rows over unknowns (g00, g01, g10, g11)
    std::vector<std::array<FF, 4>> rows;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(x.chars[size_t(j)] == y.chars[size_t(i)])) {
          std::array<FF, 4> row{t.zero(), t.zero(), t.zero(), t.zero()};
          row[size_t(i * 2 + j)] = t.one();
          rows.push_back(row);
        }
    FF di = t.inv(delta);
    const FF Ax[2][2] = {{x.A.a, x.A.b}, {x.A.c, x.A.d}};
    const FF Ay[2][2] = {{y.A.a, y.A.b}, {y.A.c, y.A.d}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::array<FF, 4> row{t.zero(), t.zero(), t.zero(), t.zero()};
        for (int kk = 0; kk < 2; ++kk) {
          // + g_{i kk} A_{kk j}
          row[size_t(i * 2 + kk)] = t.add(row[size_t(i * 2 + kk)], Ax[kk][j]);
          // - delta^{-1} A'_{i kk} g_{kk j}
          row[size_t(kk * 2 + j)] =
              t.sub(row[size_t(kk * 2 + j)], t.mul(di, Ay[i][kk]));
        }
        rows.push_back(row);
      }
    auto basis = nullspace4(t, std::move(rows));
    if (basis.empty()) continue;
    // determinant form on the solution space: nonzero somewhere over the
    // closure iff some coefficient survives
    bool nonzero = false;
    for (size_t a = 0; a < basis.size() && !nonzero; ++a)
      nonzero = !t.is_zero(det_of(t, basis[a]));
    for (size_t a = 0; a < basis.size() && !nonzero; ++a)
      for (size_t b = a + 1; b < basis.size() && !nonzero; ++b) {
        std::array<FF, 4> s;
        for (int j = 0; j < 4; ++j) s[size_t(j)] = t.add(basis[a][size_t(j)], basis[b][size_t(j)]);
        FF cross = t.sub(t.sub(det_of(t, s), det_of(t, basis[a])), det_of(t, basis[b]));
        nonzero = !t.is_zero(cross);
      }
    if (nonzero) return true;
  }
  return false;
}

}  // namespace

bool intertwiner_oracle(const FieldTower& t, const LParam& a, const LParam& b) {
  if (!is_g_param(a) || !is_g_param(b))
    throw std::invalid_argument("intertwiner_oracle: big-group parameters required");
  OracleData x{restriction_chars(t, a), frobenius_matrix(t, a)};
  OracleData y{restriction_chars(t, b), frobenius_matrix(t, b)};
  return oracle_on_data(t, x, y);
}

LParam twist_param(const FieldTower& t, const LParam& a, int64_t j) {
  const int64_t p = t.p();
  switch (a.kind) {
    case LParam::Kind::Endo:
      return endo_param(t, a.k + j, a.l + j);
    case LParam::Kind::Torus:
      return torus_param(t, a.r + (1 - p) * j, a.lambda);
    default:
      throw std::invalid_argument("twist_param: big-group parameter required");
  }
}

std::vector<MultChar> induce_restrict(const FieldTower& t, int64_t m, FF lambda) {
  MultChar first = make_mult_char(t, 2, lambda, m);
  MultChar second = make_mult_char(t, 2, lambda, m * t.p());
  if (second.r < first.r) std::swap(first, second);
  return {first, second};
}

namespace {

// Packet of the torus parameter with normalized index data r + (1-p)k;
// every decomposition must give the same packet.
LPacket torus_packet(const FieldTower& t, int64_t rtilde, FF lambda) {
  const int64_t p = t.p(), mod = p * p - 1;
  LPacket result;
  bool have = false;
  for (int64_t k = 0; k <= p; ++k) {
    for (int64_t r = 0; r <= p - 1; ++r) {
      if (reduce(r + (1 - p) * k, mod) != reduce(rtilde, mod)) continue;
      LPacket half1 = reps::packet_det_twist(t, reps::pi_ss(t, r, lambda), k);
      LPacket half2 =
          reps::packet_det_twist(t, reps::pi_ss(t, p - 1 - r, t.inv(lambda)), k + r + 1);
      LPacket pkt = half1;
      pkt.insert(pkt.end(), half2.begin(), half2.end());
      pkt = reps::sorted_packet(t, std::move(pkt));
      if (!have) {
        result = pkt;
        have = true;
      } else if (!(result == pkt)) {
        throw std::runtime_error("torus packet is not independent of the decomposition");
      }
    }
  }
  if (!have) throw std::runtime_error("no decomposition r + (1-p)k found");
  return result;
}

}  // namespace

LPacket correspond(const FieldTower& t, const LParam& a) {
  const int64_t p = t.p();
  if (a.kind == LParam::Kind::Endo) {
    if (a.k != a.l) {
      return reps::sorted_packet(
          t, LPacket{reps::supercuspidal(t, a.l, chars::bracket(a.k - a.l - 1, p)),
                     reps::supercuspidal(t, a.k, chars::bracket(a.l - a.k - 1, p))});
    }
    // singular case: route through the equivalent torus parameter
    return correspond(t, torus_param(t, (1 - p) * a.k, t.neg(t.one())));
  }
  if (a.kind == LParam::Kind::Torus) return torus_packet(t, a.r, a.lambda);
  throw std::invalid_argument("correspond: big-group parameter required");
}

LPacket transfer(const FieldTower& t, int64_t k, int64_t l) {
  const int64_t p = t.p();
  k = reduce(k, p + 1);
  l = reduce(l, p + 1);
  if (k != l) {
    return reps::sorted_packet(t,
                               LPacket{reps::supercuspidal(t, l, chars::bracket(k - l - 1, p)),
                                       reps::supercuspidal(t, k, chars::bracket(l - k - 1, p))});
  }
  reps::IrrepLabel ps = reps::principal_series(t, (1 - p) * k, t.neg(t.one()));
  return LPacket{ps, ps};
}

// ---- C-group layer --------------------------------------------------------

bool operator==(const CParam& x, const CParam& y) {
  return x.kind == y.kind && x.k == y.k && x.l == y.l && x.r == y.r && x.lambda == y.lambda &&
         x.alt_root == y.alt_root;
}

CParam c_endo(const FieldTower& t, int64_t k, int64_t l, bool alt_root) {
  return CParam{CParam::Kind::Endo, reduce(k, t.p() + 1), reduce(l, t.p() + 1), 0, t.zero(),
                alt_root};
}

CParam c_torus(const FieldTower& t, int64_t r, FF lambda, bool alt_root) {
  if (t.is_zero(lambda)) throw std::invalid_argument("c_torus: lambda must be a unit");
  return CParam{CParam::Kind::Torus, 0, 0, reduce(r, t.p() * t.p() - 1), lambda, alt_root};
}

namespace {

// tame exponent of the chosen square root of the cyclotomic character
int64_t half_cyclotomic(const FieldTower& t, bool alt_root) {
  const int64_t p = t.p();
  return (p + 1) / 2 + (alt_root ? (p * p - 1) / 2 : 0);
}

}  // namespace

bool c_equiv(const FieldTower& t, const CParam& a, const CParam& b) {
  const int64_t p = t.p(), mod = p * p - 1;
  if (a.alt_root != b.alt_root)
    throw std::invalid_argument("c_equiv: parameters use different square roots");
  if (a.kind == CParam::Kind::Endo && b.kind == CParam::Kind::Endo)
    return (a.k == b.k && a.l == b.l) || (a.k == b.l && a.l == b.k);
  if (a.kind == CParam::Kind::Torus && b.kind == CParam::Kind::Torus) {
    if (a.r == b.r && a.lambda == b.lambda) return true;
    return b.r == reduce(-p * a.r - (p + 1), mod) && b.lambda == t.inv(a.lambda);
  }
  const CParam& e = a.kind == CParam::Kind::Endo ? a : b;
  const CParam& s = a.kind == CParam::Kind::Endo ? b : a;
  return e.k == e.l && s.r == reduce(-1 + (1 - p) * e.k, mod) && s.lambda == t.neg(t.one());
}

std::array<MultChar, 2> c_restriction_chars(const FieldTower& t, const CParam& a) {
  const int64_t p = t.p();
  const int64_t w = half_cyclotomic(t, a.alt_root);
  FF minus_one = t.neg(t.one());
  if (a.kind == CParam::Kind::Endo)
    return {make_mult_char(t, 2, minus_one, -1 + (1 - p) * a.k + w),
            make_mult_char(t, 2, minus_one, -1 + (1 - p) * a.l + w)};
  return {make_mult_char(t, 2, t.inv(a.lambda), a.r + w),
          make_mult_char(t, 2, a.lambda, -p * a.r - (p + 1) + w)};
}

Mat2 c_frobenius_matrix(const FieldTower& t, const CParam& a) {
  if (a.kind == CParam::Kind::Endo) return Mat2{t.zero(), t.neg(t.one()), t.one(), t.zero()};
  return Mat2{t.one(), t.zero(), t.zero(), a.lambda};
}

bool c_intertwiner_oracle(const FieldTower& t, const CParam& a, const CParam& b) {
  if (a.alt_root != b.alt_root)
    throw std::invalid_argument("c_intertwiner_oracle: parameters use different square roots");
  OracleData x{c_restriction_chars(t, a), c_frobenius_matrix(t, a)};
  OracleData y{c_restriction_chars(t, b), c_frobenius_matrix(t, b)};
  return oracle_on_data(t, x, y);
}

MultChar c_d(const FieldTower& t, const CParam& a) {
  const int64_t w = half_cyclotomic(t, a.alt_root);
  MultChar half = make_mult_char(t, 2, t.one(), w);
  return chars::char_mul(t, half, half);
}

reps::LPacket c_correspond(const FieldTower& t, const CParam& a) {
  const int64_t p = t.p();
  if (a.kind == CParam::Kind::Endo) {
    if (a.k != a.l) {
      return reps::sorted_packet(
          t, LPacket{reps::supercuspidal(t, a.l, chars::bracket(a.k - a.l - 1, p)),
                     reps::supercuspidal(t, a.k, chars::bracket(a.l - a.k - 1, p))});
    }
    return c_correspond(t, c_torus(t, -1 + (1 - p) * a.k, t.neg(t.one()), a.alt_root));
  }
  // indices carry the r - 1 shift relative to the plain layer
  return torus_packet(t, a.r + 1, a.lambda);
}

// ---- sweeps ----------------------------------------------------------------

std::vector<LParam> all_endo_params(const FieldTower& t) {
  std::vector<LParam> out;
  for (int64_t k = 0; k <= t.p(); ++k)
    for (int64_t l = 0; l <= t.p(); ++l) out.push_back(endo_param(t, k, l));
  return out;
}

std::vector<LParam> all_torus_params(const FieldTower& t, int lambda_degree) {
  std::vector<LParam> out;
  for (int64_t r = 0; r < t.p() * t.p() - 1; ++r)
    for (FF lambda : t.subfield_units(lambda_degree)) out.push_back(torus_param(t, r, lambda));
  return out;
}

SweepResult sweep_oracle_agreement(const FieldTower& t, int lambda_degree, bool parallel) {
  std::vector<LParam> params = all_endo_params(t);
  auto torus = all_torus_params(t, lambda_degree);
  params.insert(params.end(), torus.begin(), torus.end());
  const int64_t n = int64_t(params.size());
  SweepResult res;
  res.pairs = uint64_t(n) * uint64_t(n);
  int64_t first = -1;
  uint64_t bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad) if (parallel)
#else
  (void)parallel;
#endif
  for (int64_t idx = 0; idx < n * n; ++idx) {
    const LParam& a = params[size_t(idx / n)];
    const LParam& b = params[size_t(idx % n)];
    if (param_equiv(t, a, b) != intertwiner_oracle(t, a, b)) {
      ++bad;
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (first < 0 || idx < first) first = idx;
      }
    }
  }
  res.disagreements = bad;
  if (first >= 0) {
    std::ostringstream os;
    os << "pair index " << first;
    res.first_disagreement = os.str();
  }
  return res;
}

namespace {

template <class Param, class EquivFn>
int64_t count_classes(const std::vector<Param>& params, EquivFn&& equiv) {
  std::vector<bool> used(params.size(), false);
  int64_t classes = 0;
  for (size_t i = 0; i < params.size(); ++i) {
    if (used[i]) continue;
    ++classes;
    for (size_t j = i; j < params.size(); ++j)
      if (!used[j] && equiv(params[i], params[j])) used[j] = true;
  }
  return classes;
}

}  // namespace

ClassCounts count_l_classes(const FieldTower& t, int lambda_degree) {
  ClassCounts c;
  std::vector<LParam> regular;
  for (const LParam& a : all_endo_params(t))
    if (is_regular(a)) regular.push_back(a);
  c.regular_endo =
      count_classes(regular, [&](const LParam& a, const LParam& b) { return param_equiv(t, a, b); });
  auto torus = all_torus_params(t, lambda_degree);
  c.torus =
      count_classes(torus, [&](const LParam& a, const LParam& b) { return param_equiv(t, a, b); });
  return c;
}

ClassCounts count_c_classes(const FieldTower& t, int lambda_degree) {
  ClassCounts c;
  std::vector<CParam> regular;
  for (int64_t k = 0; k <= t.p(); ++k)
    for (int64_t l = 0; l <= t.p(); ++l)
      if (k != l) regular.push_back(c_endo(t, k, l));
  c.regular_endo =
      count_classes(regular, [&](const CParam& a, const CParam& b) { return c_equiv(t, a, b); });
  std::vector<CParam> torus;
  for (int64_t r = 0; r < t.p() * t.p() - 1; ++r)
    for (FF lambda : t.subfield_units(lambda_degree)) torus.push_back(c_torus(t, r, lambda));
  c.torus =
      count_classes(torus, [&](const CParam& a, const CParam& b) { return c_equiv(t, a, b); });
  return c;
}

}  // namespace u11::langlands
