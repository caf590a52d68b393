#include "u11/finituni.hpp"

#include <algorithm>
#include <stdexcept>

namespace u11::finituni {

Mat2 mat_id(const FieldTower& t) { return Mat2{t.one(), t.zero(), t.zero(), t.one()}; }

Mat2 mat_mul(const FieldTower& t, const Mat2& x, const Mat2& y) {
  return Mat2{
      t.add(t.mul(x.a, y.a), t.mul(x.b, y.c)), t.add(t.mul(x.a, y.b), t.mul(x.b, y.d)),
      t.add(t.mul(x.c, y.a), t.mul(x.d, y.c)), t.add(t.mul(x.c, y.b), t.mul(x.d, y.d))};
}

FF mat_det(const FieldTower& t, const Mat2& x) {
  return t.sub(t.mul(x.a, x.d), t.mul(x.b, x.c));
}

Mat2 mat_inv(const FieldTower& t, const Mat2& x) {
  FF di = t.inv(mat_det(t, x));
  return Mat2{t.mul(di, x.d), t.mul(di, t.neg(x.b)), t.mul(di, t.neg(x.c)), t.mul(di, x.a)};
}

Mat2 mat_scalar_mul(const FieldTower& t, FF s, const Mat2& x) {
  return Mat2{t.mul(s, x.a), t.mul(s, x.b), t.mul(s, x.c), t.mul(s, x.d)};
}

Mat2 conj_transpose(const FieldTower& t, const Mat2& x) {
  return Mat2{t.conj(x.a), t.conj(x.c), t.conj(x.b), t.conj(x.d)};
}

Mat2 weyl_rep(const FieldTower& t) {
  FF se = t.sqrt_nonsquare();
  return Mat2{t.zero(), t.neg(t.inv(se)), se, t.zero()};
}

Mat2 upper_unip(const FieldTower& t, FF x) {
  if (!t.is_zero(t.add(x, t.conj(x)))) throw std::invalid_argument("upper_unip: trace of x must vanish");
  return Mat2{t.one(), x, t.zero(), t.one()};
}

Mat2 torus_elem(const FieldTower& t, FF a) {
  return Mat2{a, t.zero(), t.zero(), t.inv(t.conj(a))};
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::U11: return "u11";
    case Variant::SU: return "su";
    case Variant::GU: return "gu";
    case Variant::U1: return "u1";
  }
  return "?";
}

namespace {

// g* s g for s the antidiagonal form matrix.
Mat2 form_transport(const FieldTower& t, const Mat2& g) {
  Mat2 gs = conj_transpose(t, g);
  Mat2 sg{g.c, g.d, g.a, g.b};  // s * g
  return mat_mul(t, gs, sg);
}

bool member_u11(const FieldTower& t, const Mat2& g) {
  Mat2 m = form_transport(t, g);
  return t.is_zero(m.a) && t.is_zero(m.d) && m.b == t.one() && m.c == t.one();
}

}  // namespace

bool member(const FieldTower& t, Variant v, const Mat2& g) {
  switch (v) {
    case Variant::U11:
      return member_u11(t, g);
    case Variant::SU:
      return member_u11(t, g) && mat_det(t, g) == t.one();
    case Variant::GU: {
      Mat2 m = form_transport(t, g);
      return t.is_zero(m.a) && t.is_zero(m.d) && m.b == m.c && !t.is_zero(m.b) &&
             t.in_layer(m.b, Layer::Q);
    }
    case Variant::U1:
      return t.is_zero(g.b) && t.is_zero(g.c) && g.a == g.d && !t.is_zero(g.a) &&
             t.in_layer(g.a, Layer::Q2) && t.norm(g.a) == t.one();
  }
  return false;
}

uint64_t GroupTable::mat_key(const Mat2& g) const {
  const FieldTower& t = *tower;
  // keys within the F_{q^2} layer so that four of them pack into 64 bits;
  // entries outside the layer map to a key no table element carries
  bool foreign = false;
  auto k = [&](FF x) -> uint64_t {
    if (t.is_zero(x)) return 0;
    auto e = t.dlog_in(Layer::Q2, x);
    if (!e) {
      foreign = true;
      return 0;
    }
    return uint64_t(*e) + 1;
  };
  uint64_t base = uint64_t(t.q() * t.q()) + 1;
  uint64_t key = ((k(g.a) * base + k(g.b)) * base + k(g.c)) * base + k(g.d);
  return foreign ? ~uint64_t(0) : key;
}

uint32_t GroupTable::index_of(const Mat2& g) const {
  auto it = lookup.find(mat_key(g));
  if (it == lookup.end()) throw std::invalid_argument("matrix not in the group table");
  return it->second;
}

bool GroupTable::contains(const Mat2& g) const { return lookup.count(mat_key(g)) != 0; }

uint32_t GroupTable::product(uint32_t i, uint32_t j) const {
  if (has_mult) return mult[size_t(i) * elements.size() + j];
  return index_of(mat_mul(*tower, elements[i], elements[j]));
}

void GroupTable::build_product_table() {
  if (has_mult) return;
  const size_t n = elements.size();
  mult.assign(n * n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t i = 0; i < int64_t(n); ++i)
    for (size_t j = 0; j < n; ++j)
      mult[size_t(i) * n + j] = index_of(mat_mul(*tower, elements[size_t(i)], elements[j]));
  has_mult = true;
}

namespace {

// trace of x over the quadratic layer
bool trace_zero(const FieldTower& t, FF x) { return t.is_zero(t.add(x, t.conj(x))); }

GroupTable finish_table(const FieldTower& t, Variant v, std::vector<Mat2> elems) {
  GroupTable table;
  table.variant = v;
  table.tower = &t;
  table.elements = std::move(elems);
  table.lookup.reserve(table.elements.size() * 2);
  for (uint32_t i = 0; i < table.elements.size(); ++i)
    table.lookup.emplace(table.mat_key(table.elements[i]), i);
  table.identity = table.index_of(mat_id(t));
  table.inverse.resize(table.elements.size());
  table.in_borel.resize(table.elements.size());
  table.in_unipotent.resize(table.elements.size());
  table.in_torus.resize(table.elements.size());
  table.in_center_u1.resize(table.elements.size());
  table.in_su.resize(table.elements.size());
  for (uint32_t i = 0; i < table.elements.size(); ++i) {
    const Mat2& g = table.elements[i];
    table.inverse[i] = table.index_of(mat_inv(t, g));
    bool lower_zero = t.is_zero(g.c);
    table.in_borel[i] = lower_zero;
    table.in_unipotent[i] = lower_zero && g.a == t.one() && g.d == t.one();
    table.in_torus[i] = lower_zero && t.is_zero(g.b);
    table.in_center_u1[i] = member(t, Variant::U1, g);
    table.in_su[i] = mat_det(t, g) == t.one();
  }
  return table;
}

// Solves the defining equations column by column instead of scanning all
// of the entry space.  Writing the form-transport equations out for
// g = [[a,b],[c,d]]: the (1,1) entry asks for trace(conj(a) c) = 0, the
// (1,2) entry pins conj(a) d + conj(c) b to the similitude value, the
// (2,2) entry asks for trace(conj(b) d) = 0, and the (2,1) entry is the
// conjugate of (1,2).  So for a != 0 the matrix is determined by
// (a, b, c, kappa), and for a = 0 by (b, kappa, d).  Emission order is the
// canonical one: lexicographic in the entry keys.
void scan_row(const FieldTower& t, Variant v, FF a, const std::vector<FF>& cand,
              const std::vector<FF>& valid_c, const std::vector<FF>& kappas,
              std::vector<Mat2>& out) {
  const bool su = v == Variant::SU;
  auto emit = [&](const Mat2& g) {
    if (su && mat_det(t, g) != t.one()) return;
    out.push_back(g);
  };
  if (t.is_zero(a)) {
    for (FF b : cand) {
      if (t.is_zero(b)) continue;
      std::vector<std::pair<uint64_t, Mat2>> found;
      for (FF kappa : kappas) {
        FF c = t.mul(kappa, t.inv(t.conj(b)));
        for (FF d : cand) {
          if (!trace_zero(t, t.mul(t.conj(b), d))) continue;
          found.emplace_back((t.entry_key(c) << 32) | t.entry_key(d), Mat2{a, b, c, d});
        }
      }
      std::sort(found.begin(), found.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [key, g] : found) {
        (void)key;
        emit(g);
      }
    }
    return;
  }
  FF abar_inv = t.inv(t.conj(a));
  for (FF b : cand) {
    FF bbar = t.is_zero(b) ? t.zero() : t.conj(b);
    for (FF c : valid_c) {
      std::vector<std::pair<uint64_t, Mat2>> found;
      for (FF kappa : kappas) {
        FF d = t.mul(t.sub(kappa, t.mul(t.conj(c), b)), abar_inv);
        if (!trace_zero(t, t.mul(bbar, d))) continue;
        found.emplace_back(t.entry_key(d), Mat2{a, b, c, d});
      }
      std::sort(found.begin(), found.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [key, g] : found) {
        (void)key;
        emit(g);
      }
    }
  }
}

std::vector<Mat2> scan_constructive(const FieldTower& t, Variant v, bool parallel) {
  auto cand = t.layer_elements(Layer::Q2);
  if (v == Variant::U1) {
    std::vector<Mat2> out;
    for (FF a : cand)
      if (!t.is_zero(a) && t.norm(a) == t.one())
        out.push_back(Mat2{a, t.zero(), t.zero(), a});
    return out;
  }
  std::vector<FF> kappas =
      v == Variant::GU ? t.layer_units(Layer::Q) : std::vector<FF>{t.one()};
  const size_t nc = cand.size();
  std::vector<std::vector<Mat2>> buckets(nc);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (int64_t ia = 0; ia < int64_t(nc); ++ia) {
    FF a = cand[size_t(ia)];
    std::vector<FF> valid_c;
    if (!t.is_zero(a)) {
      FF abar = t.conj(a);
      for (FF c : cand)
        if (trace_zero(t, t.mul(abar, c))) valid_c.push_back(c);
    }
    scan_row(t, v, a, cand, valid_c, kappas, buckets[size_t(ia)]);
  }
  std::vector<Mat2> elems;
  for (auto& b : buckets) elems.insert(elems.end(), b.begin(), b.end());
  // guard the constructive derivation
  for (const Mat2& g : elems)
    if (!member(t, v, g)) throw std::runtime_error("enumeration produced a non-member");
  return elems;
}

}  // namespace

GroupTable enumerate_group_serial(const FieldTower& t, Variant v, int64_t q_bound) {
  if (t.q() > q_bound) throw std::invalid_argument("enumerate_group: q exceeds the enumeration bound");
  return finish_table(t, v, scan_constructive(t, v, false));
}

GroupTable enumerate_group(const FieldTower& t, Variant v, int64_t q_bound) {
  if (t.q() > q_bound) throw std::invalid_argument("enumerate_group: q exceeds the enumeration bound");
  return finish_table(t, v, scan_constructive(t, v, true));
}

GroupTable enumerate_group_brute(const FieldTower& t, Variant v, int64_t q_bound) {
  if (t.q() > q_bound) throw std::invalid_argument("enumerate_group: q exceeds the enumeration bound");
  auto cand = t.layer_elements(Layer::Q2);
  std::vector<Mat2> out;
  for (FF a : cand)
    for (FF b : cand)
      for (FF c : cand)
        for (FF d : cand) {
          Mat2 g{a, b, c, d};
          if (member(t, v, g)) out.push_back(g);
        }
  return finish_table(t, v, out);
}

BruhatCell bruhat_decompose(const GroupTable& table, const Mat2& g) {
  if (table.variant != Variant::U11 && table.variant != Variant::SU)
    throw std::invalid_argument("bruhat_decompose: table must be a U(1,1) or SU(1,1) table");
  const FieldTower& t = *table.tower;
  if (!table.contains(g)) throw std::invalid_argument("bruhat_decompose: matrix not in the table");
  if (t.is_zero(g.c)) return BruhatCell{false, g, mat_id(t)};
  // g = u(a/c) h(t0) w u(d/c) with t0 = -sqrt(eps)/conj(c); membership of g
  // makes a/c and d/c trace-zero and the product identity exact.
  FF x1 = t.div(g.a, g.c);
  FF x2 = t.div(g.d, g.c);
  FF t0 = t.neg(t.div(t.sqrt_nonsquare(), t.conj(g.c)));
  Mat2 b1 = mat_mul(t, upper_unip(t, x1), torus_elem(t, t0));
  Mat2 b2 = upper_unip(t, x2);
  Mat2 check = mat_mul(t, mat_mul(t, b1, weyl_rep(t)), b2);
  if (!(check == g)) throw std::runtime_error("bruhat_decompose: witness verification failed");
  return BruhatCell{true, b1, b2};
}

int64_t det_norm_index(const GroupTable& table) {
  if (table.variant != Variant::U11)
    throw std::invalid_argument("det_norm_index: table must be the full unitary table");
  const FieldTower& t = *table.tower;
  std::vector<uint32_t> image;
  for (const Mat2& g : table.elements) {
    FF d = mat_det(t, g);
    if (t.norm(d) != t.one()) throw std::runtime_error("det_norm_index: determinant not norm-one");
    image.push_back(d.idx);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return int64_t(image.size());
}

WeightSpace sym_weight_invariants(const FieldTower& t, int64_t r) {
  if (t.f() != 1) throw std::invalid_argument("sym_weight_invariants: requires q = p");
  const int64_t p = t.p();
  if (r < 0 || r > p - 1) throw std::invalid_argument("sym_weight_invariants: r out of range");
  const int n = int(r) + 1;
  // action of [[1,1],[0,1]] on x^{r-i} y^i: y -> x + y, so column i picks
  // up binomial coefficients; solve (M - I) z = 0 over F_p
  std::vector<std::vector<int64_t>> binom(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = (binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0)) % p;
  }
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m[j][i] = binom[i][j];
    m[i][i] = (m[i][i] - 1 + p) % p;
  }
  // Gaussian elimination mod p
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    int64_t inv = 1, a = m[rank][col];
    for (int64_t x = 1; x < p; ++x)
      if (a * x % p == 1) inv = x;
    for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      int64_t fse = m[row][col];
      for (int j = 0; j < n; ++j) m[row][j] = ((m[row][j] - fse * m[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  WeightSpace ws;
  ws.dimension = n - rank;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<int64_t> v(n, 0);
    v[fc] = 1;
    for (int rrow = 0; rrow < rank; ++rrow)
      v[pivot_col[rrow]] = (p - m[rrow][fc] % p) % p;
    ws.basis.push_back(std::move(v));
  }
  return ws;
}

// ---- coset algebra ----------------------------------------------------

CosetAlgebra make_coset_algebra(GroupTable& table) {
  if (table.variant != Variant::SU)
    throw std::invalid_argument("make_coset_algebra: requires the SU table");
  if (table.size() * table.size() <= (1u << 21)) table.build_product_table();
  CosetAlgebra A;
  A.G = &table;
  const size_t n = table.size();
  for (uint32_t i = 0; i < n; ++i)
    if (table.in_unipotent[i]) A.unipotent.push_back(i);

  std::vector<uint8_t> seen(n, 0);
  for (uint32_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    A.left_reps.push_back(g);
    for (uint32_t u : A.unipotent) seen[table.product(g, u)] = 1;
  }

  A.coset_of.assign(n, 0);
  std::vector<uint8_t> done(n, 0);
  for (uint32_t g = 0; g < n; ++g) {
    if (done[g]) continue;
    uint32_t id = uint32_t(A.coset_rep.size());
    A.coset_rep.push_back(g);
    for (uint32_t u1 : A.unipotent)
      for (uint32_t u2 : A.unipotent) {
        uint32_t e = table.product(table.product(u1, g), u2);
        done[e] = 1;
        A.coset_of[e] = id;
      }
  }
  return A;
}

CosetFn zero_fn(const CosetAlgebra& A) {
  return CosetFn(A.num_cosets(), A.G->tower->zero());
}

CosetFn unit_fn(const CosetAlgebra& A) { return t_basis(A, A.G->identity); }

CosetFn t_basis(const CosetAlgebra& A, uint32_t elt) {
  CosetFn f = zero_fn(A);
  f[A.coset_of[elt]] = A.G->tower->one();
  return f;
}

std::vector<FF> expand(const CosetAlgebra& A, const CosetFn& f) {
  std::vector<FF> full(A.G->size());
  for (size_t g = 0; g < full.size(); ++g) full[g] = f[A.coset_of[g]];
  return full;
}

CosetFn project(const CosetAlgebra& A, const std::vector<FF>& full) {
  if (full.size() != A.G->size()) throw std::invalid_argument("project: wrong vector length");
  CosetFn f = zero_fn(A);
  for (size_t c = 0; c < A.num_cosets(); ++c) f[c] = full[A.coset_rep[c]];
  for (size_t g = 0; g < full.size(); ++g)
    if (full[g] != f[A.coset_of[g]])
      throw std::invalid_argument("project: function is not U-biinvariant");
  return f;
}

namespace {

CosetFn convolve_impl(const CosetAlgebra& A, const CosetFn& f1, const CosetFn& f2, bool parallel) {
  const GroupTable& G = *A.G;
  const FieldTower& t = *G.tower;
  if (f1.size() != A.num_cosets() || f2.size() != A.num_cosets())
    throw std::invalid_argument("convolve: value vector has wrong length");
  CosetFn out = zero_fn(A);
  const int64_t nw = int64_t(A.num_cosets());
  // fork only when the work outweighs the thread startup
  parallel = parallel && A.num_cosets() * A.left_reps.size() >= (1u << 15);
  // (f1 * f2)(g) = sum over xU in G/U of f1(x) f2(x^{-1} g)
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#else
  (void)parallel;
#endif
  for (int64_t w = 0; w < nw; ++w) {
    uint32_t g = A.coset_rep[size_t(w)];
    FF acc = t.zero();
    for (uint32_t x : A.left_reps) {
      FF v1 = f1[A.coset_of[x]];
      if (t.is_zero(v1)) continue;
      uint32_t y = G.product(G.inverse[x], g);
      acc = t.add(acc, t.mul(v1, f2[A.coset_of[y]]));
    }
    out[size_t(w)] = acc;
  }
  return out;
}

}  // namespace

CosetFn convolve(const CosetAlgebra& A, const CosetFn& f1, const CosetFn& f2) {
  return convolve_impl(A, f1, f2, true);
}

CosetFn convolve_serial(const CosetAlgebra& A, const CosetFn& f1, const CosetFn& f2) {
  return convolve_impl(A, f1, f2, false);
}

}  // namespace u11::finituni
