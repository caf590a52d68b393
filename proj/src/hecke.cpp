#include "u11/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace u11::hecke {

using finituni::CosetAlgebra;
using finituni::CosetFn;
using finituni::GroupTable;
using finituni::Mat2;

std::vector<Module1D> supersingular_table(const FieldTower& t) {
  const int64_t q = t.q(), p = t.p();
  std::vector<Module1D> rows;
  rows.reserve(size_t(q));
  rows.push_back(Module1D{0, 0, 0, p - 1});
  for (int64_t r = 1; r < q - 1; ++r) rows.push_back(Module1D{r, r, 0, 0});
  rows.push_back(Module1D{q - 1, 0, p - 1, 0});
  return rows;
}

Module1D cusp_module(const FieldTower& t, int64_t r) {
  if (t.f() != 1) throw std::invalid_argument("cusp_module: requires q = p");
  if (r < 0 || r > t.p() - 1) throw std::invalid_argument("cusp_module: r out of range");
  return supersingular_table(t)[size_t(r)];
}

namespace {

// finite torus of the SU table: indices of diag(a, a^{-1}), a in F_q^x,
// paired with a
std::vector<std::pair<uint32_t, FF>> su_torus(const FieldTower& t, const GroupTable& G) {
  std::vector<std::pair<uint32_t, FF>> out;
  for (uint32_t i = 0; i < G.size(); ++i) {
    if (!G.in_torus[i]) continue;
    out.emplace_back(i, G.elements[i].a);
  }
  if (int64_t(out.size()) != t.q() - 1) throw std::runtime_error("unexpected torus size");
  return out;
}

}  // namespace

CosetFn make_idempotent(const FieldTower& t, const CosetAlgebra& A, int64_t r) {
  const GroupTable& G = *A.G;
  const int64_t q = t.q();
  if (r < 0 || r > q - 2) throw std::invalid_argument("make_idempotent: index out of range");
  CosetFn f = finituni::zero_fn(A);
  // |H|^{-1} = (q-1)^{-1} = -1 mod p
  FF minus_one = t.neg(t.one());
  for (auto [i, a] : su_torus(t, G)) f[A.coset_of[i]] = t.mul(minus_one, t.pow(a, r));
  return f;
}

RelationReport validate_relations(const FieldTower& t, GroupTable& su_table,
                                  const std::optional<std::vector<Module1D>>& table_override,
                                  bool parallel) {
  if (su_table.variant != finituni::Variant::SU)
    throw std::invalid_argument("validate_relations: SU table required");
  RelationReport rep;
  rep.q = t.q();
  const int64_t q = t.q();
  CosetAlgebra A = finituni::make_coset_algebra(su_table);
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };

  // (i) idempotent laws under the convolution oracle; the pair sweep is
  // the data-parallel grain, results reduced in index order
  std::vector<CosetFn> e;
  for (int64_t r = 0; r < q - 1; ++r) e.push_back(make_idempotent(t, A, r));
  const int64_t npairs = (q - 1) * (q - 1);
  std::vector<uint8_t> pair_ok(size_t(npairs), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (int64_t idx = 0; idx < npairs; ++idx) {
    const int64_t r = idx / (q - 1), s = idx % (q - 1);
    CosetFn prod = finituni::convolve_serial(A, e[size_t(r)], e[size_t(s)]);
    CosetFn want = r == s ? e[size_t(r)] : finituni::zero_fn(A);
    pair_ok[size_t(idx)] = prod == want;
  }
  for (int64_t idx = 0; idx < npairs; ++idx) {
    ++rep.idempotent_checks;
    if (!pair_ok[size_t(idx)]) {
      std::ostringstream os;
      os << "e_" << idx / (q - 1) << " * e_" << idx % (q - 1)
         << " violates the idempotent law";
      fail(os.str());
    }
  }
  CosetFn sum = finituni::zero_fn(A);
  for (auto& er : e)
    for (size_t c = 0; c < sum.size(); ++c) sum[c] = t.add(sum[c], er[c]);
  ++rep.idempotent_checks;
  if (sum != finituni::unit_fn(A)) fail("sum of the idempotents is not the unit");

  // (ii) quadratic relation of the reflection operator, derived by brute
  // convolution and expressed in the T-basis, applied to the module table
  const Mat2 w = finituni::weyl_rep(t);
  const uint32_t w_idx = su_table.index_of(w);
  auto torus = su_torus(t, su_table);
  CosetFn tw = finituni::t_basis(A, w_idx);
  CosetFn tw2 = finituni::convolve(A, tw, tw);

  // sanity underpinning the module check: T_h * T_w = T_{hw}
  for (auto [i, a] : torus) {
    (void)a;
    CosetFn lhs = finituni::convolve(A, finituni::t_basis(A, i), tw);
    if (lhs != finituni::t_basis(A, su_table.product(i, w_idx)))
      fail("T_h * T_w is not T_{hw}");
  }

  // T_w^2 = sum_h alpha_h T_h + sum_h beta_h T_{h w}; read the
  // coefficients off the double cosets
  std::vector<FF> alpha, beta;
  std::vector<FF> tvals;
  for (auto [i, a] : torus) {
    alpha.push_back(tw2[A.coset_of[i]]);
    beta.push_back(tw2[A.coset_of[su_table.product(i, w_idx)]]);
    tvals.push_back(a);
  }
  {
    // every double coset is of one of the two shapes above; make sure the
    // readout saw all of the mass
    CosetFn rebuilt = finituni::zero_fn(A);
    for (size_t i = 0; i < torus.size(); ++i) {
      rebuilt[A.coset_of[torus[i].first]] = t.add(rebuilt[A.coset_of[torus[i].first]], alpha[i]);
      uint32_t hw = su_table.product(torus[i].first, w_idx);
      rebuilt[A.coset_of[hw]] = t.add(rebuilt[A.coset_of[hw]], beta[i]);
    }
    if (rebuilt != tw2) fail("T-basis readout of T_w^2 is incomplete");
  }

  // On a one-dimensional module with character component r, T_h acts by
  // chi_r(h)^{-1} = a^{-r} and T_{hw} by a^{-r} times the reflection
  // scalar.  Check a^2 = alpha^(r) + a * beta^(r) for both tabled scalars.
  const auto table = table_override ? *table_override : supersingular_table(t);
  for (const Module1D& m : table) {
    FF ahat = t.zero(), bhat = t.zero();
    for (size_t i = 0; i < tvals.size(); ++i) {
      FF chi_inv = t.pow(tvals[i], -m.idem_index);
      ahat = t.add(ahat, t.mul(alpha[i], chi_inv));
      bhat = t.add(bhat, t.mul(beta[i], chi_inv));
    }
    for (int side = 0; side < 2; ++side) {
      FF a = t.from_int(side == 0 ? m.a_s : m.a_s_prime);
      ++rep.module_checks;
      FF lhs = t.mul(a, a);
      FF rhs = t.add(ahat, t.mul(a, bhat));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "module M_" << m.label << " violates the quadratic relation on "
           << (side == 0 ? "a_s" : "a_s_prime") << ": " << t.format(lhs) << " != "
           << t.format(rhs);
        fail(os.str());
      }
    }
  }
  return rep;
}

}  // namespace u11::hecke
