#include "u11/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace u11::ffield {

namespace {

using Poly = std::vector<int64_t>;  // coefficient i of x^i, values in [0,p)

bool is_odd_prime(int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::vector<int64_t> prime_factors(int64_t m) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int64_t p) {
  const size_t n = mod.size() - 1;
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (size_t d = prod.size(); d-- > n;) {
    int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < n; ++i) {
      // x^n = -sum mod[i] x^i since mod is monic
      prod[d - n + i] = ((prod[d - n + i] - c * mod[i]) % p + p) % p;
    }
  }
  prod.resize(n);
  return prod;
}

Poly poly_pow_mod(Poly base, int64_t e, const Poly& mod, int64_t p) {
  const size_t n = mod.size() - 1;
  Poly r(n, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

FieldTower::FieldTower(int64_t p, int f, int k) : p_(p), f_(f), k_(k) {
  if (!is_odd_prime(p)) throw std::invalid_argument("field_make: p must be an odd prime");
  if (f < 1 || k < 1) throw std::invalid_argument("field_make: f and k must be >= 1");
  q_ = ipow(p_, f_);
  n_ = 2 * std::lcm(f_, k_);

  // Guard the table sizes; everything this library is exercised with is
  // far below the bound.
  double logN = double(n_) * std::log2(double(p_));
  if (logN > 24.0) throw std::invalid_argument("field_make: tower too large (p^(2*lcm(f,k)) > 2^24)");
  N_ = ipow(p_, n_);

  build_tables();
}

void FieldTower::build_tables() {
  // Canonical smallest monic primitive polynomial of degree n: scan
  // candidates by the packed-integer encoding of (a_0, ..., a_{n-1}) and
  // keep the first one for which x has full multiplicative order.  Full
  // order already forces irreducibility.
  const auto factors = prime_factors(N_ - 1);
  Poly x{0, 1};
  for (int64_t cand = 1; cand < N_; ++cand) {
    if (cand % p_ == 0) continue;  // a_0 = 0 never yields a unit x
    Poly mod(n_ + 1, 0);
    mod[n_] = 1;
    int64_t t = cand;
    for (int i = 0; i < n_; ++i) {
      mod[i] = t % p_;
      t /= p_;
    }
    if (!poly_is_one(poly_pow_mod(x, N_ - 1, mod, p_))) continue;
    bool primitive = true;
    for (int64_t ell : factors) {
      if (poly_is_one(poly_pow_mod(x, (N_ - 1) / ell, mod, p_))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      modulus_ = mod;
      break;
    }
  }
  if (modulus_.empty()) throw std::runtime_error("no primitive polynomial found");

  exp_.assign(size_t(N_ - 1), 0);
  log_.assign(size_t(N_), -1);
  std::vector<int64_t> cur(n_, 0);
  cur[0] = 1;
  auto pack = [&](const std::vector<int64_t>& d) {
    int64_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) v = v * p_ + d[i];
    return uint32_t(v);
  };
  for (int64_t e = 0; e < N_ - 1; ++e) {
    uint32_t idx = pack(cur);
    exp_[size_t(e)] = idx;
    log_[idx] = int32_t(e);
    // multiply by x
    int64_t carry = cur[n_ - 1];
    for (int i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < n_; ++i)
        cur[i] = ((cur[i] - carry * modulus_[i]) % p_ + p_) % p_;
    }
  }
  if (!(cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](int64_t v) { return v == 0; })))
    throw std::runtime_error("generator order check failed");

  neg_.assign(size_t(N_), 0);
  for (int64_t v = 0; v < N_; ++v) {
    int64_t w = 0, t = v;
    for (int i = 0; i < n_; ++i) {
      int64_t d = t % p_;
      t /= p_;
      w += ((p_ - d) % p_) * ipow(p_, i);
    }
    neg_[size_t(v)] = uint32_t(w);
  }
  if (N_ <= 1024) {
    add_.assign(size_t(N_) * size_t(N_), 0);
    for (int64_t a = 0; a < N_; ++a) {
      for (int64_t b = a; b < N_; ++b) {
        int64_t w = 0, ta = a, tb = b;
        for (int i = 0; i < n_; ++i) {
          w += ((ta % p_ + tb % p_) % p_) * ipow(p_, i);
          ta /= p_;
          tb /= p_;
        }
        add_[size_t(a) * size_t(N_) + size_t(b)] = uint32_t(w);
        add_[size_t(b) * size_t(N_) + size_t(a)] = uint32_t(w);
      }
    }
  }

  const int degs[4] = {1, f_, 2 * f_, n_};
  for (int i = 0; i < 4; ++i) {
    LayerInfo li;
    li.degree = degs[i];
    li.order = ipow(p_, degs[i]);
    li.cof = (N_ - 1) / (li.order - 1);
    li.gen = FF{exp_[size_t(li.cof % (N_ - 1))], Layer(i)};
    layers_[size_t(i)] = li;
  }
  // retag generators now that layer data exists
  for (auto& li : layers_) li.gen = tagged(li.gen.idx);

  eps_ = gen(Layer::Q);
  // eps = g^c with c = (N-1)/(q-1); c is even, so the first root is g^{c/2}.
  sqrt_eps_ = tagged(exp_[size_t(layers_[size_t(Layer::Q)].cof / 2)]);
}

Layer FieldTower::smallest_layer(uint32_t idx) const {
  if (idx == 0 || idx == 1) return Layer::Prime;
  int64_t e = log_[idx];
  for (int i = 0; i < 4; ++i)
    if (e % layers_[size_t(i)].cof == 0) return Layer(i);
  return Layer::Ambient;
}

bool FieldTower::in_layer(FF a, Layer l) const { return a.layer <= l; }

bool FieldTower::in_subfield(FF a, int degree) const {
  if (n_ % degree != 0) throw std::invalid_argument("degree does not divide the ambient degree");
  if (a.idx == 0) return true;
  int64_t cof = (N_ - 1) / (ipow(p_, degree) - 1);
  return log_[a.idx] % cof == 0;
}

FF FieldTower::from_int(int64_t a) const {
  int64_t r = ((a % p_) + p_) % p_;
  return FF{uint32_t(r), Layer::Prime};
}

FF FieldTower::from_dlog(Layer l, int64_t e) const {
  const auto& li = layers_[size_t(l)];
  int64_t m = li.order - 1;
  int64_t r = ((e % m) + m) % m;
  return tagged(exp_[size_t((r * li.cof) % (N_ - 1))]);
}

FF FieldTower::from_coeffs(const std::vector<int64_t>& c) const {
  if (int(c.size()) > n_) throw std::invalid_argument("coefficient vector too long");
  int64_t v = 0;
  for (size_t i = c.size(); i-- > 0;) {
    int64_t d = ((c[i] % p_) + p_) % p_;
    v = v * p_ + d;
  }
  return tagged(uint32_t(v));
}

std::vector<int64_t> FieldTower::coeffs(FF a) const {
  std::vector<int64_t> c(n_, 0);
  int64_t t = a.idx;
  for (int i = 0; i < n_; ++i) {
    c[i] = t % p_;
    t /= p_;
  }
  return c;
}

std::optional<int64_t> FieldTower::dlog(FF a) const {
  if (a.idx == 0) return std::nullopt;
  return int64_t(log_[a.idx]);
}

std::optional<int64_t> FieldTower::dlog_in(Layer l, FF a) const {
  if (a.idx == 0) return std::nullopt;
  const auto& li = layers_[size_t(l)];
  int64_t e = log_[a.idx];
  if (e % li.cof != 0) return std::nullopt;
  return e / li.cof;
}

FF FieldTower::add(FF a, FF b) const {
  if (!add_.empty()) return tagged(add_[size_t(a.idx) * size_t(N_) + size_t(b.idx)]);
  int64_t w = 0, ta = a.idx, tb = b.idx, base = 1;
  for (int i = 0; i < n_; ++i) {
    w += ((ta % p_ + tb % p_) % p_) * base;
    base *= p_;
    ta /= p_;
    tb /= p_;
  }
  return tagged(uint32_t(w));
}

FF FieldTower::neg(FF a) const { return tagged(neg_[a.idx]); }

FF FieldTower::sub(FF a, FF b) const { return add(a, neg(b)); }

FF FieldTower::mul(FF a, FF b) const {
  if (a.idx == 0 || b.idx == 0) return zero();
  int64_t e = (int64_t(log_[a.idx]) + int64_t(log_[b.idx])) % (N_ - 1);
  return tagged(exp_[size_t(e)]);
}

FF FieldTower::inv(FF a) const {
  if (a.idx == 0) throw std::domain_error("inverse of zero");
  int64_t e = (N_ - 1 - int64_t(log_[a.idx])) % (N_ - 1);
  return tagged(exp_[size_t(e)]);
}

FF FieldTower::div(FF a, FF b) const { return mul(a, inv(b)); }

FF FieldTower::pow(FF a, int64_t e) const {
  if (a.idx == 0) {
    if (e <= 0) throw std::domain_error("0^e with e <= 0");
    return zero();
  }
  int64_t m = N_ - 1;
  int64_t ee = ((e % m) * (int64_t(log_[a.idx]) % m)) % m;
  ee = ((ee % m) + m) % m;
  return tagged(exp_[size_t(ee)]);
}

FF FieldTower::conj(FF a) const {
  if (!in_layer(a, Layer::Q2)) throw std::domain_error("conj: element not in the F_{q^2} layer");
  if (a.idx == 0) return zero();
  return pow(a, q_);
}

FF FieldTower::norm(FF a) const {
  if (a.idx == 0) throw std::domain_error("norm: zero input");
  if (!in_layer(a, Layer::Q2)) throw std::domain_error("norm: element not in the F_{q^2} layer");
  return mul(a, conj(a));
}

int64_t FieldTower::element_order(FF a) const {
  if (a.idx == 0) throw std::domain_error("order of zero");
  return (N_ - 1) / std::gcd(N_ - 1, int64_t(log_[a.idx]));
}

bool FieldTower::is_square(FF a) const {
  if (a.idx == 0) return true;
  return log_[a.idx] % 2 == 0;
}

FF FieldTower::sqrt_first(FF a) const {
  if (a.idx == 0) return zero();
  if (log_[a.idx] % 2 != 0) throw std::domain_error("sqrt: not a square");
  return tagged(exp_[size_t(log_[a.idx] / 2)]);
}

std::vector<FF> FieldTower::layer_elements(Layer l) const {
  std::vector<FF> out;
  const auto& li = layers_[size_t(l)];
  out.reserve(size_t(li.order));
  out.push_back(zero());
  for (int64_t e = 0; e < li.order - 1; ++e) out.push_back(tagged(exp_[size_t(e * li.cof)]));
  return out;
}

std::vector<FF> FieldTower::layer_units(Layer l) const {
  auto v = layer_elements(l);
  v.erase(v.begin());
  return v;
}

std::vector<FF> FieldTower::subfield_units(int degree) const {
  if (n_ % degree != 0) throw std::invalid_argument("degree does not divide the ambient degree");
  int64_t ord = ipow(p_, degree);
  int64_t cof = (N_ - 1) / (ord - 1);
  std::vector<FF> out;
  out.reserve(size_t(ord - 1));
  for (int64_t e = 0; e < ord - 1; ++e) out.push_back(tagged(exp_[size_t(e * cof)]));
  return out;
}

std::vector<int64_t> FieldTower::layer_min_poly(Layer l) const {
  // minimal polynomial over F_p of the layer generator: prod (X - g^{p^i})
  const int d = layers_[size_t(l)].degree;
  std::vector<FF> poly{one()};
  FF root = gen(l);
  for (int i = 0; i < d; ++i) {
    std::vector<FF> next(poly.size() + 1, zero());
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = add(next[j + 1], poly[j]);
      next[j] = sub(next[j], mul(root, poly[j]));
    }
    poly = std::move(next);
    root = frobenius(root);
  }
  std::vector<int64_t> out;
  out.reserve(poly.size());
  for (FF c : poly) {
    if (!in_layer(c, Layer::Prime)) throw std::runtime_error("minimal polynomial not over F_p");
    out.push_back(int64_t(c.idx));
  }
  return out;
}

std::string FieldTower::format(FF a) const {
  if (a.idx == 0) return "0";
  if (a.layer == Layer::Prime) return std::to_string(a.idx);
  return "g^" + std::to_string(log_[a.idx]);
}

FF FieldTower::parse(const std::string& s) const {
  if (s.rfind("g^", 0) == 0) {
    int64_t e = std::stoll(s.substr(2));
    return from_dlog(Layer::Ambient, e);
  }
  return from_int(std::stoll(s));
}

}  // namespace u11::ffield
