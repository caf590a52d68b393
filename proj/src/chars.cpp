#include "u11/chars.hpp"

#include <stdexcept>

namespace u11::chars {

namespace {
int64_t reduce(int64_t v, int64_t m) { return ((v % m) + m) % m; }
}

int64_t tame_modulus(const FieldTower& t, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("character degree n must be 1 or 2");
  return n == 1 ? t.p() - 1 : t.p() * t.p() - 1;
}

MultChar make_mult_char(const FieldTower& t, int n, FF lambda, int64_t r) {
  if (t.is_zero(lambda)) throw std::invalid_argument("unramified part must be a unit");
  return MultChar{n, lambda, reduce(r, tame_modulus(t, n))};
}

MultChar char_mul(const FieldTower& t, const MultChar& a, const MultChar& b) {
  if (a.n != b.n) throw std::invalid_argument("char_mul: characters of different groups");
  return make_mult_char(t, a.n, t.mul(a.lambda, b.lambda), a.r + b.r);
}

MultChar frobenius_twist(const FieldTower& t, const MultChar& a) {
  return make_mult_char(t, a.n, a.lambda, a.r * t.p());
}

MultChar restrict_E_to_F(const FieldTower& t, const MultChar& a) {
  if (a.n != 2) throw std::invalid_argument("restrict_E_to_F: expected a character of E^x");
  return make_mult_char(t, 1, a.lambda, a.r);
}

ExtendResult extends_to_G(const FieldTower& t, const MultChar& a) {
  if (a.n != 2) throw std::invalid_argument("extends_to_G: expected a character of E^x");
  const int64_t p = t.p();
  if (a.lambda != t.one() || a.r % (p - 1) != 0) return ExtendResult{false, {}};
  return ExtendResult{true, U1Char{(a.r / (p - 1)) % (p + 1)}};
}

bool bracket_defined(int64_t m, int64_t p) { return reduce(m, p + 1) != p; }

int64_t bracket(int64_t m, int64_t p) {
  int64_t v = reduce(m, p + 1);
  if (v == p) throw std::domain_error("bracket: residue p is excluded");
  return v;
}

}  // namespace u11::chars
