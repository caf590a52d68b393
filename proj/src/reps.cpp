#include "u11/reps.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace u11::reps {

namespace {
int64_t reduce(int64_t v, int64_t m) { return ((v % m) + m) % m; }
}

bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
  return x.kind == y.kind && x.k == y.k && x.r == y.r && x.lambda == y.lambda;
}
bool operator!=(const IrrepLabel& x, const IrrepLabel& y) { return !(x == y); }

IrrepLabel character(const FieldTower& t, int64_t k) {
  return IrrepLabel{IrrepLabel::Kind::Character, reduce(k, t.p() + 1), 0, t.zero()};
}

IrrepLabel steinberg(const FieldTower& t, int64_t k) {
  return IrrepLabel{IrrepLabel::Kind::Steinberg, reduce(k, t.p() + 1), 0, t.zero()};
}

IrrepLabel principal_series(const FieldTower& t, int64_t r, FF lambda) {
  const int64_t p = t.p();
  if (t.is_zero(lambda)) throw std::invalid_argument("principal_series: lambda must be a unit");
  r = reduce(r, p * p - 1);
  if (lambda == t.one() && r % (p - 1) == 0)
    throw std::invalid_argument("principal_series: reducible induction excluded");
  return IrrepLabel{IrrepLabel::Kind::PrincipalSeries, 0, r, lambda};
}

IrrepLabel supercuspidal(const FieldTower& t, int64_t k, int64_t r) {
  const int64_t p = t.p();
  if (r < 0 || r > p - 1) throw std::invalid_argument("supercuspidal: r out of range");
  return IrrepLabel{IrrepLabel::Kind::Supercuspidal, reduce(k, p + 1), r, t.zero()};
}

bool packet_less(const FieldTower& t, const IrrepLabel& x, const IrrepLabel& y) {
  auto key = [&](const IrrepLabel& l) {
    return std::tuple<int, int64_t, int64_t, uint64_t>(int(l.kind), l.k, l.r, t.entry_key(l.lambda));
  };
  return key(x) < key(y);
}

LPacket sorted_packet(const FieldTower& t, LPacket labels) {
  std::sort(labels.begin(), labels.end(),
            [&](const IrrepLabel& x, const IrrepLabel& y) { return packet_less(t, x, y); });
  return labels;
}

bool operator==(const SLLabel& x, const SLLabel& y) {
  return x.kind == y.kind && x.r == y.r && x.lambda == y.lambda;
}

std::vector<IrrepLabel> classify(const FieldTower& t, int lambda_degree) {
  const int64_t p = t.p();
  std::vector<IrrepLabel> out;
  for (int64_t k = 0; k <= p; ++k) out.push_back(character(t, k));
  for (int64_t k = 0; k <= p; ++k) out.push_back(steinberg(t, k));
  for (FF lambda : t.subfield_units(lambda_degree))
    for (int64_t r = 0; r < p * p - 1; ++r) {
      if (lambda == t.one() && r % (p - 1) == 0) continue;
      out.push_back(principal_series(t, r, lambda));
    }
  for (int64_t k = 0; k <= p; ++k)
    for (int64_t r = 0; r <= p - 1; ++r) out.push_back(supercuspidal(t, k, r));
  return sorted_packet(t, std::move(out));
}

SLLabel restrict_to_su(const FieldTower& t, const IrrepLabel& x) {
  switch (x.kind) {
    case IrrepLabel::Kind::Character:
      return SLLabel{SLLabel::Kind::Trivial, 0, t.zero()};
    case IrrepLabel::Kind::Steinberg:
      return SLLabel{SLLabel::Kind::Steinberg, 0, t.zero()};
    case IrrepLabel::Kind::PrincipalSeries:
      return SLLabel{SLLabel::Kind::PrincipalSeries, x.r % (t.p() - 1), x.lambda};
    case IrrepLabel::Kind::Supercuspidal:
      return SLLabel{SLLabel::Kind::Cusp, x.r, t.zero()};
  }
  throw std::logic_error("unreachable");
}

IrrepLabel det_twist(const FieldTower& t, const IrrepLabel& x, int64_t j) {
  const int64_t p = t.p();
  switch (x.kind) {
    case IrrepLabel::Kind::Character:
      return character(t, x.k + j);
    case IrrepLabel::Kind::Steinberg:
      return steinberg(t, x.k + j);
    case IrrepLabel::Kind::Supercuspidal:
      return supercuspidal(t, x.k + j, x.r);
    case IrrepLabel::Kind::PrincipalSeries:
      // restriction of the determinant character to the torus has tame
      // exponent (1-p) j
      return principal_series(t, x.r + (1 - p) * j, x.lambda);
  }
  throw std::logic_error("unreachable");
}

LPacket packet_det_twist(const FieldTower& t, const LPacket& pkt, int64_t j) {
  LPacket out;
  out.reserve(pkt.size());
  for (const IrrepLabel& x : pkt) out.push_back(det_twist(t, x, j));
  return sorted_packet(t, std::move(out));
}

LPacket packet_of(const FieldTower& t, const IrrepLabel& x) {
  if (x.kind != IrrepLabel::Kind::Supercuspidal) return LPacket{x};
  const int64_t p = t.p();
  return sorted_packet(t, LPacket{x, supercuspidal(t, x.k + x.r + 1, p - 1 - x.r)});
}

LPacket pi_ss(const FieldTower& t, int64_t r, FF lambda) {
  const int64_t p = t.p();
  if (r < 0 || r > p - 1) throw std::invalid_argument("pi_ss: r out of range");
  if (t.is_zero(lambda)) throw std::invalid_argument("pi_ss: lambda must be a unit");
  if (lambda == t.one() && r == 0)
    return sorted_packet(t, LPacket{character(t, 0), steinberg(t, 0)});
  if (lambda == t.one() && r == p - 1)
    return sorted_packet(t, LPacket{character(t, p), steinberg(t, p)});
  return LPacket{principal_series(t, -p * r, t.inv(lambda))};
}

// ---- general-linear bookkeeping ----------------------------------------

bool operator==(const UnramTameChar& x, const UnramTameChar& y) {
  return x.nu == y.nu && x.a == y.a;
}
bool operator==(const GL2Label& x, const GL2Label& y) { return x.r == y.r && x.chi == y.chi; }

namespace {

UnramTameChar reduce_char(const FieldTower& t, UnramTameChar chi) {
  if (t.is_zero(chi.nu)) throw std::invalid_argument("character: unramified part must be a unit");
  chi.a = reduce(chi.a, t.p() - 1);
  return chi;
}

}  // namespace

std::vector<GL2Label> gl2_orbit(const FieldTower& t, int64_t r, UnramTameChar chi) {
  const int64_t p = t.p();
  if (r < 0 || r > p - 1) throw std::invalid_argument("gl2_orbit: r out of range");
  chi = reduce_char(t, chi);
  FF minus_one = t.neg(t.one());
  std::vector<GL2Label> orbit{GL2Label{r, chi}};
  // close under the three identifications: unramified quadratic twist and
  // the weight flip r -> p-1-r with a tame shift by r
  auto push = [&](GL2Label g) {
    if (std::find(orbit.begin(), orbit.end(), g) == orbit.end()) orbit.push_back(g);
  };
  for (size_t i = 0; i < orbit.size(); ++i) {
    GL2Label g = orbit[i];
    push(GL2Label{g.r, reduce_char(t, UnramTameChar{t.mul(g.chi.nu, minus_one), g.chi.a})});
    push(GL2Label{p - 1 - g.r, reduce_char(t, UnramTameChar{g.chi.nu, g.chi.a + g.r})});
    push(GL2Label{p - 1 - g.r,
                  reduce_char(t, UnramTameChar{t.mul(g.chi.nu, minus_one), g.chi.a + g.r})});
  }
  return orbit;
}

GL2Label gl2_normalize(const FieldTower& t, int64_t r, UnramTameChar chi) {
  auto orbit = gl2_orbit(t, r, chi);
  auto key = [&](const GL2Label& g) {
    return std::tuple<int64_t, uint64_t, int64_t>(g.r, t.entry_key(g.chi.nu), g.chi.a);
  };
  return *std::min_element(orbit.begin(), orbit.end(),
                           [&](const GL2Label& x, const GL2Label& y) { return key(x) < key(y); });
}

}  // namespace u11::reps
