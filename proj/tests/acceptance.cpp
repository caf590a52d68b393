// End-to-end acceptance runner: each numbered check prints one pass/fail
// line together with its measured runtime and enforced budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "u11/chars.hpp"
#include "u11/finituni.hpp"
#include "u11/hecke.hpp"
#include "u11/langlands.hpp"
#include "u11/reps.hpp"

using namespace u11;
using ffield::FF;
using ffield::FieldTower;

namespace {

struct Harness {
  int failures = 0;

  void run(int number, const std::string& what, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= budget_seconds) {
      ok = false;
      detail += detail.empty() ? "" : "; ";
      detail += "over the time budget";
    }
    std::printf("[%s] %d. %s (%.3fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                what.c_str(), secs, budget_seconds, detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
  }
};

bool expect(std::string& detail, bool cond, const std::string& msg) {
  if (!cond) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  return cond;
}

}  // namespace

int main() {
  Harness h;

  h.run(1, "group orders at q = 3", 1.0, [](std::string& d) {
    FieldTower t(3, 1, 1);
    bool ok = true;
    ok &= expect(d, finituni::enumerate_group(t, finituni::Variant::U11).size() == 96,
                 "|U(1,1)| != 96");
    ok &= expect(d, finituni::enumerate_group(t, finituni::Variant::SU).size() == 24,
                 "|SU(1,1)| != 24");
    ok &= expect(d, finituni::enumerate_group(t, finituni::Variant::U1).size() == 4,
                 "|U(1)| != 4");
    auto u11t = finituni::enumerate_group(t, finituni::Variant::U11);
    ok &= expect(d, finituni::det_norm_index(u11t) == 4, "det index != 4");
    return ok;
  });

  h.run(2, "idempotent laws and module relations at q in {3,5}, with mutation", 10.0,
        [](std::string& d) {
          bool ok = true;
          for (int64_t p : {3, 5}) {
            FieldTower t(p, 1, 1);
            auto su = finituni::enumerate_group(t, finituni::Variant::SU);
            auto rep = hecke::validate_relations(t, su);
            ok &= expect(d, rep.ok, "relations failed at q = " + std::to_string(p));
            auto mutated = hecke::supersingular_table(t);
            mutated[0].a_s_prime = 1;  // single-scalar perturbation of the first row
            auto bad = hecke::validate_relations(t, su, mutated);
            ok &= expect(d, !bad.ok, "mutated table was not rejected at q = " + std::to_string(p));
          }
          return ok;
        });

  h.run(3, "classification and packet counts at p in {3,5,7}", 1.0, [](std::string& d) {
    bool ok = true;
    for (int64_t p : {3, 5, 7}) {
      FieldTower t(p, 1, 1);
      auto labels = reps::classify(t, 1);
      int64_t nchar = 0, nst = 0, nsc = 0;
      for (const auto& x : labels) {
        nchar += x.kind == reps::IrrepLabel::Kind::Character;
        nst += x.kind == reps::IrrepLabel::Kind::Steinberg;
        nsc += x.kind == reps::IrrepLabel::Kind::Supercuspidal;
      }
      ok &= expect(d, nchar == p + 1, "character count");
      ok &= expect(d, nst == p + 1, "steinberg count");
      ok &= expect(d, nsc == p * (p + 1), "supercuspidal count");
      std::set<std::vector<std::pair<int64_t, int64_t>>> packets;
      for (int64_t k = 0; k <= p; ++k)
        for (int64_t r = 0; r <= p - 1; ++r) {
          auto pkt = reps::packet_of(t, reps::supercuspidal(t, k, r));
          ok &= expect(d, pkt.size() == 2, "packet size");
          for (const auto& x : pkt)
            ok &= expect(d, reps::packet_of(t, x) == pkt, "packets are not involutive");
          std::vector<std::pair<int64_t, int64_t>> key;
          for (const auto& x : pkt) key.emplace_back(x.k, x.r);
          packets.insert(key);
        }
      ok &= expect(d, int64_t(packets.size()) == p * (p + 1) / 2, "packet count");
    }
    return ok;
  });

  h.run(4, "parameter classes biject with supercuspidal packets, twist-equivariantly", 5.0,
        [](std::string& d) {
          bool ok = true;
          for (int64_t p : {3, 5, 7}) {
            FieldTower t(p, 1, 1);
            std::set<std::pair<int64_t, int64_t>> classes;
            std::set<std::vector<std::pair<int64_t, int64_t>>> images, packets;
            for (int64_t k = 0; k <= p; ++k)
              for (int64_t r = 0; r <= p - 1; ++r) {
                auto pkt = reps::packet_of(t, reps::supercuspidal(t, k, r));
                std::vector<std::pair<int64_t, int64_t>> key;
                for (const auto& x : pkt) key.emplace_back(x.k, x.r);
                packets.insert(key);
              }
            for (int64_t k = 0; k <= p; ++k)
              for (int64_t l = 0; l <= p; ++l) {
                if (k == l) continue;
                classes.insert({std::min(k, l), std::max(k, l)});
                auto pkt = langlands::correspond(t, langlands::endo_param(t, k, l));
                std::vector<std::pair<int64_t, int64_t>> key;
                for (const auto& x : pkt) key.emplace_back(x.k, x.r);
                images.insert(key);
                for (int64_t j = 0; j <= p; ++j) {
                  auto lhs = langlands::correspond(
                      t, langlands::twist_param(t, langlands::endo_param(t, k, l), j));
                  auto rhs = reps::packet_det_twist(t, pkt, j);
                  ok &= expect(d, lhs == rhs, "twist equivariance");
                }
              }
            ok &= expect(d, int64_t(classes.size()) == p * (p + 1) / 2, "class count");
            ok &= expect(d, images == packets, "not a bijection onto the packets");
          }
          return ok;
        });

  h.run(5, "oracle agrees with the closed form at p in {3,5}, lambda over F_{p^2}", 60.0,
        [](std::string& d) {
          bool ok = true;
          for (int64_t p : {3, 5}) {
            FieldTower t(p, 1, 2);
            auto res = langlands::sweep_oracle_agreement(t, 2);
            ok &= expect(d,
                         res.disagreements == 0,
                         "disagreements at p = " + std::to_string(p) + " (" +
                             res.first_disagreement + ")");
          }
          return ok;
        });

  h.run(6, "restriction of induced parameters is always a pair of characters", 5.0,
        [](std::string& d) {
          bool ok = true;
          for (int64_t p : {3, 5}) {
            FieldTower t(p, 1, 2);
            for (int64_t m = 0; m < p * p - 1 && ok; ++m)
              for (FF lambda : t.subfield_units(2)) {
                auto cs = langlands::induce_restrict(t, m, lambda);
                ok &= expect(d, cs.size() == 2, "not two characters");
                ok &= expect(d, cs[0].n == 2 && cs[1].n == 2, "wrong group");
                ok &= expect(d, cs[1].r == (m * p) % (p * p - 1) || cs[0].r == (m * p) % (p * p - 1),
                             "twist component missing");
                if (!ok) break;
              }
          }
          return ok;
        });

  h.run(7, "unipotent invariants of the symmetric powers", 1.0, [](std::string& d) {
    bool ok = true;
    for (int64_t p : {3, 5}) {
      FieldTower t(p, 1, 1);
      for (int64_t r = 0; r <= p - 1; ++r) {
        auto ws = finituni::sym_weight_invariants(t, r);
        ok &= expect(d, ws.dimension == 1, "dimension != 1");
        ok &= expect(d, ws.basis.size() == 1 && ws.basis[0][0] == 1, "basis is not x^r");
        for (size_t i = 1; i < ws.basis[0].size(); ++i)
          ok &= expect(d, ws.basis[0][i] == 0, "basis is not x^r");
      }
    }
    return ok;
  });

  h.run(8, "c-group layer at p = 3", 5.0, [](std::string& d) {
    bool ok = true;
    const int64_t p = 3;
    FieldTower t(p, 1, 2);
    for (int64_t k = 0; k <= p; ++k)
      for (int64_t l = 0; l <= p; ++l) {
        auto dv = langlands::c_d(t, langlands::c_endo(t, k, l));
        ok &= expect(d, dv.lambda == t.one() && dv.r == p + 1, "d map off the cyclotomic value");
      }
    for (int64_t r = 0; r < p * p - 1; ++r)
      for (FF lambda : t.subfield_units(2)) {
        auto dv = langlands::c_d(t, langlands::c_torus(t, r, lambda));
        ok &= expect(d, dv.lambda == t.one() && dv.r == p + 1, "d map off the cyclotomic value");
      }
    auto l = langlands::count_l_classes(t, 2);
    auto c = langlands::count_c_classes(t, 2);
    ok &= expect(d, l.regular_endo == c.regular_endo, "regular class counts differ");
    ok &= expect(d, l.torus == c.torus, "torus class counts differ");
    return ok;
  });

  h.run(9, "cross-module coherence of the correspondence and the transfer", 5.0,
        [](std::string& d) {
          bool ok = true;
          for (int64_t p : {3, 5, 7}) {
            FieldTower t(p, 1, 1);
            for (int64_t k = 0; k <= p; ++k)
              for (int64_t l = 0; l <= p; ++l) {
                if (k == l) continue;
                auto pkt = langlands::correspond(t, langlands::endo_param(t, k, l));
                auto want = reps::packet_of(
                    t, reps::supercuspidal(t, l, chars::bracket(k - l - 1, p)));
                ok &= expect(d, pkt == want, "correspond differs from the packet map");
                auto tr = langlands::transfer(t, k, l);
                auto via = langlands::correspond(t, langlands::xi_embed(t, langlands::j_param(t, k, l)));
                ok &= expect(d, tr == via, "transfer differs from correspond after embedding");
              }
          }
          return ok;
        });

  std::printf("%d criteria failed\n", h.failures);
  return h.failures == 0 ? 0 : 1;
}
