// Times the OpenMP kernels against their serial counterparts and checks
// that both sides produce identical results.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "u11/finituni.hpp"
#include "u11/hecke.hpp"
#include "u11/langlands.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace u11;
using ffield::FieldTower;

namespace {

double time_once(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-44s %10.3fs %10.3fs %8.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-44s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    FieldTower t(3, 2, 1);  // q = 9, the largest enumerable case
    finituni::GroupTable ser, par;
    double ts = time_once([&] {
      for (int i = 0; i < 20; ++i)
        ser = finituni::enumerate_group_serial(t, finituni::Variant::U11);
    });
    double tp = time_once([&] {
      for (int i = 0; i < 20; ++i) par = finituni::enumerate_group(t, finituni::Variant::U11);
    });
    row("enumerate U(1,1) at q = 9 (20 rounds)", ts, tp, ser.elements == par.elements);
  }

  {
    FieldTower t(3, 2, 1);
    auto su = finituni::enumerate_group(t, finituni::Variant::SU);
    hecke::RelationReport ser, par;
    double ts = time_once([&] {
      for (int i = 0; i < 10; ++i) ser = hecke::validate_relations(t, su, {}, false);
    });
    double tp = time_once([&] {
      for (int i = 0; i < 10; ++i) par = hecke::validate_relations(t, su, {}, true);
    });
    row("relation validation at q = 9 (10 rounds)", ts, tp,
        ser.ok == par.ok && ser.failures == par.failures);
  }

  {
    FieldTower t(5, 1, 2);  // lambda over F_25
    langlands::SweepResult ser, par;
    double ts = time_once([&] {
      for (int i = 0; i < 10; ++i) ser = langlands::sweep_oracle_agreement(t, 2, false);
    });
    double tp = time_once([&] {
      for (int i = 0; i < 10; ++i) par = langlands::sweep_oracle_agreement(t, 2, true);
    });
    row("oracle sweep at p = 5 over F_25 (10 rounds)", ts, tp,
        ser.pairs == par.pairs && ser.disagreements == par.disagreements);
  }

  return 0;
}
