// Timing harness for the parallel kernels against their serial references.
// Not part of the test suite; build and run `powclo_bench` directly.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "powclo/algebra.hpp"
#include "powclo/closure.hpp"
#include "powclo/conditions.hpp"
#include "powclo/congruence.hpp"
#include "powclo/fixtures.hpp"
#include "powclo/varieties.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace powclo;

double seconds(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

template <typename F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return seconds(start);
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "match" : "MISMATCH");
}

// An 8-element meet semilattice (three-bit cube under bitwise and): large
// enough that the 8^8 endomorphism scan is worth timing.
FiniteAlgebra cube8() {
  FiniteAlgebra a;
  a.name = "cube8";
  a.size = 8;
  a.sig.ops = {{"m", 2}};
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x * 8 + y] = x & y;
  a.tables = {std::move(t)};
  a.validate();
  return a;
}

// A 10-element semilattice for the partition scan (Bell(10) = 115975).
FiniteAlgebra chain10() {
  FiniteAlgebra a;
  a.name = "chain10";
  a.size = 10;
  a.sig.ops = {{"m", 2}};
  std::vector<int> t(100);
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) t[x * 10 + y] = x < y ? x : y;
  a.tables = {std::move(t)};
  a.validate();
  return a;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the same serial code\n\n");
#endif
  std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  Caps caps;
  caps.endo = 8;
  caps.bell_scan = 10;

  {
    FiniteAlgebra alg = cube8();
    std::vector<std::vector<int>> serial_out, parallel_out;
    double ts = timed([&] { serial_out = enumerate_endomorphisms_serial(alg, caps); });
    double tp = timed([&] { parallel_out = enumerate_endomorphisms(alg, caps); });
    row("endomorphism scan (8^8 maps)", ts, tp, serial_out == parallel_out);
  }

  {
    FiniteAlgebra alg = chain10();
    std::vector<Partition> serial_out, parallel_out;
    double ts = timed([&] { serial_out = congruences_by_partition_scan_serial(alg, caps); });
    double tp = timed([&] { parallel_out = congruences_by_partition_scan(alg, caps); });
    row("partition scan (Bell(10))", ts, tp, serial_out == parallel_out);
  }

  {
    // Closure table over a 14-element base: 2^14 subsets with full submask
    // scans (the popcount kernel relates nothing, so nothing short-circuits).
    const int n = 14;
    std::vector<int> labels(static_cast<size_t>(full_set(n)));
    for (size_t i = 0; i < labels.size(); ++i)
      labels[i] = subset_size(static_cast<SubsetCode>(i) + 1);
    Partition theta{std::move(labels)};
    std::vector<SubsetCode> ts_out, tp_out;
    double ts = timed([&] { ts_out = closure_table_from_relation(n, theta, false); });
    double tp = timed([&] { tp_out = closure_table_from_relation(n, theta, true); });
    row("closure table (3^14 submask scans)", ts, tp, ts_out == tp_out);
  }

  {
    FreePresentation fsl = free_semilattice(3, caps);
    Caps wide = caps;
    wide.power_base = 7;
    PowerAlgebra pa = build_extended_power(fsl.algebra, wide);
    ClosureOperator c = kuril_polak(3, 2, caps);
    FlagResult rs, rp;
    double ts = timed([&] { rs = term_stability_check_serial(pa, c, fsl, 2, wide); });
    double tp = timed([&] { rp = term_stability_check(pa, c, fsl, 2, wide); });
    row("term stability (127^3 sweeps)", ts, tp,
        rs.status == rp.status && rs.witness == rp.witness);
  }

  return 0;
}
