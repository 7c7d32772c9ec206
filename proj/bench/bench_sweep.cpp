// Serial reference kernel vs the OpenMP kernel on full identity sweeps.
// Both must produce the same report; the benchmark aborts otherwise.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <iostream>

#include "blancmange/verify.hpp"

using namespace blancmange;

namespace {

struct Workload {
  IdentityId id;
  std::uint64_t lo;
  std::uint64_t hi;
};

constexpr Workload kWorkloads[] = {
    {IdentityId::DeltaRecursiveVsClosed, 1, 1u << 18},
    {IdentityId::DeltaVsTreeOracle, 1, 1u << 11},
    {IdentityId::TakagiFiveWay, 1, 14},
    {IdentityId::S1ThreeForms, 1, 1u << 18},
};

void run(benchmark::State& state, Execution execution) {
  const Workload& w = kWorkloads[state.range(0)];
  const IdentityReport reference = verify_range(w.id, w.lo, w.hi, Execution::Serial);
  for (auto _ : state) {
    const IdentityReport report = verify_range(w.id, w.lo, w.hi, execution);
    if (report.checked != reference.checked || report.passed != reference.passed) {
      std::cerr << "kernels disagree: " << format_report(report) << " vs " << format_report(reference) << '\n';
      std::abort();
    }
    benchmark::DoNotOptimize(report.checked);
  }
  state.SetLabel(std::string(identity_info(w.id).name));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * reference.checked));
}

void BM_Serial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, std::size(kWorkloads) - 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, std::size(kWorkloads) - 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
