#include <benchmark/benchmark.h>

#include "realspin/oracle.hpp"
#include "realspin/signs.hpp"
#include "realspin/spin.hpp"

using namespace realspin;

namespace {

// Maximal curve of genus g: k = g + 1, separating.
RealCurve m_curve(int g) { return RealCurve::make(g, g + 1, true); }

void BM_EnumerateAllForms(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const RealCurve c = RealCurve::make(g, 1, false);
  for (auto _ : state) {
    std::size_t real = 0;
    for (const auto& q : oracle::enumerate_all_quadratic_forms(g)) real += is_real_spin(c, q) ? 1 : 0;
    benchmark::DoNotOptimize(real);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * g)));
}
BENCHMARK(BM_EnumerateAllForms)->DenseRange(1, 6);

void BM_QuadraticTable(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const QuadraticForm q(F2Vector::ones(static_cast<std::size_t>(2 * g)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::quadratic_table(g, q));
}
BENCHMARK(BM_QuadraticTable)->DenseRange(2, 6, 2);

void BM_FindRealSpin(benchmark::State& state) {
  const RealCurve c = m_curve(static_cast<int>(state.range(0)));
  const RealW1 w = canonical_w(c);
  for (auto _ : state) benchmark::DoNotOptimize(find_real_spin(c, w));
}
BENCHMARK(BM_FindRealSpin)->Arg(2)->Arg(6)->Arg(16)->Arg(40);

void BM_ArfDelta(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const RealCurve c = RealCurve::make(g, 1, false);
  const AutClass f(c.topology(), true, std::vector<long long>(static_cast<std::size_t>(g), 1));
  const RealW1 w = canonical_w(c);
  for (auto _ : state) benchmark::DoNotOptimize(arf_delta(c, f, w));
}
BENCHMARK(BM_ArfDelta)->Arg(2)->Arg(6)->Arg(16)->Arg(40);

void BM_DetSign(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const RealCurve c = m_curve(g);
  const RealBundle b = RealBundle::make(c, 3, g + 1, RealW1(F2Vector::ones(static_cast<std::size_t>(g + 1))));
  FullAutClass f{AutClass(c.topology(), true, std::vector<long long>(static_cast<std::size_t>(g), 3)),
                 SLClass::trivial(b)};
  for (auto _ : state) benchmark::DoNotOptimize(det_orientation_sign(c, b, f));
}
BENCHMARK(BM_DetSign)->Arg(2)->Arg(6)->Arg(16)->Arg(40);

void BM_VerifySuite(benchmark::State& state) {
  const RealCurve c = RealCurve::make(static_cast<int>(state.range(0)), 1, false);
  oracle::SuiteOptions o;
  o.symplectic_trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_curve_suite(c, 1, o));
}
BENCHMARK(BM_VerifySuite)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
