#include "rwg/descriptor.hpp"
#include "rwg/lattice.hpp"
#include "rwg/oracle.hpp"
#include "rwg/realweyl.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_BuildRootSystem(benchmark::State& state, const char* label) {
  rwg::CartanType type = rwg::CartanType::parse(label);
  for (auto _ : state) {
    rwg::RootSystem rs = rwg::RootSystem::build(type);
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK_CAPTURE(BM_BuildRootSystem, e8, "E8");
BENCHMARK_CAPTURE(BM_BuildRootSystem, b8, "B8");

void BM_SchreierSimsOrder(benchmark::State& state, const char* label) {
  rwg::RootSystem rs = rwg::RootSystem::build(rwg::CartanType::parse(label));
  std::vector<rwg::Perm> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> e(rs.rank(), 0);
    e[i] = 1;
    gens.push_back(rs.reflection_perm(rs.index_of(e)));
  }
  for (auto _ : state) {
    rwg::PermGroup g = rwg::PermGroup::generate(rs.size(), gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK_CAPTURE(BM_SchreierSimsOrder, e8, "E8");
BENCHMARK_CAPTURE(BM_SchreierSimsOrder, f4, "F4");

void BM_AnalyzeCatalog(benchmark::State& state, const char* id) {
  rwg::Descriptor d = rwg::catalog_entry(id);
  for (auto _ : state) {
    rwg::RealWeylDecomposition dec = rwg::compute(rwg::realize(d), d.lattice);
    benchmark::DoNotOptimize(dec.total_order);
  }
}
BENCHMARK_CAPTURE(BM_AnalyzeCatalog, compact_e8, "compact:E8");
BENCHMARK_CAPTURE(BM_AnalyzeCatalog, painted_b8, "painted:B8:4");
BENCHMARK_CAPTURE(BM_AnalyzeCatalog, g2_intermediate, "g2:intermediate");

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  rwg::IntMat m(8, std::vector<rwg::Int>(8));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  for (auto _ : state) {
    rwg::SnfResult r = rwg::smith_normal_form(m);
    benchmark::DoNotOptimize(r.s[7][7]);
  }
}
BENCHMARK(BM_SmithNormalForm);

void BM_DefinitionalChecks(benchmark::State& state) {
  auto rs = std::make_shared<const rwg::RootSystem>(
      rwg::RootSystem::build(rwg::CartanType::parse("B3")));
  rwg::OracleBudget budget;
  std::mt19937_64 rng(11);
  rwg::InvolutionDatum datum = rwg::fuzz_datum(rs, rng, budget);
  for (auto _ : state) {
    rwg::Verdict v = rwg::check_definitional(datum, budget);
    benchmark::DoNotOptimize(v.all_pass());
  }
}
BENCHMARK(BM_DefinitionalChecks);

}  // namespace

BENCHMARK_MAIN();
