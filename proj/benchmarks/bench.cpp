#include <benchmark/benchmark.h>

#include "bfh/contact.hpp"
#include "bfh/curves.hpp"
#include "bfh/farey.hpp"
#include "bfh/models.hpp"
#include "bfh/pairing.hpp"

namespace {

bfh::TypeA knot_A(const char* key, int f) { return bfh::expand_graph(bfh::dual(bfh::knot_model(key, f).d)); }

void BM_BoxKnotWithLine(benchmark::State& state) {
    const int f = static_cast<int>(state.range(0));
    bfh::TypeA k = knot_A("t34", f);
    bfh::TypeD line = bfh::typeD_line(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(bfh::box_AD(k, line));
}
BENCHMARK(BM_BoxKnotWithLine)->Arg(-8)->Arg(0)->Arg(8);

void BM_HomologyRank(benchmark::State& state) {
    bfh::ChainComplex c = bfh::box_AD(knot_A("t34", static_cast<int>(state.range(0))), bfh::typeD_line(2, 5));
    for (auto _ : state) benchmark::DoNotOptimize(bfh::homology_rank(c));
    state.counters["generators"] = static_cast<double>(c.size());
}
BENCHMARK(BM_HomologyRank)->Arg(-8)->Arg(8);

void BM_MinIntersections(benchmark::State& state) {
    bfh::Curve k = bfh::curve_from_typeD(bfh::knot_model("t34", 4).d);
    bfh::Curve line = bfh::curve_from_typeD(bfh::typeD_line(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(bfh::min_intersections(k, line));
}
BENCHMARK(BM_MinIntersections)->Arg(1)->Arg(7)->Arg(15);

void BM_SolidTorusReduction(benchmark::State& state) {
    bfh::SolidTorusModel s = bfh::solid_torus(static_cast<int>(state.range(0)), bfh::Param::c);
    bfh::DDBimodule az = bfh::azdd();
    for (auto _ : state) benchmark::DoNotOptimize(bfh::reduce_typeD(bfh::box_A_DD(s.module, az)));
}
BENCHMARK(BM_SolidTorusReduction)->RangeMultiplier(2)->Range(2, 16);

void BM_EnumerateTight(benchmark::State& state) {
    bfh::Slope s{1, -static_cast<long>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(bfh::enumerate_tight_classes(s));
}
BENCHMARK(BM_EnumerateTight)->DenseRange(2, 8, 3);

void BM_SurgeryAlgebra(benchmark::State& state) {
    bfh::LegendrianData ld = bfh::legendrian_table().at("t34m");
    const int rot = ld.tb_max - (2 * ld.tau - 1);
    for (auto _ : state) benchmark::DoNotOptimize(bfh::surgery_verdict_algebra("t34m", ld.tb_max, rot, 3));
}
BENCHMARK(BM_SurgeryAlgebra);

}  // namespace

BENCHMARK_MAIN();
