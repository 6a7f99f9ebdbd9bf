#include <benchmark/benchmark.h>

#include "dap/construct.hpp"
#include "dap/ratio.hpp"
#include "dap/sampler.hpp"

using namespace dap;

namespace {

FieldSpec spec_for(int index) {
    switch (index) {
        case 0: return FieldSpec::rationals();
        case 1: return FieldSpec::prime(5);
        case 2: return FieldSpec::extension(2, 2);
        default: return FieldSpec::quaternions();
    }
}

const char* spec_name(int index) {
    switch (index) {
        case 0: return "Q";
        case 1: return "F:5";
        case 2: return "F:2^2";
        default: return "HQ";
    }
}

void BM_ScalarMul(benchmark::State& state) {
    FieldSpec spec = spec_for(static_cast<int>(state.range(0)));
    Sampler sampler(spec, 1);
    Scalar a = sampler.nonzero();
    Scalar b = sampler.nonzero();
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.SetLabel(spec_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScalarMul)->DenseRange(0, 3);

void BM_ScalarInv(benchmark::State& state) {
    FieldSpec spec = spec_for(static_cast<int>(state.range(0)));
    Sampler sampler(spec, 2);
    Scalar a = sampler.nonzero();
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inv());
    }
    state.SetLabel(spec_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScalarInv)->DenseRange(0, 3);

void BM_GeoMul(benchmark::State& state) {
    FieldSpec spec = spec_for(static_cast<int>(state.range(0)));
    Sampler sampler(spec, 3);
    Scalar a = sampler.nonzero();
    Scalar b = sampler.nonzero();
    Point aux = sampler.off_base_point();
    for (auto _ : state) {
        benchmark::DoNotOptimize(geo_mul(a, b, aux).value);
    }
    state.SetLabel(spec_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeoMul)->DenseRange(0, 3);

void BM_Ratio3(benchmark::State& state) {
    FieldSpec spec = spec_for(static_cast<int>(state.range(0)));
    Sampler sampler(spec, 4);
    Scalar a = sampler.scalar();
    Scalar b = sampler.nonzero();
    Scalar c = sampler.distinct_from(b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ratio3(a, b, c));
    }
    state.SetLabel(spec_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Ratio3)->DenseRange(0, 3);

void BM_DesarguesCheck(benchmark::State& state) {
    FieldSpec spec = spec_for(static_cast<int>(state.range(0)));
    auto pt = [&](long long x, long long y) {
        return Point{Scalar::integer(spec, x), Scalar::integer(spec, y)};
    };
    TriangleConfig config{pt(1, 0), pt(0, 1), pt(1, 1), pt(2, 0), pt(0, 2), pt(2, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_desargues(config));
    }
    state.SetLabel(spec_name(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DesarguesCheck)->DenseRange(0, 1);

void BM_TraceJson(benchmark::State& state) {
    FieldSpec spec = FieldSpec::rationals();
    Sampler sampler(spec, 5);
    GeoResult geo = geo_mul(sampler.nonzero(), sampler.nonzero(), sampler.off_base_point());
    for (auto _ : state) {
        benchmark::DoNotOptimize(Trace::from_json(geo.trace.to_json()));
    }
}
BENCHMARK(BM_TraceJson);

} // namespace

BENCHMARK_MAIN();
