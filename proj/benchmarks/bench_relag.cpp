#include "relag/checkers.hpp"
#include "relag/formats.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace relag;

namespace {

std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(RELAG_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Algebra load_algebra(const std::string& name) { return build_algebra(parse_algebra_file(read_fixture(name))); }

void BM_build_algebra(benchmark::State& state)
{
    auto p = parse_algebra_file(read_fixture("s24.alg"));
    for (auto _ : state) benchmark::DoNotOptimize(build_algebra(p).dim());
}
BENCHMARK(BM_build_algebra);

void BM_rank_gf2(benchmark::State& state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    Matrix m(Field::prime(2), n, n);
    std::uint64_t x = 88172645463325252ull;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            m.set_int(r, c, static_cast<std::int64_t>(x & 1));
        }
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_gf2)->Arg(32)->Arg(128);

void BM_hom_dim(benchmark::State& state)
{
    auto a = load_algebra("s24.alg");
    auto q = parse_module_file(read_fixture("s24_q.mod"), a);
    auto reg = regular_module(a, Side::left);
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim(reg, q));
}
BENCHMARK(BM_hom_dim);

void BM_decompose(benchmark::State& state)
{
    auto a = load_algebra("s24.alg");
    auto m = direct_sum({regular_module(a, Side::left), coregular_module(a, Side::left)});
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m).size());
}
BENCHMARK(BM_decompose);

void BM_ext_dims(benchmark::State& state)
{
    auto a = load_algebra("lambda.alg");
    auto q = parse_module_file(read_fixture("lambda_q.mod"), a);
    for (auto _ : state) benchmark::DoNotOptimize(ext_dims(q, q, 8));
}
BENCHMARK(BM_ext_dims);

void BM_check_pair(benchmark::State& state)
{
    auto a = load_algebra("s24.alg");
    auto q = parse_module_file(read_fixture("s24_q.mod"), a);
    for (auto _ : state) benchmark::DoNotOptimize(check_relative_ag_pair(a, q).is_pair);
}
BENCHMARK(BM_check_pair);

void BM_correspond(benchmark::State& state)
{
    auto a = load_algebra("s24.alg");
    auto q = parse_module_file(read_fixture("s24_q.mod"), a);
    for (auto _ : state) benchmark::DoNotOptimize(correspond_from_pair(a, q).qpct.pass);
}
BENCHMARK(BM_correspond);

}  // namespace

BENCHMARK_MAIN();
