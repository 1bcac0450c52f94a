// Timing comparison of the OpenMP window-scan kernels against their serial
// reference twins. Also asserts result equality, so a bench run doubles as a
// consistency check.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sturmlab/constructions.hpp"
#include "sturmlab/permutation.hpp"
#include "sturmlab/sturmian.hpp"

using namespace sturmlab;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = clk::now();
    f();
    return seconds(t0, clk::now());
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t L = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
    std::size_t n_max = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 60;
    std::printf("L=%zu n_max=%zu\n", L, n_max);

    ExactReal golden = ExactReal::parse("(-1+1*sqrt(5))/2");
    Word prefix = generate(SturmianSpec(golden, ExactReal(0)), L);
    ComplexityProfile ws, wp;
    double t_ws = timed([&] { ws = complexity_profile_serial(prefix, n_max); });
    double t_wp = timed([&] { wp = complexity_profile(prefix, n_max); });
    if (ws != wp) {
        std::fprintf(stderr, "word profiles disagree\n");
        return 1;
    }
    row("word complexity_profile", t_ws, t_wp);

    Representative rep = sturmian_representative(golden, ExactReal(0), L);
    ComplexityProfile ps, pp;
    double t_ps = timed([&] { ps = perm_complexity_profile_serial(rep, n_max); });
    double t_pp = timed([&] { pp = perm_complexity_profile(rep, n_max); });
    if (ps != pp) {
        std::fprintf(stderr, "perm profiles disagree\n");
        return 1;
    }
    row("perm complexity_profile", t_ps, t_pp);

    // pair-scan period detection (parallel only; serial twin is the same loop
    // without the pragma, dominated by identical work) -- report absolute time
    Representative ex1 = example1_representative(L / 2, Example1Variant::a);
    double t_per = timed([&] { (void)detect_perm_period(ex1, 8); });
    std::printf("%-28s %8.3fs (periodic input, L=%zu)\n", "perm detect_perm_period", t_per, L / 2);
    return 0;
}
