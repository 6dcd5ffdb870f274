// Serial reference versus OpenMP for the data-parallel kernels. Prints the
// best of a few repetitions for each and confirms bitwise agreement.
//
//   OMP_NUM_THREADS=8 ./bench_kernels [scale]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <vector>

#include "dunkl/herz.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

namespace {

std::vector<double> ramp(std::size_t n, double a, double b) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / double(n - 1);
    return v;
}

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void row(const char* name, const std::function<std::vector<double>(Exec)>& fn) {
    std::vector<double> s, p;
    const double ts = best_of(3, [&] { s = fn(Exec::serial); });
    const double tp = best_of(3, [&] { p = fn(Exec::parallel); });
    std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %5.2f  bitwise %s\n", name, ts, tp, ts / tp,
                same(s, p) ? "equal" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t scale = argc > 1 ? std::size_t(std::atol(argv[1])) : 1;
    std::printf("threads %d, scale %zu\n", omp_get_max_threads(), scale);

    const auto xi = ramp(2000 * scale, 0.0, 60.0);
    const auto w = ramp(2000 * scale, 0.5, 1.5);
    const auto t = ramp(400, 0.001, 3.0);
    const NormalizedBessel j(1.5);
    const Rank1Kernel E(1.0);

    row("hankel_sums", [&](Exec e) { return kernels::hankel_sums(e, j, xi, w, t); });
    row("rank1_defect_sums", [&](Exec e) { return kernels::rank1_defect_sums(e, E, xi, w, t); });
    row("rank1_table", [&](Exec e) {
        auto tab = kernels::rank1_table(e, E, t, xi);
        return tab.even;
    });
    const auto tab = kernels::rank1_table(Exec::serial, E, t, xi);
    row("rank1_translate_rows", [&](Exec e) {
        std::vector<double> plus(t.size()), minus(t.size());
        kernels::rank1_translate_rows(e, tab, w, w, w, plus, minus);
        return plus;
    });
    row("herz_norm shells", [&](Exec e) {
        const auto h = herz_norm(ModelParams::radial(2, 1.0), profiles::gaussian(), {}, {}, e);
        return h.shell_norms;
    });
    return 0;
}
