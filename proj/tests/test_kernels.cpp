#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "dunkl/kernels.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

namespace {

std::vector<double> ramp(std::size_t n, double a, double b) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / double(n - 1);
    return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

// ctest runs this binary with OMP_NUM_THREADS=4, so the parallel path really
// splits the loops even on a single core.
TEST_CASE("parallel kernels agree bit for bit with the serial reference") {
    const auto xi = ramp(301, 0.0, 30.0);
    const auto w = ramp(301, 0.5, 1.5);
    const auto t = ramp(97, 0.01, 3.0);

    SUBCASE("map_indexed") {
        auto fn = [](std::size_t i) { return std::sin(double(i)) / (1.0 + double(i)); };
        CHECK(bitwise_equal(kernels::map_indexed(Exec::serial, 1000, fn), kernels::map_indexed(Exec::parallel, 1000, fn)));
    }
    SUBCASE("map_indexed rethrows the first failure by index") {
        auto fn = [](std::size_t i) -> double {
            if (i == 17 || i == 500) throw std::runtime_error(std::to_string(i));
            return 0.0;
        };
        for (Exec e : {Exec::serial, Exec::parallel}) {
            try {
                kernels::map_indexed(e, 1000, fn);
                FAIL("no exception");
            } catch (const std::runtime_error& err) {
                CHECK(std::string(err.what()) == "17");
            }
        }
    }
    SUBCASE("hankel_sums") {
        NormalizedBessel j(0.7);
        CHECK(bitwise_equal(kernels::hankel_sums(Exec::serial, j, xi, w, t),
                            kernels::hankel_sums(Exec::parallel, j, xi, w, t)));
    }
    SUBCASE("rank1_defect_sums") {
        Rank1Kernel E(1.0);
        CHECK(bitwise_equal(kernels::rank1_defect_sums(Exec::serial, E, xi, w, t),
                            kernels::rank1_defect_sums(Exec::parallel, E, xi, w, t)));
    }
    SUBCASE("rank1_table and row translation") {
        Rank1Kernel E(0.5);
        const auto s = kernels::rank1_table(Exec::serial, E, t, xi);
        const auto p = kernels::rank1_table(Exec::parallel, E, t, xi);
        CHECK(bitwise_equal(s.even, p.even));
        CHECK(bitwise_equal(s.odd, p.odd));
        std::vector<double> a(xi.size()), b(xi.size());
        for (std::size_t j = 0; j < xi.size(); ++j) {
            a[j] = E.even_part(0.4 * xi[j]);
            b[j] = E.odd_part(0.4 * xi[j]);
        }
        std::vector<double> sp(t.size()), sm(t.size()), pp(t.size()), pm(t.size());
        kernels::rank1_translate_rows(Exec::serial, s, w, a, b, sp, sm);
        kernels::rank1_translate_rows(Exec::parallel, s, w, a, b, pp, pm);
        CHECK(bitwise_equal(sp, pp));
        CHECK(bitwise_equal(sm, pm));

        // The table-free variant computes the same sums.
        std::vector<double> wa(xi.size()), wb(xi.size());
        for (std::size_t j = 0; j < xi.size(); ++j) {
            wa[j] = w[j] * a[j];
            wb[j] = w[j] * b[j];
        }
        std::vector<double> qp(t.size()), qm(t.size()), rp(t.size()), rm(t.size());
        kernels::rank1_translate_points(Exec::serial, E, xi, wa, wb, t, qp, qm);
        kernels::rank1_translate_points(Exec::parallel, E, xi, wa, wb, t, rp, rm);
        CHECK(bitwise_equal(qp, rp));
        CHECK(bitwise_equal(qm, rm));
        for (std::size_t i = 0; i < t.size(); ++i) CHECK(qp[i] == doctest::Approx(sp[i]).epsilon(1e-12));
    }
    SUBCASE("size mismatches are rejected") {
        NormalizedBessel j(0.0);
        const std::vector<double> short_w(3, 1.0);
        CHECK_THROWS_AS(kernels::hankel_sums(Exec::parallel, j, xi, short_w, t), std::invalid_argument);
    }
}
