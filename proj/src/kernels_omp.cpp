#include <omp.h>

#include <cstdint>

#include "kernels_detail.hpp"

namespace dunkl::kernels::omp {

namespace {

// Exceptions may not leave a parallel region; keep the lowest-index one.
class FirstError {
public:
    void capture(std::int64_t i) {
#pragma omp critical(dunkl_first_error)
        {
            if (!error_ || i < index_) {
                error_ = std::current_exception();
                index_ = i;
            }
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
    std::int64_t index_ = 0;
};

}  // namespace

std::vector<double> map_indexed(std::size_t n, const std::function<double(std::size_t)>& fn) {
    std::vector<double> out(n);
    FirstError err;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            err.capture(i);
        }
    }
    err.rethrow();
    return out;
}

std::vector<double> hankel_sums(const NormalizedBessel& j, std::span<const double> node, std::span<const double> w,
                                std::span<const double> scale) {
    std::vector<double> out(scale.size());
    const auto count = static_cast<std::int64_t>(scale.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = detail::hankel_row(j, node, w, scale[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<double> rank1_defect_sums(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> w,
                                      std::span<const double> t) {
    std::vector<double> out(t.size());
    const auto count = static_cast<std::int64_t>(t.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = detail::defect_row(E, xi, w, t[static_cast<std::size_t>(i)]);
    return out;
}

KernelTable rank1_table(const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi) {
    KernelTable tab{y.size(), xi.size(), std::vector<double>(y.size() * xi.size()), std::vector<double>(y.size() * xi.size())};
    const auto rows = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto r = static_cast<std::size_t>(i);
        detail::table_row(E, y[r], xi, tab.even.data() + r * tab.cols, tab.odd.data() + r * tab.cols);
    }
    return tab;
}

void rank1_translate_rows(const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus) {
    const auto rows = static_cast<std::int64_t>(table.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto r = static_cast<std::size_t>(i);
        detail::translate_row(table.even.data() + r * table.cols, table.odd.data() + r * table.cols, w, a, b, plus[r],
                              minus[r]);
    }
}

void rank1_translate_points(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus) {
    const auto count = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto r = static_cast<std::size_t>(i);
        detail::translate_point(E, xi, wa, wb, y[r], plus[r], minus[r]);
    }
}

}  // namespace dunkl::kernels::omp
