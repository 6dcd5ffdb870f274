#include "kernels_detail.hpp"

namespace dunkl::kernels::serial {

std::vector<double> map_indexed(std::size_t n, const std::function<double(std::size_t)>& fn) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

std::vector<double> hankel_sums(const NormalizedBessel& j, std::span<const double> node, std::span<const double> w,
                                std::span<const double> scale) {
    std::vector<double> out(scale.size());
    for (std::size_t i = 0; i < scale.size(); ++i) out[i] = detail::hankel_row(j, node, w, scale[i]);
    return out;
}

std::vector<double> rank1_defect_sums(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> w,
                                      std::span<const double> t) {
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = detail::defect_row(E, xi, w, t[i]);
    return out;
}

KernelTable rank1_table(const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi) {
    KernelTable tab{y.size(), xi.size(), std::vector<double>(y.size() * xi.size()), std::vector<double>(y.size() * xi.size())};
    for (std::size_t i = 0; i < y.size(); ++i)
        detail::table_row(E, y[i], xi, tab.even.data() + i * tab.cols, tab.odd.data() + i * tab.cols);
    return tab;
}

void rank1_translate_rows(const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus) {
    for (std::size_t i = 0; i < table.rows; ++i)
        detail::translate_row(table.even.data() + i * table.cols, table.odd.data() + i * table.cols, w, a, b, plus[i],
                              minus[i]);
}

void rank1_translate_points(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus) {
    for (std::size_t i = 0; i < y.size(); ++i) detail::translate_point(E, xi, wa, wb, y[i], plus[i], minus[i]);
}

}  // namespace dunkl::kernels::serial
