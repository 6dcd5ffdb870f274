#pragma once

// Per-element bodies shared by the serial and OpenMP kernels. Keeping them in
// one place is what makes the two variants bitwise identical.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "dunkl/kernels.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl::kernels::detail {

inline double hankel_row(const NormalizedBessel& j, std::span<const double> node, std::span<const double> w, double s) {
    double sum = 0.0;
    for (std::size_t k = 0; k < node.size(); ++k) sum += w[k] * j(s * node[k]);
    return sum;
}

inline double defect_row(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> w, double t) {
    double sum = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double z = t * xi[k];
        const double a = E.even_part(z) - 1.0;
        const double b = E.odd_part(z);
        sum += w[k] * (a * a + b * b);
    }
    return sum;
}

inline void table_row(const Rank1Kernel& E, double y, std::span<const double> xi, double* even, double* odd) {
    for (std::size_t k = 0; k < xi.size(); ++k) {
        even[k] = E.even_part(y * xi[k]);
        odd[k] = E.odd_part(y * xi[k]);
    }
}

inline void translate_row(const double* even, const double* odd, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, double& plus, double& minus) {
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        sa += w[k] * a[k] * even[k];
        sb += w[k] * b[k] * odd[k];
    }
    plus = sa - sb;
    minus = sa + sb;
}

inline void translate_point(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, double y, double& plus, double& minus) {
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double z = y * xi[k];
        sa += wa[k] * E.even_part(z);
        sb += wb[k] * E.odd_part(z);
    }
    plus = sa - sb;
    minus = sa + sb;
}

}  // namespace dunkl::kernels::detail

namespace dunkl::kernels::serial {
std::vector<double> map_indexed(std::size_t n, const std::function<double(std::size_t)>& fn);
std::vector<double> hankel_sums(const NormalizedBessel& j, std::span<const double> node, std::span<const double> w,
                                std::span<const double> scale);
std::vector<double> rank1_defect_sums(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> w,
                                      std::span<const double> t);
KernelTable rank1_table(const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi);
void rank1_translate_rows(const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus);
void rank1_translate_points(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus);
}  // namespace dunkl::kernels::serial

namespace dunkl::kernels::omp {
std::vector<double> map_indexed(std::size_t n, const std::function<double(std::size_t)>& fn);
std::vector<double> hankel_sums(const NormalizedBessel& j, std::span<const double> node, std::span<const double> w,
                                std::span<const double> scale);
std::vector<double> rank1_defect_sums(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> w,
                                      std::span<const double> t);
KernelTable rank1_table(const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi);
void rank1_translate_rows(const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus);
void rank1_translate_points(const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus);
}  // namespace dunkl::kernels::omp
