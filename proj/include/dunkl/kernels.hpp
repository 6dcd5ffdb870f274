#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version; each output element is computed by the same sequential
// code in both, so the two agree bit for bit regardless of thread count.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

class NormalizedBessel;
class Rank1Kernel;

enum class Exec { serial, parallel };

const char* exec_name(Exec e);

namespace kernels {

/// out[i] = fn(i), i < n. Exceptions thrown by fn are rethrown after the loop
/// (the first one by index).
std::vector<double> map_indexed(Exec exec, std::size_t n, const std::function<double(std::size_t)>& fn);

/// Discrete Hankel sums out[i] = sum_j w[j] j_alpha(scale[i] * node[j]).
std::vector<double> hankel_sums(Exec exec, const NormalizedBessel& j, std::span<const double> node,
                                std::span<const double> w, std::span<const double> scale);

/// Rank-one translation defects out[i] = sum_j w[j] ((A(t_i xi_j) - 1)^2 + B(t_i xi_j)^2),
/// where A + iB = E_k(i t, xi).
std::vector<double> rank1_defect_sums(Exec exec, const Rank1Kernel& E, std::span<const double> xi,
                                      std::span<const double> w, std::span<const double> t);

/// Kernel values on a (y, xi) grid, row-major in y.
struct KernelTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> even;  // A(y_i xi_j)
    std::vector<double> odd;   // B(y_i xi_j)
};

KernelTable rank1_table(Exec exec, const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi);

/// Translates on the table rows:
///   plus[i]  = sum_j w[j] (a[j] A_ij - b[j] B_ij)   (tau_t f at +y_i)
///   minus[i] = sum_j w[j] (a[j] A_ij + b[j] B_ij)   (tau_t f at -y_i)
/// with a[j] = A(t xi_j), b[j] = B(t xi_j).
void rank1_translate_rows(Exec exec, const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus);

/// Table-free variant for long y lists:
///   plus[i]  = sum_j (wa[j] A(y_i xi_j) - wb[j] B(y_i xi_j))
///   minus[i] = sum_j (wa[j] A(y_i xi_j) + wb[j] B(y_i xi_j))
void rank1_translate_points(Exec exec, const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus);

}  // namespace kernels

}  // namespace dunkl
