#include <stdexcept>

#include "kernels_detail.hpp"

namespace dunkl {

const char* exec_name(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

namespace kernels {

std::vector<double> map_indexed(Exec exec, std::size_t n, const std::function<double(std::size_t)>& fn) {
    return exec == Exec::serial ? serial::map_indexed(n, fn) : omp::map_indexed(n, fn);
}

std::vector<double> hankel_sums(Exec exec, const NormalizedBessel& j, std::span<const double> node,
                                std::span<const double> w, std::span<const double> scale) {
    if (node.size() != w.size()) throw std::invalid_argument("hankel_sums: node/weight size mismatch");
    return exec == Exec::serial ? serial::hankel_sums(j, node, w, scale) : omp::hankel_sums(j, node, w, scale);
}

std::vector<double> rank1_defect_sums(Exec exec, const Rank1Kernel& E, std::span<const double> xi,
                                      std::span<const double> w, std::span<const double> t) {
    if (xi.size() != w.size()) throw std::invalid_argument("rank1_defect_sums: node/weight size mismatch");
    return exec == Exec::serial ? serial::rank1_defect_sums(E, xi, w, t) : omp::rank1_defect_sums(E, xi, w, t);
}

KernelTable rank1_table(Exec exec, const Rank1Kernel& E, std::span<const double> y, std::span<const double> xi) {
    return exec == Exec::serial ? serial::rank1_table(E, y, xi) : omp::rank1_table(E, y, xi);
}

void rank1_translate_rows(Exec exec, const KernelTable& table, std::span<const double> w, std::span<const double> a,
                          std::span<const double> b, std::span<double> plus, std::span<double> minus) {
    if (w.size() != table.cols || a.size() != table.cols || b.size() != table.cols)
        throw std::invalid_argument("rank1_translate_rows: column size mismatch");
    if (plus.size() != table.rows || minus.size() != table.rows)
        throw std::invalid_argument("rank1_translate_rows: row size mismatch");
    if (exec == Exec::serial)
        serial::rank1_translate_rows(table, w, a, b, plus, minus);
    else
        omp::rank1_translate_rows(table, w, a, b, plus, minus);
}

void rank1_translate_points(Exec exec, const Rank1Kernel& E, std::span<const double> xi, std::span<const double> wa,
                            std::span<const double> wb, std::span<const double> y, std::span<double> plus,
                            std::span<double> minus) {
    if (wa.size() != xi.size() || wb.size() != xi.size())
        throw std::invalid_argument("rank1_translate_points: node/weight size mismatch");
    if (plus.size() != y.size() || minus.size() != y.size())
        throw std::invalid_argument("rank1_translate_points: output size mismatch");
    if (exec == Exec::serial)
        serial::rank1_translate_points(E, xi, wa, wb, y, plus, minus);
    else
        omp::rank1_translate_points(E, xi, wa, wb, y, plus, minus);
}

}  // namespace kernels

}  // namespace dunkl
