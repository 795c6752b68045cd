#ifndef EGMC_KERNELS_HPP
#define EGMC_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "egmc/gf.hpp"

namespace egmc::kernels {

/// Row-reduction and matrix-product kernels over F_q.  Each comes in a
/// plain serial form, kept as the reference, and an OpenMP form that also
/// bit-packs rows when q = 2.  Reduced row echelon form is unique, so both
/// paths must produce identical output; the tests hold them to that.

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_cols;
};

RrefResult rref_serial(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols);
RrefResult rref_parallel(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols);
/// Dispatches to the parallel kernel above a size cutoff.
RrefResult rref(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols);

void matmul_serial(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
                   const fq_elem* b, std::size_t bc, fq_elem* out);
void matmul_parallel(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
                     const fq_elem* b, std::size_t bc, fq_elem* out);
void matmul(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
            const fq_elem* b, std::size_t bc, fq_elem* out);

}  // namespace egmc::kernels

#endif
