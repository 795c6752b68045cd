#include "egmc/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace egmc::kernels {

namespace {

constexpr std::size_t kParallelCutoff = 1u << 15;

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

void pack_row(const fq_elem* src, std::size_t cols, std::uint64_t* dst) {
    std::fill(dst, dst + words_for(cols), 0);
    for (std::size_t j = 0; j < cols; ++j)
        if (src[j]) dst[j >> 6] |= std::uint64_t(1) << (j & 63);
}

void unpack_row(const std::uint64_t* src, std::size_t cols, fq_elem* dst) {
    for (std::size_t j = 0; j < cols; ++j) dst[j] = fq_elem((src[j >> 6] >> (j & 63)) & 1);
}

RrefResult rref_gf2_packed(fq_elem* a, std::size_t rows, std::size_t cols, bool parallel) {
    const std::size_t nw = words_for(cols);
    std::vector<std::uint64_t> p(rows * nw);
    for (std::size_t i = 0; i < rows; ++i) pack_row(a + i * cols, cols, &p[i * nw]);

    RrefResult res;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        const std::size_t w = col >> 6;
        const std::uint64_t bit = std::uint64_t(1) << (col & 63);
        std::size_t sel = pivot_row;
        while (sel < rows && !(p[sel * nw + w] & bit)) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            std::swap_ranges(&p[sel * nw], &p[sel * nw] + nw, &p[pivot_row * nw]);
        const std::uint64_t* prow = &p[pivot_row * nw];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows * nw >= kParallelCutoff)
#endif
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(rows); ++i) {
            if (std::size_t(i) == pivot_row) continue;
            std::uint64_t* row = &p[std::size_t(i) * nw];
            if (!(row[w] & bit)) continue;
            for (std::size_t k = w; k < nw; ++k) row[k] ^= prow[k];
        }
        res.pivot_cols.push_back(std::uint32_t(col));
        ++pivot_row;
    }
    res.rank = pivot_row;
    for (std::size_t i = 0; i < rows; ++i) unpack_row(&p[i * nw], cols, a + i * cols);
    return res;
}

RrefResult rref_generic(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols,
                        bool parallel) {
    RrefResult res;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            std::swap_ranges(a + sel * cols, a + (sel + 1) * cols, a + pivot_row * cols);
        fq_elem* prow = a + pivot_row * cols;
        const fq_elem pinv = F.inv(prow[col]);
        if (pinv != 1)
            for (std::size_t j = col; j < cols; ++j) prow[j] = F.mul(prow[j], pinv);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows * cols >= kParallelCutoff)
#endif
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(rows); ++i) {
            if (std::size_t(i) == pivot_row) continue;
            fq_elem* row = a + std::size_t(i) * cols;
            const fq_elem f = row[col];
            if (!f) continue;
            row[col] = 0;
            for (std::size_t j = col + 1; j < cols; ++j)
                if (prow[j]) row[j] = F.sub(row[j], F.mul(f, prow[j]));
        }
        res.pivot_cols.push_back(std::uint32_t(col));
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

void matmul_gf2_packed(const fq_elem* a, std::size_t ar, std::size_t ac, const fq_elem* b,
                       std::size_t bc, fq_elem* out, bool parallel) {
    const std::size_t nw = words_for(bc);
    std::vector<std::uint64_t> bp(ac * nw);
    for (std::size_t i = 0; i < ac; ++i) pack_row(b + i * bc, bc, &bp[i * nw]);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && ar * ac * nw >= kParallelCutoff)
#endif
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(ar); ++i) {
        std::vector<std::uint64_t> acc(nw, 0);
        const fq_elem* arow = a + std::size_t(i) * ac;
        for (std::size_t k = 0; k < ac; ++k) {
            if (!arow[k]) continue;
            const std::uint64_t* brow = &bp[k * nw];
            for (std::size_t w = 0; w < nw; ++w) acc[w] ^= brow[w];
        }
        unpack_row(acc.data(), bc, out + std::size_t(i) * bc);
    }
}

void matmul_generic(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
                    const fq_elem* b, std::size_t bc, fq_elem* out, bool parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && ar * ac * bc >= kParallelCutoff)
#endif
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(ar); ++i) {
        fq_elem* orow = out + std::size_t(i) * bc;
        std::fill(orow, orow + bc, 0);
        const fq_elem* arow = a + std::size_t(i) * ac;
        for (std::size_t k = 0; k < ac; ++k) {
            const fq_elem f = arow[k];
            if (!f) continue;
            const fq_elem* brow = b + k * bc;
            for (std::size_t j = 0; j < bc; ++j)
                if (brow[j]) orow[j] = F.add(orow[j], F.mul(f, brow[j]));
        }
    }
}

}  // namespace

RrefResult rref_serial(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols) {
    return rref_generic(F, a, rows, cols, false);
}

RrefResult rref_parallel(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols) {
    if (F.q() == 2) return rref_gf2_packed(a, rows, cols, true);
    return rref_generic(F, a, rows, cols, true);
}

RrefResult rref(const BaseField& F, fq_elem* a, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return {};
    if (F.q() == 2 && rows * cols >= 1024) return rref_gf2_packed(a, rows, cols, rows * cols >= kParallelCutoff);
    return rref_generic(F, a, rows, cols, rows * cols >= kParallelCutoff);
}

void matmul_serial(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
                   const fq_elem* b, std::size_t bc, fq_elem* out) {
    matmul_generic(F, a, ar, ac, b, bc, out, false);
}

void matmul_parallel(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
                     const fq_elem* b, std::size_t bc, fq_elem* out) {
    if (F.q() == 2) {
        matmul_gf2_packed(a, ar, ac, b, bc, out, true);
        return;
    }
    matmul_generic(F, a, ar, ac, b, bc, out, true);
}

void matmul(const BaseField& F, const fq_elem* a, std::size_t ar, std::size_t ac,
            const fq_elem* b, std::size_t bc, fq_elem* out) {
    if (ar == 0 || bc == 0) return;
    if (F.q() == 2 && ar * ac >= 1024) {
        matmul_gf2_packed(a, ar, ac, b, bc, out, ar * ac * words_for(bc) >= kParallelCutoff);
        return;
    }
    matmul_generic(F, a, ar, ac, b, bc, out, ar * ac * bc >= kParallelCutoff);
}

}  // namespace egmc::kernels
