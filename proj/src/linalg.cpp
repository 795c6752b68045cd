#include "egmc/linalg.hpp"

#include <algorithm>

#include "egmc/errors.hpp"
#include "egmc/kernels.hpp"

namespace egmc {

namespace {

void check_same_field(const MatFq& a, const MatFq& b) {
    if (a.field() != b.field()) throw field_mismatch_error("matrices over different fields");
}

}  // namespace

MatFq MatFq::identity(const BaseField& f, std::uint32_t n) {
    MatFq m(f, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatFq MatFq::random(const BaseField& f, std::uint32_t rows, std::uint32_t cols, Rng& rng) {
    MatFq m(f, rows, cols);
    for (auto& v : m.a_) v = f.random(rng);
    return m;
}

bool MatFq::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](fq_elem v) { return v == 0; });
}

bool MatFq::operator==(const MatFq& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

MatFq MatFq::operator+(const MatFq& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix add shape mismatch");
    MatFq r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
}

MatFq MatFq::operator-(const MatFq& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sub shape mismatch");
    MatFq r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
}

MatFq MatFq::operator*(const MatFq& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    MatFq r(field_, rows_, o.cols_);
    kernels::matmul(field_, data(), rows_, cols_, o.data(), o.cols_, r.data());
    return r;
}

MatFq MatFq::transpose() const {
    MatFq r(field_, cols_, rows_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

MatFq MatFq::block(std::uint32_t r0, std::uint32_t c0, std::uint32_t nr, std::uint32_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("block out of range");
    MatFq r(field_, nr, nc);
    for (std::uint32_t i = 0; i < nr; ++i)
        for (std::uint32_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

void MatFq::paste(std::uint32_t r0, std::uint32_t c0, const MatFq& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) throw dimension_error("paste out of range");
    for (std::uint32_t i = 0; i < src.rows(); ++i)
        for (std::uint32_t j = 0; j < src.cols(); ++j) set(r0 + i, c0 + j, src.at(i, j));
}

EchelonForm echelon(const MatFq& a) {
    EchelonForm e{a, 0, {}};
    auto res = kernels::rref(a.field(), e.mat.data(), a.rows(), a.cols());
    e.rank = std::uint32_t(res.rank);
    e.pivot_cols = std::move(res.pivot_cols);
    return e;
}

std::uint32_t rank(const MatFq& a) { return echelon(a).rank; }

MatFq invert(const MatFq& a) {
    if (a.rows() != a.cols()) throw dimension_error("invert needs a square matrix");
    const std::uint32_t n = a.rows();
    MatFq aug(a.field(), n, 2 * n);
    aug.paste(0, 0, a);
    aug.paste(0, n, MatFq::identity(a.field(), n));
    auto res = kernels::rref(a.field(), aug.data(), n, 2 * n);
    if (res.rank != n || (n > 0 && res.pivot_cols[n - 1] >= n)) throw singular_error("matrix not invertible");
    return aug.block(0, n, n, n);
}

SolveResult solve(const MatFq& a, const MatFq& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw dimension_error("solve: row count mismatch");
    const std::uint32_t n = a.cols(), bc = b.cols();
    MatFq aug(a.field(), a.rows(), n + bc);
    aug.paste(0, 0, a);
    aug.paste(0, n, b);
    auto res = kernels::rref(a.field(), aug.data(), a.rows(), n + bc);

    std::vector<std::uint32_t> pivot_of_col(n, UINT32_MAX);
    for (std::uint32_t r = 0; r < res.pivot_cols.size(); ++r) {
        if (res.pivot_cols[r] >= n) throw no_solution_error("system is inconsistent");
        pivot_of_col[res.pivot_cols[r]] = r;
    }

    SolveResult out{MatFq(a.field(), n, bc), MatFq(a.field(), 0, 0)};
    for (std::uint32_t j = 0; j < n; ++j)
        if (pivot_of_col[j] != UINT32_MAX)
            for (std::uint32_t c = 0; c < bc; ++c) out.x.set(j, c, aug.at(pivot_of_col[j], n + c));

    // free columns parameterize the null space
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t j = 0; j < n; ++j)
        if (pivot_of_col[j] == UINT32_MAX) free_cols.push_back(j);
    MatFq nb(a.field(), std::uint32_t(free_cols.size()), n);
    for (std::uint32_t fidx = 0; fidx < free_cols.size(); ++fidx) {
        const std::uint32_t fc = free_cols[fidx];
        nb.set(fidx, fc, 1);
        for (std::uint32_t j = 0; j < n; ++j)
            if (pivot_of_col[j] != UINT32_MAX)
                nb.set(fidx, j, a.field().neg(aug.at(pivot_of_col[j], fc)));
    }
    out.null_basis = std::move(nb);
    return out;
}

MatFq null_space(const MatFq& a) {
    MatFq zero(a.field(), a.rows(), 1);
    return solve(a, zero).null_basis;
}

MatFq random_gl(const BaseField& f, std::uint32_t n, Rng& rng) {
    for (;;) {
        MatFq m = MatFq::random(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

MatFq fold(const BaseField& f, const std::vector<fq_elem>& v, std::uint32_t m) {
    if (m == 0 || v.size() % m != 0) throw dimension_error("fold: length not divisible by m");
    const std::uint32_t n = std::uint32_t(v.size() / m);
    MatFq r(f, m, n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t i = 0; i < m; ++i) r.set(i, j, v[std::size_t(j) * m + i]);
    return r;
}

std::vector<fq_elem> unfold(const MatFq& m) {
    std::vector<fq_elem> v(std::size_t(m.rows()) * m.cols());
    for (std::uint32_t j = 0; j < m.cols(); ++j)
        for (std::uint32_t i = 0; i < m.rows(); ++i) v[std::size_t(j) * m.rows() + i] = m.at(i, j);
    return v;
}

MatFq random_rank_r(const BaseField& f, std::uint32_t rows, std::uint32_t cols, std::uint32_t r,
                    Rng& rng) {
    if (r > std::min(rows, cols)) throw rank_too_high_error("requested rank exceeds dimensions");
    if (r == 0) return MatFq(f, rows, cols);
    MatFq left(f, 0, 0), right(f, 0, 0);
    do left = MatFq::random(f, rows, r, rng); while (rank(left) != r);
    do right = MatFq::random(f, r, cols, rng); while (rank(right) != r);
    return left * right;
}

// ---------------------------------------------------------------------------

MatExt MatExt::frobenius(std::uint64_t i) const {
    MatExt r(field_, rows_, cols_);
    for (std::size_t idx = 0; idx < a_.size(); ++idx) r.a_[idx] = field_.frobenius(a_[idx], i);
    return r;
}

MatExt MatExt::vstack(const MatExt& other) const {
    if (cols_ != other.cols_ || field_ != other.field_) throw dimension_error("vstack mismatch");
    MatExt r(field_, rows_ + other.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(other.a_.begin(), other.a_.end(), r.a_.begin() + a_.size());
    return r;
}

namespace {

/// Row echelon over F_{q^m}; returns rank and, optionally, the reduced rows.
std::uint32_t rref_ext(const ExtField& f, std::vector<ExtElem>& a, std::uint32_t rows,
                       std::uint32_t cols, std::vector<std::uint32_t>* pivots) {
    std::uint32_t pr = 0;
    for (std::uint32_t col = 0; col < cols && pr < rows; ++col) {
        std::uint32_t sel = pr;
        while (sel < rows && f.is_zero(a[std::size_t(sel) * cols + col])) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (std::uint32_t j = 0; j < cols; ++j)
                std::swap(a[std::size_t(sel) * cols + j], a[std::size_t(pr) * cols + j]);
        const ExtElem pinv = f.inv(a[std::size_t(pr) * cols + col]);
        for (std::uint32_t j = col; j < cols; ++j)
            a[std::size_t(pr) * cols + j] = f.mul(a[std::size_t(pr) * cols + j], pinv);
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const ExtElem fac = a[std::size_t(i) * cols + col];
            if (f.is_zero(fac)) continue;
            for (std::uint32_t j = col; j < cols; ++j)
                a[std::size_t(i) * cols + j] =
                    f.sub(a[std::size_t(i) * cols + j], f.mul(fac, a[std::size_t(pr) * cols + j]));
        }
        if (pivots) pivots->push_back(col);
        ++pr;
    }
    return pr;
}

}  // namespace

std::uint32_t rank_ext(const MatExt& a) {
    std::vector<ExtElem> w;
    w.reserve(std::size_t(a.rows()) * a.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) w.push_back(a.at(i, j));
    return rref_ext(a.field(), w, a.rows(), a.cols(), nullptr);
}

MatExt null_space_ext(const MatExt& a) {
    const ExtField& f = a.field();
    const std::uint32_t rows = a.rows(), cols = a.cols();
    std::vector<ExtElem> w;
    w.reserve(std::size_t(rows) * cols);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) w.push_back(a.at(i, j));
    std::vector<std::uint32_t> pivots;
    const std::uint32_t rk = rref_ext(f, w, rows, cols, &pivots);

    std::vector<std::uint32_t> pivot_of_col(cols, UINT32_MAX);
    for (std::uint32_t r = 0; r < rk; ++r) pivot_of_col[pivots[r]] = r;
    MatExt nb(f, cols - rk, cols);
    std::uint32_t idx = 0;
    for (std::uint32_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] != UINT32_MAX) continue;
        nb.set(idx, fc, f.one());
        for (std::uint32_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] != UINT32_MAX)
                nb.set(idx, j, f.neg(w[std::size_t(pivot_of_col[j]) * cols + fc]));
        ++idx;
    }
    return nb;
}

MatFq psi(const Basis& basis, const std::vector<ExtElem>& x) {
    const std::uint32_t m = basis.field.m();
    MatFq r(basis.field.base(), m, std::uint32_t(x.size()));
    for (std::uint32_t j = 0; j < x.size(); ++j) {
        const auto col = expand(basis, x[j]);
        for (std::uint32_t i = 0; i < m; ++i) r.set(i, j, col[i]);
    }
    return r;
}

std::vector<ExtElem> psi_inv(const Basis& basis, const MatFq& m) {
    if (m.rows() != basis.field.m()) throw dimension_error("psi_inv: row count must equal m");
    std::vector<ExtElem> x;
    x.reserve(m.cols());
    std::vector<fq_elem> col(m.rows());
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        for (std::uint32_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
        x.push_back(contract(basis, col));
    }
    return x;
}

std::uint32_t rank_weight(const ExtField& ext, const std::vector<ExtElem>& x) {
    MatFq m(ext.base(), ext.m(), std::uint32_t(x.size()));
    for (std::uint32_t j = 0; j < x.size(); ++j)
        for (std::uint32_t i = 0; i < ext.m(); ++i) m.set(i, j, x[j].c[i]);
    return rank(m);
}

}  // namespace egmc
