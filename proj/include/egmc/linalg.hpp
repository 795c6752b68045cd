#ifndef EGMC_LINALG_HPP
#define EGMC_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "egmc/gf.hpp"
#include "egmc/rng.hpp"

namespace egmc {

/// Dense row-major matrix over F_q; the carrier for codewords, keys and
/// errors.  The field travels with the matrix so mixed-field operations can
/// be rejected.
class MatFq {
  public:
    MatFq() : field_(2), rows_(0), cols_(0) {}
    MatFq(const BaseField& f, std::uint32_t rows, std::uint32_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static MatFq identity(const BaseField& f, std::uint32_t n);
    static MatFq random(const BaseField& f, std::uint32_t rows, std::uint32_t cols, Rng& rng);

    const BaseField& field() const { return field_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    fq_elem at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * cols_ + j]; }
    void set(std::uint32_t i, std::uint32_t j, fq_elem v) { a_[std::size_t(i) * cols_ + j] = v; }

    fq_elem* data() { return a_.data(); }
    const fq_elem* data() const { return a_.data(); }

    bool is_zero() const;
    bool operator==(const MatFq& o) const;
    bool operator!=(const MatFq& o) const { return !(*this == o); }

    MatFq operator+(const MatFq& o) const;
    MatFq operator-(const MatFq& o) const;
    MatFq operator*(const MatFq& o) const;
    MatFq transpose() const;
    MatFq block(std::uint32_t r0, std::uint32_t c0, std::uint32_t nr, std::uint32_t nc) const;
    void paste(std::uint32_t r0, std::uint32_t c0, const MatFq& src);

  private:
    BaseField field_;
    std::uint32_t rows_, cols_;
    std::vector<fq_elem> a_;
};

std::uint32_t rank(const MatFq& a);

/// Reduced row echelon form (copy) with pivot columns.
struct EchelonForm {
    MatFq mat;
    std::uint32_t rank;
    std::vector<std::uint32_t> pivot_cols;
};
EchelonForm echelon(const MatFq& a);

MatFq invert(const MatFq& a);  // throws singular_error

/// One solution of A x = b (b may have several columns) plus a basis of the
/// null space of A, its vectors as the rows of `null_basis`.
struct SolveResult {
    MatFq x;
    MatFq null_basis;
};
SolveResult solve(const MatFq& a, const MatFq& b);  // throws no_solution_error

/// Rows of the result span { v : A v^T = 0 }.
MatFq null_space(const MatFq& a);

MatFq random_gl(const BaseField& f, std::uint32_t n, Rng& rng);

/// Column j of the output is the j-th length-m block of v.
MatFq fold(const BaseField& f, const std::vector<fq_elem>& v, std::uint32_t m);
std::vector<fq_elem> unfold(const MatFq& m);

/// Uniform over matrices of rank exactly r (product of uniform full-rank
/// factors).
MatFq random_rank_r(const BaseField& f, std::uint32_t rows, std::uint32_t cols, std::uint32_t r,
                    Rng& rng);

// ---------------------------------------------------------------------------

/// Dense matrix over F_{q^m}; used for Gabidulin generators.
class MatExt {
  public:
    MatExt(const ExtField& f, std::uint32_t rows, std::uint32_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, f.zero()) {}

    const ExtField& field() const { return field_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    const ExtElem& at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * cols_ + j]; }
    void set(std::uint32_t i, std::uint32_t j, ExtElem v) { a_[std::size_t(i) * cols_ + j] = std::move(v); }

    /// Entrywise q^i-power.
    MatExt frobenius(std::uint64_t i) const;
    /// Stacks this on top of other.
    MatExt vstack(const MatExt& other) const;

  private:
    ExtField field_;
    std::uint32_t rows_, cols_;
    std::vector<ExtElem> a_;
};

std::uint32_t rank_ext(const MatExt& a);

/// Rows of the result span the dual of the row space (Euclidean form).
MatExt null_space_ext(const MatExt& a);

/// Psi_gamma: writes the basis coordinates of each entry of x in columns.
MatFq psi(const Basis& basis, const std::vector<ExtElem>& x);
std::vector<ExtElem> psi_inv(const Basis& basis, const MatFq& m);

/// Rank weight of a word over F_{q^m}: the dimension of the F_q-span of its
/// coordinates (independent of the basis used to expand).
std::uint32_t rank_weight(const ExtField& ext, const std::vector<ExtElem>& x);

}  // namespace egmc

#endif
