#include "egmc/matrixcode.hpp"

#include "egmc/egmc.hpp"
#include "egmc/errors.hpp"
#include "egmc/gabidulin.hpp"
#include "egmc/kernels.hpp"

namespace egmc {

MatrixCodeBasis MatrixCodeBasis::from_basis(std::vector<MatFq> mats) {
    if (mats.empty()) throw dimension_error("empty basis");
    MatrixCodeBasis c(mats[0].field(), mats[0].rows(), mats[0].cols());
    c.basis_ = std::move(mats);
    for (const auto& m : c.basis_)
        if (m.rows() != c.rows_ || m.cols() != c.cols_ || m.field() != c.field_)
            throw dimension_error("inconsistent basis element shape");
    if (rank(c.unfolded_generator()) != c.dim())
        throw parameter_error("matrices are not linearly independent");
    return c;
}

MatrixCodeBasis MatrixCodeBasis::from_span(const BaseField& f, std::uint32_t rows,
                                           std::uint32_t cols, const std::vector<MatFq>& mats) {
    MatrixCodeBasis c(f, rows, cols);
    if (mats.empty()) return c;
    MatFq gen(f, std::uint32_t(mats.size()), rows * cols);
    for (std::uint32_t i = 0; i < mats.size(); ++i) {
        const auto v = unfold(mats[i]);
        for (std::uint32_t j = 0; j < v.size(); ++j) gen.set(i, j, v[j]);
    }
    auto ech = echelon(gen);
    c.basis_.reserve(ech.rank);
    for (std::uint32_t i = 0; i < ech.rank; ++i) {
        std::vector<fq_elem> v(rows * cols);
        for (std::uint32_t j = 0; j < v.size(); ++j) v[j] = ech.mat.at(i, j);
        c.basis_.push_back(fold(f, v, rows));
    }
    return c;
}

MatrixCodeBasis MatrixCodeBasis::random(const BaseField& f, std::uint32_t rows, std::uint32_t cols,
                                        std::uint32_t dim, Rng& rng) {
    if (dim > rows * cols) throw dimension_error("dimension exceeds ambient space");
    for (;;) {
        std::vector<MatFq> mats;
        mats.reserve(dim);
        for (std::uint32_t i = 0; i < dim; ++i) mats.push_back(MatFq::random(f, rows, cols, rng));
        MatrixCodeBasis c(f, rows, cols);
        c.basis_ = std::move(mats);
        if (rank(c.unfolded_generator()) == dim) return c;
    }
}

MatFq MatrixCodeBasis::unfolded_generator() const {
    MatFq gen(field_, dim(), rows_ * cols_);
    for (std::uint32_t i = 0; i < dim(); ++i) {
        const auto v = unfold(basis_[i]);
        for (std::uint32_t j = 0; j < v.size(); ++j) gen.set(i, j, v[j]);
    }
    return gen;
}

bool MatrixCodeBasis::contains(const MatFq& m) const {
    if (m.rows() != rows_ || m.cols() != cols_) return false;
    MatFq gen(field_, dim() + 1, rows_ * cols_);
    gen.paste(0, 0, unfolded_generator());
    const auto v = unfold(m);
    for (std::uint32_t j = 0; j < v.size(); ++j) gen.set(dim(), j, v[j]);
    return rank(gen) == dim();
}

bool MatrixCodeBasis::same_span(const MatrixCodeBasis& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || dim() != other.dim()) return false;
    MatFq gen(field_, dim() + other.dim(), rows_ * cols_);
    gen.paste(0, 0, unfolded_generator());
    gen.paste(dim(), 0, other.unfolded_generator());
    return rank(gen) == dim();
}

MatrixCodeBasis MatrixCodeBasis::left_multiplied(const MatFq& p) const {
    std::vector<MatFq> mats;
    mats.reserve(dim());
    for (const auto& m : basis_) mats.push_back(p * m);
    return from_basis(std::move(mats));
}

MatrixCodeBasis MatrixCodeBasis::right_multiplied(const MatFq& q) const {
    std::vector<MatFq> mats;
    mats.reserve(dim());
    for (const auto& m : basis_) mats.push_back(m * q);
    return from_basis(std::move(mats));
}

MatrixCodeBasis expand_code(const Basis& gamma, const MatExt& generator) {
    const ExtField& ext = gamma.field;
    if (generator.field() != ext) throw field_mismatch_error("generator over a different field");
    const std::uint32_t k = generator.rows(), n = generator.cols(), m = ext.m();
    std::vector<MatFq> mats;
    mats.reserve(std::size_t(m) * k);
    std::vector<ExtElem> row(n, ext.zero());
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t b = 0; b < m; ++b) {
            for (std::uint32_t j = 0; j < n; ++j)
                row[j] = ext.mul(gamma.elems[b], generator.at(i, j));
            mats.push_back(psi(gamma, row));
        }
    }
    return MatrixCodeBasis::from_basis(std::move(mats));
}

MatrixCodeBasis dual_code(const MatrixCodeBasis& c) {
    // Tr(X Y^t) is the dot product of the unfolded matrices, so the dual is
    // the null space of the unfolded generator.
    MatFq ns = null_space(c.unfolded_generator());
    std::vector<MatFq> mats;
    mats.reserve(ns.rows());
    for (std::uint32_t i = 0; i < ns.rows(); ++i) {
        std::vector<fq_elem> v(ns.cols());
        for (std::uint32_t j = 0; j < ns.cols(); ++j) v[j] = ns.at(i, j);
        mats.push_back(fold(c.field(), v, c.rows()));
    }
    if (mats.empty()) return MatrixCodeBasis(c.field(), c.rows(), c.cols());
    return MatrixCodeBasis::from_basis(std::move(mats));
}

namespace {

enum class Side { Left, Right };

StabilizerAlgebra stabilizer(const MatrixCodeBasis& c, Side side) {
    const BaseField& F = c.field();
    const std::uint32_t s = (side == Side::Left) ? c.rows() : c.cols();
    const MatrixCodeBasis dual = dual_code(c);

    // Membership constraints Tr(P A_i Y_h^t) = 0 (resp. Tr(A_i Q Y_h^t) = 0)
    // are linear in the s^2 unknowns.
    MatFq sys(F, c.dim() * dual.dim(), s * s);
    std::uint32_t row = 0;
    for (const auto& a : c.basis()) {
        for (const auto& y : dual.basis()) {
            const MatFq coef = (side == Side::Left) ? a * y.transpose() : a.transpose() * y;
            for (std::uint32_t p = 0; p < s; ++p)
                for (std::uint32_t r2 = 0; r2 < s; ++r2)
                    sys.set(row, p * s + r2,
                            (side == Side::Left) ? coef.at(r2, p) : coef.at(p, r2));
            ++row;
        }
    }

    MatFq ns = null_space(sys);
    StabilizerAlgebra alg{ns.rows(), {}};
    alg.basis.reserve(ns.rows());
    for (std::uint32_t i = 0; i < ns.rows(); ++i) {
        MatFq p(F, s, s);
        for (std::uint32_t a2 = 0; a2 < s; ++a2)
            for (std::uint32_t b = 0; b < s; ++b) p.set(a2, b, ns.at(i, a2 * s + b));
        alg.basis.push_back(std::move(p));
    }
    return alg;
}

}  // namespace

StabilizerAlgebra left_stabilizer(const MatrixCodeBasis& c) { return stabilizer(c, Side::Left); }

StabilizerAlgebra right_stabilizer(const MatrixCodeBasis& c) { return stabilizer(c, Side::Right); }

std::uint32_t frobenius_sum_dim(const MatExt& generator, std::uint32_t f) {
    MatExt stacked = generator;
    MatExt g = generator;
    for (std::uint32_t i = 1; i <= f; ++i) {
        g = g.frobenius(1);
        stacked = stacked.vstack(g);
    }
    return rank_ext(stacked);
}

MatrixCodeBasis product_span(const MatrixCodeBasis& d, const MatrixCodeBasis& c) {
    if (d.cols() != c.rows()) throw dimension_error("product_span: inner dimensions differ");
    std::vector<MatFq> prods;
    prods.reserve(std::size_t(d.dim()) * c.dim());
    for (const auto& dm : d.basis())
        for (const auto& cm : c.basis()) prods.push_back(dm * cm);
    return MatrixCodeBasis::from_span(c.field(), d.rows(), c.cols(), prods);
}

bool overbeck_codim_check(const MatrixCodeBasis& pub_code, const EgmcSecretKey& sk) {
    const EgmcParams& pr = sk.params;
    const std::uint32_t m = pr.m, n = pr.n, k = pr.k, l1 = pr.l1, l2 = pr.l2;
    if (pub_code.rows() != m + l1 || pub_code.cols() != n + l2)
        throw dimension_error("public code shape does not match the key");
    const BaseField& F = sk.gamma.field.base();

    // Left-multiplier code: top-left block from the degree-(n-k) lift
    // evaluated at the basis itself, plus free bottom rows.
    GabidulinCode gab_gamma(sk.gamma.field, m, n - k, sk.gamma.elems);
    MatrixCodeBasis inner = expand_code(sk.gamma, gab_gamma.generator());
    std::vector<MatFq> dmats;
    dmats.reserve(std::size_t(m) * (n - k) + std::size_t(l1) * (m + l1));
    for (const auto& b : inner.basis()) {
        MatFq e(F, m + l1, m + l1);
        e.paste(0, 0, b);
        dmats.push_back(std::move(e));
    }
    for (std::uint32_t i = 0; i < l1; ++i)
        for (std::uint32_t j = 0; j < m + l1; ++j) {
            MatFq e(F, m + l1, m + l1);
            e.set(m + i, j, 1);
            dmats.push_back(std::move(e));
        }
    MatrixCodeBasis d = MatrixCodeBasis::from_basis(std::move(dmats));

    const MatFq p_inv = invert(sk.p);
    MatrixCodeBasis d_conj = d.left_multiplied(sk.p).right_multiplied(p_inv);

    const MatrixCodeBasis u = product_span(d_conj, pub_code);
    return u.dim() <= (m + l1) * (n + l2) - m;
}

}  // namespace egmc
