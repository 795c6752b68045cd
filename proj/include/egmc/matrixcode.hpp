#ifndef EGMC_MATRIXCODE_HPP
#define EGMC_MATRIXCODE_HPP

#include <cstdint>
#include <vector>

#include "egmc/gf.hpp"
#include "egmc/linalg.hpp"

namespace egmc {

struct EgmcSecretKey;

/// F_q-linear subspace of rows x cols matrices, held as an ordered basis.
class MatrixCodeBasis {
  public:
    MatrixCodeBasis(const BaseField& f, std::uint32_t rows, std::uint32_t cols)
        : field_(f), rows_(rows), cols_(cols) {}

    /// Wraps an independent list of matrices; throws if dependent.
    static MatrixCodeBasis from_basis(std::vector<MatFq> mats);
    /// Row-reduces an arbitrary spanning set down to a basis.
    static MatrixCodeBasis from_span(const BaseField& f, std::uint32_t rows, std::uint32_t cols,
                                     const std::vector<MatFq>& mats);
    static MatrixCodeBasis random(const BaseField& f, std::uint32_t rows, std::uint32_t cols,
                                  std::uint32_t dim, Rng& rng);

    const BaseField& field() const { return field_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    std::uint32_t dim() const { return std::uint32_t(basis_.size()); }
    const std::vector<MatFq>& basis() const { return basis_; }

    /// K x (rows*cols) matrix whose rows are the unfolded basis elements.
    MatFq unfolded_generator() const;

    bool contains(const MatFq& m) const;
    bool same_span(const MatrixCodeBasis& other) const;

    /// Left/right multiplication by fixed matrices (code equivalence maps).
    MatrixCodeBasis left_multiplied(const MatFq& p) const;
    MatrixCodeBasis right_multiplied(const MatFq& q) const;

  private:
    BaseField field_;
    std::uint32_t rows_, cols_;
    std::vector<MatFq> basis_;
};

/// Lift of a vector code to a matrix code: basis { Psi_gamma(gamma_b * v_i) }
/// over all basis elements gamma_b and generator rows v_i; dimension m*k.
MatrixCodeBasis expand_code(const Basis& gamma, const MatExt& generator);

/// Dual under the trace form Tr(X Y^t); dimension rows*cols - K.
MatrixCodeBasis dual_code(const MatrixCodeBasis& c);

struct StabilizerAlgebra {
    std::uint32_t dimension;
    std::vector<MatFq> basis;
};

/// { P : P C ⊆ C }; contains the scalars, so dimension >= 1.  A dimension
/// >= m betrays a hidden F_{q^m}-linear structure.
StabilizerAlgebra left_stabilizer(const MatrixCodeBasis& c);

/// { Q : C Q ⊆ C }.
StabilizerAlgebra right_stabilizer(const MatrixCodeBasis& c);

/// Dimension of C + C^[1] + ... + C^[f] for the vector code generated by g;
/// min(n, k+f) for Gabidulin vs min(n, k(f+1)) (w.h.p.) for random codes.
std::uint32_t frobenius_sum_dim(const MatExt& generator, std::uint32_t f);

/// Basis of span{ D_i C_j } over all basis pairs.
MatrixCodeBasis product_span(const MatrixCodeBasis& d, const MatrixCodeBasis& c);

/// White-box check of the product-span codimension certificate: builds the
/// conjugated left-multiplier code from the secret key and tests
/// dim span{D' C_pub} <= (m+l1)(n+l2) - m.
bool overbeck_codim_check(const MatrixCodeBasis& pub_code, const EgmcSecretKey& sk);

}  // namespace egmc

#endif
