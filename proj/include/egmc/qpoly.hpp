#ifndef EGMC_QPOLY_HPP
#define EGMC_QPOLY_HPP

#include <cstdint>
#include <vector>

#include "egmc/gf.hpp"

namespace egmc {

/// Linearized polynomial sum p_i X^(q^i) over F_{q^m}.  Coefficients are
/// dense and normalized: the leading one is nonzero, and the zero
/// polynomial is the empty vector (q-degree -1 by convention here).
/// Composition makes these a non-commutative ring with identity X.
struct QPoly {
    ExtField field;
    std::vector<ExtElem> coeffs;

    explicit QPoly(const ExtField& f) : field(f) {}
    QPoly(const ExtField& f, std::vector<ExtElem> c);

    int qdeg() const { return int(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void normalize();

    static QPoly zero(const ExtField& f) { return QPoly(f); }
    /// The identity polynomial X.
    static QPoly x(const ExtField& f);
    /// c * X^(q^d)
    static QPoly monomial(const ExtField& f, const ExtElem& c, std::uint32_t d);

    bool operator==(const QPoly& o) const;
};

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const ExtElem& s);

/// Evaluation: sum p_i * x^(q^i); F_q-linear in x.
ExtElem qp_eval(const QPoly& p, const ExtElem& x);

/// Composition (P o R)(x) = P(R(x)); q-degrees add.
QPoly qp_compose(const QPoly& p, const QPoly& r);

struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};

/// A = Q o B + R with deg_q R < deg_q B.  B must be nonzero.
QPolyDivision qp_left_divide(const QPoly& a, const QPoly& b);

/// A = B o Q + R with deg_q R < deg_q B; peels a known left factor off a
/// composition, which is what the decoder needs to recover the message
/// polynomial from its key equation.
QPolyDivision qp_left_factor_divide(const QPoly& a, const QPoly& b);

/// Monic linearized polynomial of q-degree dim(span U) vanishing exactly on
/// the F_q-span of U.
QPoly min_qpoly_of_subspace(const ExtField& f, const std::vector<ExtElem>& u);

}  // namespace egmc

#endif
