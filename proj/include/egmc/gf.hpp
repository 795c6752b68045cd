#ifndef EGMC_GF_HPP
#define EGMC_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "egmc/rng.hpp"

namespace egmc {

using fq_elem = std::uint16_t;

/// The base field F_q, q = p^e a prime power <= 2^16.  Elements are the
/// integers 0..q-1, read as base-p digit vectors over the power basis of a
/// fixed modulus.  For e >= 2 the modulus is the lexicographically least
/// monic irreducible of degree e over F_p (coefficient vectors compared as
/// the integer sum c_i * p^i), so a field is fully determined by q.
/// Multiplication and inversion go through log/antilog tables.
class BaseField {
  public:
    explicit BaseField(std::uint32_t q);

    std::uint32_t q() const { return core_->q; }
    std::uint32_t characteristic() const { return core_->p; }
    std::uint32_t degree() const { return core_->e; }
    unsigned bits_per_elem() const { return core_->bits; }

    fq_elem add(fq_elem a, fq_elem b) const;
    fq_elem sub(fq_elem a, fq_elem b) const;
    fq_elem neg(fq_elem a) const;
    fq_elem mul(fq_elem a, fq_elem b) const {
        if (a == 0 || b == 0) return 0;
        const Core& c = *core_;
        return c.exp_tab[c.log_tab[a] + c.log_tab[b]];
    }
    fq_elem inv(fq_elem a) const;
    fq_elem pow(fq_elem a, std::uint64_t n) const;

    fq_elem random(Rng& rng) const { return fq_elem(rng.uniform(q())); }

    bool operator==(const BaseField& o) const { return core_ == o.core_ || q() == o.q(); }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

  private:
    struct Core {
        std::uint32_t q, p, e;
        unsigned bits;
        std::vector<fq_elem> modulus;   // degree-e monic over F_p (empty for e = 1)
        std::vector<fq_elem> log_tab;   // index by element value; log_tab[0] unused
        std::vector<fq_elem> exp_tab;   // size 2(q-1), doubled to skip the mod
    };
    std::shared_ptr<const Core> core_;
};

/// Element of F_{q^m}: m coefficients over F_q in the power basis of the
/// extension modulus.  All arithmetic lives on ExtField.
struct ExtElem {
    std::vector<fq_elem> c;

    bool operator==(const ExtElem& o) const { return c == o.c; }
    bool operator!=(const ExtElem& o) const { return c != o.c; }
};

class ExtField {
  public:
    /// F_{q^m} with the lexicographically least monic irreducible degree-m
    /// modulus over F_q (same comparison rule as BaseField).
    ExtField(const BaseField& base, std::uint32_t m);

    const BaseField& base() const { return core_->base; }
    std::uint32_t m() const { return core_->m; }
    const std::vector<fq_elem>& modulus() const { return core_->modulus; }

    ExtElem zero() const;
    ExtElem one() const;
    /// x^j in the power basis, j < m.
    ExtElem monomial(std::uint32_t j) const;
    ExtElem from_coords(std::vector<fq_elem> c) const;

    bool is_zero(const ExtElem& a) const;
    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul_scalar(const ExtElem& a, fq_elem s) const;
    ExtElem inv(const ExtElem& a) const;
    ExtElem pow(const ExtElem& a, std::uint64_t n) const;

    /// a^(q^i); F_q-linear in a.
    ExtElem frobenius(const ExtElem& a, std::uint64_t i) const;

    /// Sum of all Frobenius images; the result lies in F_q.
    fq_elem trace(const ExtElem& a) const;

    ExtElem random(Rng& rng) const;

    bool operator==(const ExtField& o) const;
    bool operator!=(const ExtField& o) const { return !(*this == o); }

  private:
    struct Core {
        BaseField base;
        std::uint32_t m;
        std::vector<fq_elem> modulus;         // length m+1, monic
        std::vector<fq_elem> reduce_rows;     // row j: x^(m+j) mod f, j < m-1
        std::vector<fq_elem> frob_mat;        // m x m over F_q, column j = coords of (x^j)^q
        std::vector<fq_elem> trace_row;       // trace of each power-basis monomial
        bool pack2;                           // q == 2 fast multiply applies
        std::vector<std::uint64_t> modulus_packed;
        std::vector<std::uint64_t> reduce_rows_packed;
        Core(const BaseField& b, std::uint32_t mm) : base(b), m(mm) {}
    };
    std::shared_ptr<const Core> core_;

    ExtElem apply_fq_matrix(const std::vector<fq_elem>& mat, const ExtElem& a) const;
};

/// Ordered F_q-basis of F_{q^m}, with the change-of-basis matrices between
/// it and the power basis precomputed.
struct Basis {
    ExtField field;
    std::vector<ExtElem> elems;
    std::vector<fq_elem> to_power;    // column j = power coords of elems[j]
    std::vector<fq_elem> from_power;  // inverse of to_power
};

/// Builds a Basis from its elements; throws if they are dependent.
Basis make_basis(const ExtField& ext, std::vector<ExtElem> elems);

/// The power basis (1, x, ..., x^(m-1)).
Basis power_basis(const ExtField& ext);

/// Uniform over ordered bases: sample the change-of-basis matrix until
/// invertible.
Basis random_basis(const ExtField& ext, Rng& rng);

/// Coordinates of x in the basis: x = sum expand(...)[i] * basis.elems[i].
std::vector<fq_elem> expand(const Basis& basis, const ExtElem& x);

/// Inverse of expand.
ExtElem contract(const Basis& basis, const std::vector<fq_elem>& v);

/// The trace-dual basis: trace(elems[i] * dual[j]) = (i == j).
Basis dual_basis(const Basis& basis);

}  // namespace egmc

#endif
