#include "egmc/qpoly.hpp"

#include "egmc/errors.hpp"

namespace egmc {

QPoly::QPoly(const ExtField& f, std::vector<ExtElem> c) : field(f), coeffs(std::move(c)) {
    normalize();
}

void QPoly::normalize() {
    while (!coeffs.empty() && field.is_zero(coeffs.back())) coeffs.pop_back();
}

QPoly QPoly::x(const ExtField& f) { return QPoly(f, {f.one()}); }

QPoly QPoly::monomial(const ExtField& f, const ExtElem& c, std::uint32_t d) {
    std::vector<ExtElem> v(d + 1, f.zero());
    v[d] = c;
    return QPoly(f, std::move(v));
}

bool QPoly::operator==(const QPoly& o) const { return field == o.field && coeffs == o.coeffs; }

QPoly qp_add(const QPoly& a, const QPoly& b) {
    const ExtField& f = a.field;
    std::vector<ExtElem> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.add(c[i], b.coeffs[i]);
    return QPoly(f, std::move(c));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    const ExtField& f = a.field;
    std::vector<ExtElem> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.sub(c[i], b.coeffs[i]);
    return QPoly(f, std::move(c));
}

QPoly qp_scale(const QPoly& a, const ExtElem& s) {
    const ExtField& f = a.field;
    std::vector<ExtElem> c = a.coeffs;
    for (auto& v : c) v = f.mul(v, s);
    return QPoly(f, std::move(c));
}

ExtElem qp_eval(const QPoly& p, const ExtElem& x) {
    const ExtField& f = p.field;
    ExtElem acc = f.zero();
    ExtElem pw = x;  // x^(q^i), advanced one Frobenius step per term
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (!f.is_zero(p.coeffs[i])) acc = f.add(acc, f.mul(p.coeffs[i], pw));
        if (i + 1 < p.coeffs.size()) pw = f.frobenius(pw, 1);
    }
    return acc;
}

QPoly qp_compose(const QPoly& p, const QPoly& r) {
    const ExtField& f = p.field;
    if (p.is_zero() || r.is_zero()) return QPoly::zero(f);
    // (P o R)_k = sum_{i+j=k} p_i * r_j^(q^i)
    std::vector<ExtElem> c(p.coeffs.size() + r.coeffs.size() - 1, f.zero());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (f.is_zero(p.coeffs[i])) continue;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (f.is_zero(r.coeffs[j])) continue;
            c[i + j] = f.add(c[i + j], f.mul(p.coeffs[i], f.frobenius(r.coeffs[j], i)));
        }
    }
    return QPoly(f, std::move(c));
}

QPolyDivision qp_left_divide(const QPoly& a, const QPoly& b) {
    const ExtField& f = a.field;
    if (b.is_zero()) throw singular_error("division by the zero polynomial");
    QPoly rem = a;
    const int db = b.qdeg();
    const ExtElem lead = b.coeffs[std::size_t(db)];
    std::vector<ExtElem> q(rem.qdeg() >= db ? std::size_t(rem.qdeg() - db + 1) : 0, f.zero());
    while (rem.qdeg() >= db) {
        const int d = rem.qdeg() - db;
        // (c X^(q^d)) o B has leading coefficient c * lead^(q^d)
        const ExtElem c = f.mul(rem.coeffs.back(), f.inv(f.frobenius(lead, std::uint64_t(d))));
        q[std::size_t(d)] = c;
        rem = qp_sub(rem, qp_compose(QPoly::monomial(f, c, std::uint32_t(d)), b));
    }
    return {QPoly(f, std::move(q)), rem};
}

QPolyDivision qp_left_factor_divide(const QPoly& a, const QPoly& b) {
    const ExtField& f = a.field;
    if (b.is_zero()) throw singular_error("division by the zero polynomial");
    QPoly rem = a;
    const int db = b.qdeg();
    const ExtElem lead_inv = f.inv(b.coeffs[std::size_t(db)]);
    const std::uint64_t m = f.m();
    std::vector<ExtElem> q(rem.qdeg() >= db ? std::size_t(rem.qdeg() - db + 1) : 0, f.zero());
    while (rem.qdeg() >= db) {
        const int d = rem.qdeg() - db;
        // B o (c X^(q^d)) has leading coefficient lead * c^(q^db)
        const ExtElem c =
            f.frobenius(f.mul(rem.coeffs.back(), lead_inv), (m - std::uint64_t(db) % m) % m);
        q[std::size_t(d)] = c;
        rem = qp_sub(rem, qp_compose(b, QPoly::monomial(f, c, std::uint32_t(d))));
    }
    return {QPoly(f, std::move(q)), rem};
}

QPoly min_qpoly_of_subspace(const ExtField& f, const std::vector<ExtElem>& u) {
    QPoly p = QPoly::x(f);
    for (const ExtElem& v : u) {
        const ExtElem pv = qp_eval(p, v);
        if (f.is_zero(pv)) continue;  // already annihilated: dependent on the span so far
        // p <- (X^q - pv^(q-1) X) o p
        const ExtElem t = f.pow(pv, f.base().q() - 1);
        QPoly step(f, {f.neg(t), f.one()});
        p = qp_compose(step, p);
    }
    return p;
}

}  // namespace egmc
