#include "egmc/gabidulin.hpp"

#include "egmc/errors.hpp"

namespace egmc {

GabidulinCode::GabidulinCode(const ExtField& ext, std::uint32_t n, std::uint32_t k,
                             std::vector<ExtElem> g)
    : ext_(ext), n_(n), k_(k), g_(std::move(g)) {
    if (!(k >= 1 && k <= n && n <= ext.m())) throw parameter_error("need 1 <= k <= n <= m");
    if (g_.size() != n) throw dimension_error("evaluation vector length mismatch");
    if (rank_weight(ext_, g_) != n)
        throw parameter_error("evaluation points must be F_q-linearly independent");
}

GabidulinCode GabidulinCode::random(const ExtField& ext, std::uint32_t n, std::uint32_t k,
                                    Rng& rng) {
    for (;;) {
        std::vector<ExtElem> g;
        g.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) g.push_back(ext.random(rng));
        if (rank_weight(ext, g) == n) return GabidulinCode(ext, n, k, std::move(g));
    }
}

MatExt GabidulinCode::generator() const {
    MatExt gen(ext_, k_, n_);
    std::vector<ExtElem> row = g_;
    for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) gen.set(i, j, row[j]);
        if (i + 1 < k_)
            for (auto& v : row) v = ext_.frobenius(v, 1);
    }
    return gen;
}

std::vector<ExtElem> GabidulinCode::encode(const std::vector<ExtElem>& message) const {
    if (message.size() != k_) throw dimension_error("message must have k coefficients");
    std::vector<ExtElem> c(n_, ext_.zero());
    std::vector<ExtElem> pw = g_;  // g^(q^i), stepped once per row
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (!ext_.is_zero(message[i]))
            for (std::uint32_t j = 0; j < n_; ++j)
                c[j] = ext_.add(c[j], ext_.mul(message[i], pw[j]));
        if (i + 1 < k_)
            for (auto& v : pw) v = ext_.frobenius(v, 1);
    }
    return c;
}

GabidulinCode::Decoded GabidulinCode::decode(const std::vector<ExtElem>& y) const {
    if (y.size() != n_) throw dimension_error("word length mismatch");
    const std::uint32_t t = capacity();
    const std::uint32_t nn = k_ + t;     // numerator coefficients, q-degree < k + t
    const std::uint32_t nv = t + 1;      // locator coefficients, q-degree <= t

    // Interpolation system: N(g_i) - V(y_i) = 0 for every coordinate.
    MatExt sys(ext_, n_, nn + nv);
    std::vector<ExtElem> gp = g_, yp = y;
    for (std::uint32_t j = 0; j < std::max(nn, nv); ++j) {
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (j < nn) sys.set(i, j, gp[i]);
            if (j < nv) sys.set(i, nn + j, ext_.neg(yp[i]));
        }
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (j + 1 < nn) gp[i] = ext_.frobenius(gp[i], 1);
            if (j + 1 < nv) yp[i] = ext_.frobenius(yp[i], 1);
        }
    }

    MatExt null = null_space_ext(sys);

    auto try_candidate = [&](const std::vector<ExtElem>& cand) -> std::optional<Decoded> {
        std::vector<ExtElem> vc(cand.begin() + nn, cand.end());
        QPoly v(ext_, std::move(vc));
        if (v.is_zero()) return std::nullopt;
        QPoly num(ext_, std::vector<ExtElem>(cand.begin(), cand.begin() + nn));
        auto div = qp_left_factor_divide(num, v);
        if (!div.remainder.is_zero()) return std::nullopt;
        if (div.quotient.qdeg() >= int(k_)) return std::nullopt;
        std::vector<ExtElem> msg = div.quotient.coeffs;
        msg.resize(k_, ext_.zero());
        std::vector<ExtElem> cw = encode(msg);
        std::vector<ExtElem> err(n_, ext_.zero());
        for (std::uint32_t i = 0; i < n_; ++i) err[i] = ext_.sub(y[i], cw[i]);
        if (rank_weight(ext_, err) > t) return std::nullopt;
        return Decoded{std::move(msg), std::move(err)};
    };

    std::vector<ExtElem> sum(nn + nv, ext_.zero());
    for (std::uint32_t r = 0; r < null.rows(); ++r) {
        std::vector<ExtElem> cand;
        cand.reserve(nn + nv);
        for (std::uint32_t j = 0; j < nn + nv; ++j) {
            cand.push_back(null.at(r, j));
            sum[j] = ext_.add(sum[j], null.at(r, j));
        }
        if (auto d = try_candidate(cand)) return *d;
    }
    if (null.rows() > 1)
        if (auto d = try_candidate(sum)) return *d;
    throw decoding_failure("no codeword within the decoding radius");
}

}  // namespace egmc
