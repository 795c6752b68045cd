#include "egmc/egmc.hpp"

#include "egmc/errors.hpp"

namespace egmc {

void EgmcParams::validate() const {
    BaseField f(q);  // throws unless q is a prime power in range
    (void)f;
    if (!(k >= 1 && k <= n && n <= m)) throw parameter_error("need 1 <= k <= n <= m");
    if (m > 128) throw parameter_error("extension degree out of range");
    if (r > capacity()) throw parameter_error("r exceeds the decoding capacity (n-k)/2");
}

MatrixCodeBasis rrc_transform(const MatrixCodeBasis& inner, std::uint32_t l1, std::uint32_t l2,
                              const MatFq& p, const MatFq& q,
                              const std::vector<RrcBlocks>& blocks) {
    const BaseField& F = inner.field();
    const std::uint32_t m = inner.rows(), n = inner.cols();
    if (p.rows() != m + l1 || p.cols() != m + l1) throw dimension_error("P must be (m+l1) square");
    if (q.rows() != n + l2 || q.cols() != n + l2) throw dimension_error("Q must be (n+l2) square");
    if (blocks.size() != inner.dim()) throw dimension_error("one block triple per basis element");

    std::vector<MatFq> out;
    out.reserve(inner.dim());
    for (std::uint32_t i = 0; i < inner.dim(); ++i) {
        const RrcBlocks& b = blocks[i];
        if (b.right.rows() != m || b.right.cols() != l2 || b.bottom.rows() != l1 ||
            b.bottom.cols() != n || b.corner.rows() != l1 || b.corner.cols() != l2)
            throw dimension_error("block shape mismatch");
        MatFq e(F, m + l1, n + l2);
        e.paste(0, 0, inner.basis()[i]);
        e.paste(0, n, b.right);
        e.paste(m, 0, b.bottom);
        e.paste(m, n, b.corner);
        out.push_back(p * e * q);
    }
    return MatrixCodeBasis::from_basis(std::move(out));
}

MatrixCodeBasis rrc_transform(const MatrixCodeBasis& inner, std::uint32_t l1, std::uint32_t l2,
                              const MatFq& p, const MatFq& q, Rng& rng) {
    const BaseField& F = inner.field();
    std::vector<RrcBlocks> blocks;
    blocks.reserve(inner.dim());
    for (std::uint32_t i = 0; i < inner.dim(); ++i)
        blocks.push_back({MatFq::random(F, inner.rows(), l2, rng),
                          MatFq::random(F, l1, inner.cols(), rng),
                          MatFq::random(F, l1, l2, rng)});
    return rrc_transform(inner, l1, l2, p, q, blocks);
}

EgmcSample sample_egmc(const EgmcParams& params, Rng& rng) {
    params.validate();
    const BaseField F(params.q);
    const ExtField ext(F, params.m);

    GabidulinCode code = GabidulinCode::random(ext, params.n, params.k, rng);
    Basis gamma = random_basis(ext, rng);
    MatFq p = random_gl(F, params.m + params.l1, rng);
    MatFq q = random_gl(F, params.n + params.l2, rng);

    MatrixCodeBasis inner = expand_code(gamma, code.generator());
    MatrixCodeBasis pub = rrc_transform(inner, params.l1, params.l2, p, q, rng);

    return {EgmcPublicCode{params, std::move(pub)},
            EgmcSecretKey{params, std::move(gamma), std::move(code), std::move(p), std::move(q)}};
}

bool dual_structure_check(const EgmcPublicCode& pk, const EgmcSecretKey& sk) {
    const EgmcParams& pr = pk.params;
    if (!(sk.params == pr)) throw parameter_error("key pair mismatch");
    const std::uint32_t m = pr.m, n = pr.n, k = pr.k, l1 = pr.l1, l2 = pr.l2;

    const MatrixCodeBasis dual_pub = dual_code(pk.basis);
    if (dual_pub.dim() != m * (n - k) + n * l1 + m * l2 + l1 * l2) return false;

    const MatFq pt_inv = invert(sk.p.transpose());
    const MatFq qt_inv = invert(sk.q.transpose());

    const MatrixCodeBasis inner = expand_code(sk.gamma, sk.code.generator());
    const MatrixCodeBasis inner_dual = dual_code(inner);
    for (const auto& b : inner_dual.basis()) {
        MatFq e(pk.basis.field(), m + l1, n + l2);
        e.paste(0, 0, b);
        if (!dual_pub.contains(pt_inv * e * qt_inv)) return false;
    }
    return true;
}

}  // namespace egmc
