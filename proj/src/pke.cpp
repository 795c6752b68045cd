#include "egmc/pke.hpp"

#include <algorithm>

#include "egmc/errors.hpp"
#include "egmc/serialize.hpp"

namespace egmc {

namespace {

void require_square_instantiation(const EgmcParams& p) {
    p.validate();
    if (p.n != p.m) throw parameter_error("the encryption schemes require n = m");
}

NiederreiterPublicKey make_nied_key(const EgmcParams& params, const MatrixCodeBasis& pub) {
    NiederreiterPublicKey pk;
    pk.params = params;
    const std::uint32_t n_total = params.ambient_dim();
    const std::uint32_t red = n_total - params.code_dim();

    MatFq dual = null_space(pub.unfolded_generator());
    auto ech = echelon(dual);
    if (ech.rank != red) throw std::logic_error("dual dimension mismatch");

    std::vector<bool> is_pivot(n_total, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    bool natural = true;
    for (std::uint32_t i = 0; i < red; ++i)
        if (ech.pivot_cols[i] != params.code_dim() + i) natural = false;

    std::vector<std::uint32_t> order;
    order.reserve(n_total);
    for (std::uint32_t j = 0; j < n_total; ++j)
        if (!is_pivot[j]) order.push_back(j);
    for (auto c : ech.pivot_cols) order.push_back(c);

    pk.t_block = MatFq(pub.field(), red, params.code_dim());
    for (std::uint32_t i = 0; i < red; ++i)
        for (std::uint32_t j = 0; j < params.code_dim(); ++j)
            pk.t_block.set(i, j, ech.mat.at(i, order[j]));
    if (!natural) pk.col_order = std::move(order);
    return pk;
}

std::uint32_t order_at(const NiederreiterPublicKey& pk, std::uint32_t i) {
    return pk.col_order.empty() ? i : pk.col_order[i];
}

}  // namespace

std::vector<fq_elem> NiederreiterPublicKey::syndrome(const std::vector<fq_elem>& word) const {
    if (word.size() != n_total()) throw dimension_error("word length mismatch");
    const BaseField& F = t_block.field();
    const std::uint32_t red = n_red(), K = params.code_dim();
    std::vector<fq_elem> s(red, 0);
    for (std::uint32_t row = 0; row < red; ++row) {
        fq_elem acc = word[order_at(*this, K + row)];
        for (std::uint32_t i = 0; i < K; ++i) {
            const fq_elem w = word[order_at(*this, i)];
            if (w) acc = F.add(acc, F.mul(t_block.at(row, i), w));
        }
        s[row] = acc;
    }
    return s;
}

std::vector<fq_elem> NiederreiterPublicKey::preimage(const std::vector<fq_elem>& syn) const {
    if (syn.size() != n_red()) throw dimension_error("syndrome length mismatch");
    std::vector<fq_elem> word(n_total(), 0);
    for (std::uint32_t i = 0; i < n_red(); ++i) word[order_at(*this, params.code_dim() + i)] = syn[i];
    return word;
}

EgmcKeyPair keygen(const EgmcParams& params, Rng& rng) {
    require_square_instantiation(params);
    EgmcSample s = sample_egmc(params, rng);
    McEliecePublicKey mce{params, s.public_code.basis};
    NiederreiterPublicKey nied = make_nied_key(params, s.public_code.basis);
    return {std::move(mce), std::move(nied), std::move(s.secret_key)};
}

EgmcKeyPair keygen(const EgmcParams& params, const std::array<std::uint8_t, 32>& seed) {
    Rng rng(seed);
    return keygen(params, rng);
}

McElieceCiphertext mce_encrypt_with_error(const McEliecePublicKey& pk,
                                          const std::vector<fq_elem>& mu, const MatFq& error) {
    if (mu.size() != pk.params.code_dim()) throw dimension_error("message length must be k*m");
    const BaseField& F = pk.basis.field();
    MatFq y = error;
    for (std::uint32_t i = 0; i < mu.size(); ++i) {
        if (!mu[i]) continue;
        const MatFq& mi = pk.basis.basis()[i];
        for (std::uint32_t a = 0; a < y.rows(); ++a)
            for (std::uint32_t b = 0; b < y.cols(); ++b)
                y.set(a, b, F.add(y.at(a, b), F.mul(mu[i], mi.at(a, b))));
    }
    return {pk.params, std::move(y)};
}

McElieceCiphertext mce_encrypt(const McEliecePublicKey& pk, const std::vector<fq_elem>& mu,
                               Rng& rng) {
    const EgmcParams& p = pk.params;
    MatFq e = random_rank_r(pk.basis.field(), p.m + p.l1, p.m + p.l2, p.r, rng);
    return mce_encrypt_with_error(pk, mu, e);
}

namespace {

struct UnmaskedDecode {
    MatFq err_top_left;  // Psi_gamma of the decoded error, m x m
    MatFq p_inv, q_inv;
};

/// Shared front end of both decryptions: unscramble, truncate, decode the
/// length-m word.
UnmaskedDecode unmask_and_decode(const EgmcSecretKey& sk, const MatFq& y) {
    const EgmcParams& pr = sk.params;
    MatFq p_inv = invert(sk.p), q_inv = invert(sk.q);
    MatFq unscrambled = p_inv * y * q_inv;
    MatFq top = unscrambled.block(0, 0, pr.m, pr.m);
    std::vector<ExtElem> word = psi_inv(sk.gamma, top);
    auto dec = sk.code.decode(word);
    return {psi(sk.gamma, dec.error), std::move(p_inv), std::move(q_inv)};
}

/// Positions of the masked error that the decoder cannot see: everything
/// outside the top-left m x m block, in a fixed order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> hidden_positions(const EgmcParams& pr) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
    pos.reserve(pr.ambient_dim() - pr.m * pr.m);
    for (std::uint32_t u = 0; u < pr.m + pr.l1; ++u)
        for (std::uint32_t v = 0; v < pr.m + pr.l2; ++v)
            if (u >= pr.m || v >= pr.m) pos.emplace_back(u, v);
    return pos;
}

MatFq embed_known_error(const BaseField& F, const EgmcParams& pr, const MatFq& err_tl) {
    MatFq e(F, pr.m + pr.l1, pr.m + pr.l2);
    e.paste(0, 0, err_tl);
    return e;
}

}  // namespace

std::vector<fq_elem> mce_decrypt(const EgmcSecretKey& sk, const McEliecePublicKey& pk,
                                 const McElieceCiphertext& ct) {
    const EgmcParams& pr = sk.params;
    if (!(pk.params == pr) || !(ct.params == pr)) throw parameter_error("key/ciphertext mismatch");
    const BaseField& F = pk.basis.field();
    const std::uint32_t K = pr.code_dim(), n_amb = pr.ambient_dim();

    UnmaskedDecode um = unmask_and_decode(sk, ct.y);
    const auto hidden = hidden_positions(pr);
    const std::uint32_t nu = std::uint32_t(hidden.size());

    // Entrywise system over the message and the hidden masked-error entries:
    //   Y = sum mu_i M_i + P (E_known + E_hidden) Q.
    const MatFq known = sk.p * embed_known_error(F, pr, um.err_top_left) * sk.q;
    MatFq a(F, n_amb, K + nu);
    MatFq b(F, n_amb, 1);
    for (std::uint32_t u = 0; u < pr.m + pr.l1; ++u)
        for (std::uint32_t v = 0; v < pr.m + pr.l2; ++v) {
            const std::uint32_t row = u * (pr.m + pr.l2) + v;
            b.set(row, 0, F.sub(ct.y.at(u, v), known.at(u, v)));
            for (std::uint32_t i = 0; i < K; ++i) a.set(row, i, pk.basis.basis()[i].at(u, v));
            for (std::uint32_t h = 0; h < nu; ++h)
                a.set(row, K + h, F.mul(sk.p.at(u, hidden[h].first), sk.q.at(hidden[h].second, v)));
        }

    std::vector<fq_elem> mu(K, 0);
    try {
        SolveResult sol = solve(a, b);
        for (std::uint32_t i = 0; i < K; ++i) mu[i] = sol.x.at(i, 0);
    } catch (const no_solution_error&) {
        throw verify_error("ciphertext inconsistent with the decoded error");
    }

    MatFq residual = ct.y;
    for (std::uint32_t i = 0; i < K; ++i) {
        if (!mu[i]) continue;
        const MatFq& mi = pk.basis.basis()[i];
        for (std::uint32_t u = 0; u < residual.rows(); ++u)
            for (std::uint32_t v = 0; v < residual.cols(); ++v)
                residual.set(u, v, F.sub(residual.at(u, v), F.mul(mu[i], mi.at(u, v))));
    }
    if (rank(residual) > pr.r) throw verify_error("recovered error exceeds rank r");
    return mu;
}

std::vector<fq_elem> nied_sample_plaintext(const EgmcParams& params, Rng& rng) {
    require_square_instantiation(params);
    BaseField F(params.q);
    return unfold(random_rank_r(F, params.m + params.l1, params.m + params.l2, params.r, rng));
}

NiederreiterCiphertext nied_encrypt(const NiederreiterPublicKey& pk,
                                    const std::vector<fq_elem>& mu) {
    const EgmcParams& pr = pk.params;
    if (mu.size() != pr.ambient_dim()) throw dimension_error("plaintext length mismatch");
    const BaseField& F = pk.t_block.field();
    if (rank(fold(F, mu, pr.m + pr.l1)) > pr.r)
        throw rank_too_high_error("plaintext rank exceeds r");
    return {pr, pk.syndrome(mu)};
}

std::vector<fq_elem> nied_decrypt(const EgmcSecretKey& sk, const NiederreiterPublicKey& pk,
                                  const NiederreiterCiphertext& ct) {
    const EgmcParams& pr = sk.params;
    if (!(pk.params == pr) || !(ct.params == pr)) throw parameter_error("key/ciphertext mismatch");
    const BaseField& F = pk.t_block.field();
    if (ct.syndrome.size() != pk.n_red()) throw dimension_error("syndrome length mismatch");

    const std::vector<fq_elem> ybar = pk.preimage(ct.syndrome);
    const MatFq y = fold(F, ybar, pr.m + pr.l1);

    UnmaskedDecode um = unmask_and_decode(sk, y);
    const auto hidden = hidden_positions(pr);
    const std::uint32_t nu = std::uint32_t(hidden.size());
    const std::uint32_t red = pk.n_red();

    // Syndrome equations over the hidden entries of the unscrambled error:
    //   c = H unfold(P (E_known + E_hidden) Q).
    const MatFq known = sk.p * embed_known_error(F, pr, um.err_top_left) * sk.q;
    const std::vector<fq_elem> syn_known = pk.syndrome(unfold(known));

    MatFq a(F, red, nu);
    MatFq b(F, red, 1);
    for (std::uint32_t s = 0; s < red; ++s)
        b.set(s, 0, F.sub(ct.syndrome[s], syn_known[s]));
    for (std::uint32_t h = 0; h < nu; ++h) {
        // P e_uv Q is the outer product of column u of P with row v of Q
        MatFq unit(F, pr.m + pr.l1, pr.m + pr.l2);
        for (std::uint32_t a2 = 0; a2 < pr.m + pr.l1; ++a2) {
            const fq_elem pa = sk.p.at(a2, hidden[h].first);
            if (!pa) continue;
            for (std::uint32_t b2 = 0; b2 < pr.m + pr.l2; ++b2)
                unit.set(a2, b2, F.mul(pa, sk.q.at(hidden[h].second, b2)));
        }
        const auto syn = pk.syndrome(unfold(unit));
        for (std::uint32_t s = 0; s < red; ++s) a.set(s, h, syn[s]);
    }

    MatFq full = known;
    try {
        SolveResult sol = solve(a, b);
        for (std::uint32_t h = 0; h < nu; ++h) {
            const fq_elem val = sol.x.at(h, 0);
            if (!val) continue;
            for (std::uint32_t a2 = 0; a2 < pr.m + pr.l1; ++a2) {
                const fq_elem pa = sk.p.at(a2, hidden[h].first);
                if (!pa) continue;
                for (std::uint32_t b2 = 0; b2 < pr.m + pr.l2; ++b2)
                    full.set(a2, b2,
                             F.add(full.at(a2, b2),
                                   F.mul(F.mul(pa, val), sk.q.at(hidden[h].second, b2))));
            }
        }
    } catch (const no_solution_error&) {
        throw verify_error("syndrome inconsistent with the decoded error");
    }

    std::vector<fq_elem> mu = unfold(full);
    if (rank(fold(F, mu, pr.m + pr.l1)) > pr.r) throw verify_error("recovered word exceeds rank r");
    if (pk.syndrome(mu) != ct.syndrome) throw verify_error("syndrome check failed");
    return mu;
}

// --- wire formats -----------------------------------------------------------

namespace {

constexpr std::uint8_t kMagic[4] = {'E', 'G', 'M', 'C'};
constexpr std::uint8_t kVersion = 1;

void write_key_header(ByteWriter& w, FileKind kind, const EgmcParams& p) {
    w.bytes(kMagic, 4);
    w.u8(kVersion);
    w.u8(std::uint8_t(kind));
    w.u8(Rng::kPrfId);
    w.u16(std::uint16_t(p.q));
    w.u16(std::uint16_t(p.m));
    w.u16(std::uint16_t(p.k));
    w.u16(std::uint16_t(p.l1));
    w.u16(std::uint16_t(p.l2));
    w.u16(std::uint16_t(p.r));
}

void read_magic(ByteReader& r) {
    std::uint8_t m[4];
    r.bytes(m, 4);
    if (!std::equal(m, m + 4, kMagic)) throw parse_error("bad magic");
}

EgmcParams read_key_header(ByteReader& r, FileKind expected) {
    read_magic(r);
    if (r.u8() != kVersion) throw parse_error("unsupported version");
    if (r.u8() != std::uint8_t(expected)) throw parse_error("unexpected file kind");
    if (r.u8() != Rng::kPrfId) throw parse_error("unsupported expansion id");
    EgmcParams p;
    p.q = r.u16();
    p.m = r.u16();
    p.n = p.m;
    p.k = r.u16();
    p.l1 = r.u16();
    p.l2 = r.u16();
    p.r = r.u16();
    require_square_instantiation(p);
    return p;
}

}  // namespace

std::size_t mce_public_key_payload_bytes(const EgmcParams& p) {
    BaseField f(p.q);
    return packed_size_bytes(f, std::size_t(p.code_dim()) * p.ambient_dim());
}

std::size_t nied_public_key_payload_bytes(const EgmcParams& p) {
    BaseField f(p.q);
    return packed_size_bytes(
        f, std::size_t(p.ambient_dim() - p.code_dim()) * p.code_dim());
}

std::size_t mce_ciphertext_payload_bytes(const EgmcParams& p) {
    BaseField f(p.q);
    return packed_size_bytes(f, p.ambient_dim());
}

std::size_t nied_ciphertext_payload_bytes(const EgmcParams& p) {
    BaseField f(p.q);
    return packed_size_bytes(f, p.ambient_dim() - p.code_dim());
}

std::vector<std::uint8_t> serialize(const McEliecePublicKey& pk) {
    ByteWriter w;
    write_key_header(w, FileKind::mce_public_key, pk.params);
    std::vector<fq_elem> all;
    all.reserve(std::size_t(pk.params.code_dim()) * pk.params.ambient_dim());
    for (const auto& m : pk.basis.basis())
        all.insert(all.end(), m.data(), m.data() + std::size_t(m.rows()) * m.cols());
    w.fq_elems(pk.basis.field(), all);
    return w.take();
}

McEliecePublicKey deserialize_mce_public_key(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    EgmcParams p = read_key_header(r, FileKind::mce_public_key);
    BaseField f(p.q);
    const std::uint32_t rows = p.m + p.l1, cols = p.m + p.l2;
    const auto all = r.fq_elems(f, std::size_t(p.code_dim()) * rows * cols);
    r.expect_end();
    std::vector<MatFq> mats;
    mats.reserve(p.code_dim());
    for (std::uint32_t i = 0; i < p.code_dim(); ++i) {
        MatFq m(f, rows, cols);
        std::copy(all.begin() + std::size_t(i) * rows * cols,
                  all.begin() + std::size_t(i + 1) * rows * cols, m.data());
        mats.push_back(std::move(m));
    }
    return {p, MatrixCodeBasis::from_basis(std::move(mats))};
}

std::vector<std::uint8_t> serialize(const NiederreiterPublicKey& pk) {
    ByteWriter w;
    write_key_header(w, FileKind::nied_public_key, pk.params);
    if (pk.col_order.empty()) {
        w.u8(0);
    } else {
        w.u8(1);
        for (auto c : pk.col_order) w.u16(std::uint16_t(c));
    }
    write_matrix_raw(w, pk.t_block);
    return w.take();
}

NiederreiterPublicKey deserialize_nied_public_key(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    EgmcParams p = read_key_header(r, FileKind::nied_public_key);
    BaseField f(p.q);
    NiederreiterPublicKey pk;
    pk.params = p;
    const std::uint8_t flag = r.u8();
    if (flag > 1) throw parse_error("bad permutation flag");
    if (flag) {
        pk.col_order.resize(p.ambient_dim());
        std::vector<bool> seen(p.ambient_dim(), false);
        for (auto& c : pk.col_order) {
            c = r.u16();
            if (c >= p.ambient_dim() || seen[c]) throw parse_error("invalid permutation");
            seen[c] = true;
        }
    }
    pk.t_block = read_matrix_raw(r, f, p.ambient_dim() - p.code_dim(), p.code_dim());
    r.expect_end();
    return pk;
}

std::vector<std::uint8_t> serialize(const EgmcSecretKey& sk) {
    ByteWriter w;
    write_key_header(w, FileKind::secret_key, sk.params);
    std::vector<fq_elem> coords;
    coords.reserve(std::size_t(sk.params.m) * (sk.params.m + sk.params.n));
    for (const auto& e : sk.gamma.elems) coords.insert(coords.end(), e.c.begin(), e.c.end());
    for (const auto& e : sk.code.eval_points()) coords.insert(coords.end(), e.c.begin(), e.c.end());
    w.fq_elems(sk.gamma.field.base(), coords);
    write_matrix(w, sk.p);
    write_matrix(w, sk.q);
    return w.take();
}

EgmcSecretKey deserialize_secret_key(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    EgmcParams p = read_key_header(r, FileKind::secret_key);
    BaseField f(p.q);
    ExtField ext(f, p.m);
    const auto coords = r.fq_elems(f, std::size_t(p.m) * (p.m + p.n));
    std::vector<ExtElem> gamma_elems, g;
    for (std::uint32_t i = 0; i < p.m; ++i)
        gamma_elems.push_back(ext.from_coords({coords.begin() + std::size_t(i) * p.m,
                                               coords.begin() + std::size_t(i + 1) * p.m}));
    for (std::uint32_t i = p.m; i < p.m + p.n; ++i)
        g.push_back(ext.from_coords({coords.begin() + std::size_t(i) * p.m,
                                     coords.begin() + std::size_t(i + 1) * p.m}));
    MatFq pm = read_matrix(r, f);
    MatFq qm = read_matrix(r, f);
    r.expect_end();
    if (pm.rows() != p.m + p.l1 || pm.cols() != p.m + p.l1 || qm.rows() != p.n + p.l2 ||
        qm.cols() != p.n + p.l2)
        throw parse_error("secret key matrix shape mismatch");
    if (rank(pm) != pm.rows() || rank(qm) != qm.rows())
        throw parse_error("secret key matrices are singular");
    return {p, make_basis(ext, std::move(gamma_elems)),
            GabidulinCode(ext, p.n, p.k, std::move(g)), std::move(pm), std::move(qm)};
}

std::vector<std::uint8_t> serialize(const McElieceCiphertext& ct) {
    ByteWriter w;
    w.bytes(kMagic, 4);
    w.u8(std::uint8_t(FileKind::mce_ciphertext));
    write_matrix_raw(w, ct.y);
    return w.take();
}

McElieceCiphertext deserialize_mce_ciphertext(const std::vector<std::uint8_t>& bytes,
                                              const EgmcParams& params) {
    ByteReader r(bytes);
    read_magic(r);
    if (r.u8() != std::uint8_t(FileKind::mce_ciphertext)) throw parse_error("unexpected file kind");
    BaseField f(params.q);
    MatFq y = read_matrix_raw(r, f, params.m + params.l1, params.m + params.l2);
    r.expect_end();
    return {params, std::move(y)};
}

std::vector<std::uint8_t> serialize(const NiederreiterCiphertext& ct) {
    ByteWriter w;
    w.bytes(kMagic, 4);
    w.u8(std::uint8_t(FileKind::nied_ciphertext));
    BaseField f(ct.params.q);
    w.fq_elems(f, ct.syndrome);
    return w.take();
}

NiederreiterCiphertext deserialize_nied_ciphertext(const std::vector<std::uint8_t>& bytes,
                                                   const EgmcParams& params) {
    ByteReader r(bytes);
    read_magic(r);
    if (r.u8() != std::uint8_t(FileKind::nied_ciphertext)) throw parse_error("unexpected file kind");
    BaseField f(params.q);
    auto syn = r.fq_elems(f, params.ambient_dim() - params.code_dim());
    r.expect_end();
    return {params, std::move(syn)};
}

std::vector<std::uint8_t> serialize_matrix_code(const MatrixCodeBasis& code) {
    ByteWriter w;
    w.bytes(kMagic, 4);
    w.u8(kVersion);
    w.u8(std::uint8_t(FileKind::matrix_code));
    w.u16(std::uint16_t(code.field().q()));
    w.u16(std::uint16_t(code.rows()));
    w.u16(std::uint16_t(code.cols()));
    w.u32(code.dim());
    for (const auto& m : code.basis()) write_matrix(w, m);
    return w.take();
}

MatrixCodeBasis deserialize_matrix_code(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    read_magic(r);
    if (r.u8() != kVersion) throw parse_error("unsupported version");
    if (r.u8() != std::uint8_t(FileKind::matrix_code)) throw parse_error("unexpected file kind");
    BaseField f(r.u16());
    const std::uint32_t rows = r.u16(), cols = r.u16(), dim = r.u32();
    if (dim == 0 || std::uint64_t(dim) > std::uint64_t(rows) * cols)
        throw parse_error("implausible code dimension");
    std::vector<MatFq> mats;
    mats.reserve(dim);
    for (std::uint32_t i = 0; i < dim; ++i) {
        MatFq m = read_matrix(r, f);
        if (m.rows() != rows || m.cols() != cols) throw parse_error("basis element shape mismatch");
        mats.push_back(std::move(m));
    }
    r.expect_end();
    return MatrixCodeBasis::from_basis(std::move(mats));
}

std::vector<std::uint8_t> serialize_plaintext_record(const EgmcParams& params,
                                                     const std::vector<fq_elem>& mu) {
    ByteWriter w;
    w.bytes(kMagic, 4);
    w.u8(std::uint8_t(FileKind::plaintext_record));
    BaseField f(params.q);
    w.fq_elems(f, mu);
    return w.take();
}

std::vector<fq_elem> deserialize_plaintext_record(const std::vector<std::uint8_t>& bytes,
                                                  const EgmcParams& params) {
    ByteReader r(bytes);
    read_magic(r);
    if (r.u8() != std::uint8_t(FileKind::plaintext_record)) throw parse_error("unexpected file kind");
    BaseField f(params.q);
    auto mu = r.fq_elems(f, params.ambient_dim());
    r.expect_end();
    return mu;
}

std::optional<FileKind> peek_file_kind(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 6 || !std::equal(bytes.begin(), bytes.begin() + 4, kMagic))
        return std::nullopt;
    const std::uint8_t b4 = bytes[4];
    if (b4 == std::uint8_t(FileKind::mce_ciphertext) ||
        b4 == std::uint8_t(FileKind::nied_ciphertext) ||
        b4 == std::uint8_t(FileKind::plaintext_record))
        return FileKind(b4);
    const std::uint8_t b5 = bytes[5];
    if (b4 == kVersion &&
        (b5 == std::uint8_t(FileKind::mce_public_key) ||
         b5 == std::uint8_t(FileKind::nied_public_key) ||
         b5 == std::uint8_t(FileKind::secret_key) || b5 == std::uint8_t(FileKind::matrix_code)))
        return FileKind(b5);
    return std::nullopt;
}

}  // namespace egmc
