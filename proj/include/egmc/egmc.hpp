#ifndef EGMC_EGMC_HPP
#define EGMC_EGMC_HPP

#include <cstdint>
#include <vector>

#include "egmc/gabidulin.hpp"
#include "egmc/gf.hpp"
#include "egmc/linalg.hpp"
#include "egmc/matrixcode.hpp"
#include "egmc/rng.hpp"

namespace egmc {

struct EgmcParams {
    std::uint32_t q = 2;
    std::uint32_t m = 0;
    std::uint32_t n = 0;  // the encryption schemes instantiate n = m
    std::uint32_t k = 0;
    std::uint32_t l1 = 0;
    std::uint32_t l2 = 0;
    std::uint32_t r = 0;

    std::uint32_t code_dim() const { return k * m; }
    std::uint32_t ambient_dim() const { return (m + l1) * (n + l2); }
    std::uint32_t capacity() const { return (n - k) / 2; }

    /// k <= n <= m, r within decoding capacity, q a prime power.
    void validate() const;

    bool operator==(const EgmcParams& o) const = default;
};

struct EgmcSecretKey {
    EgmcParams params;
    Basis gamma;
    GabidulinCode code;  // evaluation vector g
    MatFq p;             // GL_{m+l1}
    MatFq q;             // GL_{n+l2}
};

struct EgmcPublicCode {
    EgmcParams params;
    MatrixCodeBasis basis;  // dimension k*m in (m+l1) x (n+l2)
};

/// Per-element random blocks of the rows-and-columns masking.
struct RrcBlocks {
    MatFq right;   // m x l2
    MatFq bottom;  // l1 x n
    MatFq corner;  // l1 x l2
};

/// Embeds each basis element as the top-left block beside fresh random
/// blocks, then applies the secret equivalence: P [[A_i, R_i],[R'_i, R''_i]] Q.
MatrixCodeBasis rrc_transform(const MatrixCodeBasis& inner, std::uint32_t l1, std::uint32_t l2,
                              const MatFq& p, const MatFq& q,
                              const std::vector<RrcBlocks>& blocks);
MatrixCodeBasis rrc_transform(const MatrixCodeBasis& inner, std::uint32_t l1, std::uint32_t l2,
                              const MatFq& p, const MatFq& q, Rng& rng);

struct EgmcSample {
    EgmcPublicCode public_code;
    EgmcSecretKey secret_key;
};

/// Draws from the masked-code distribution: random evaluation vector with
/// independent entries, random basis, random GL pair, fresh blocks per basis
/// element.
EgmcSample sample_egmc(const EgmcParams& params, Rng& rng);

/// Structural check of the dual decomposition: every zero-extended element
/// of the inner code's dual, conjugated by the transposed-inverse key pair,
/// must land in dual(pk), and the dual dimension must match
/// m(n-k) + n*l1 + m*l2 + l1*l2.
bool dual_structure_check(const EgmcPublicCode& pk, const EgmcSecretKey& sk);

}  // namespace egmc

#endif
