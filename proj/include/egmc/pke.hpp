#ifndef EGMC_PKE_HPP
#define EGMC_PKE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "egmc/egmc.hpp"

namespace egmc {

/// Both encryption schemes share the same key material: the McEliece key
/// publishes a basis of the masked code, the Niederreiter key a systematic
/// parity-check matrix of the same code.

struct McEliecePublicKey {
    EgmcParams params;
    MatrixCodeBasis basis;  // k*m matrices of size (m+l1) x (m+l2)
};

struct NiederreiterPublicKey {
    EgmcParams params;
    /// Parity check in systematic form [T | I] after moving the pivot
    /// columns to the back; only the (N-K) x K block T is stored.
    MatFq t_block;
    /// col_order[i] = original coordinate sitting at systematic position i;
    /// empty when the natural order is already systematic.
    std::vector<std::uint32_t> col_order;

    std::uint32_t n_total() const { return params.ambient_dim(); }
    std::uint32_t n_red() const { return params.ambient_dim() - params.code_dim(); }

    /// Syndrome of an arbitrary word (length N).
    std::vector<fq_elem> syndrome(const std::vector<fq_elem>& word) const;
    /// Some word with the given syndrome (zero on the information positions).
    std::vector<fq_elem> preimage(const std::vector<fq_elem>& syn) const;
};

struct EgmcKeyPair {
    McEliecePublicKey pk_mce;
    NiederreiterPublicKey pk_nied;
    EgmcSecretKey sk;
};

/// Deterministic from the seed; params must satisfy n = m.
EgmcKeyPair keygen(const EgmcParams& params, const std::array<std::uint8_t, 32>& seed);
EgmcKeyPair keygen(const EgmcParams& params, Rng& rng);

struct McElieceCiphertext {
    EgmcParams params;
    MatFq y;  // (m+l1) x (m+l2)
};

struct NiederreiterCiphertext {
    EgmcParams params;
    std::vector<fq_elem> syndrome;  // length N - K
};

McElieceCiphertext mce_encrypt(const McEliecePublicKey& pk, const std::vector<fq_elem>& mu,
                               Rng& rng);
/// Test hook: encrypt with a caller-chosen error matrix.
McElieceCiphertext mce_encrypt_with_error(const McEliecePublicKey& pk,
                                          const std::vector<fq_elem>& mu, const MatFq& error);

/// Recovers mu; throws decoding_failure / verify_error on malformed input.
std::vector<fq_elem> mce_decrypt(const EgmcSecretKey& sk, const McEliecePublicKey& pk,
                                 const McElieceCiphertext& ct);

/// mu has length N with rank(Fold(mu)) <= r.
NiederreiterCiphertext nied_encrypt(const NiederreiterPublicKey& pk,
                                    const std::vector<fq_elem>& mu);
/// KEM-style plaintext: a uniform rank-r word.
std::vector<fq_elem> nied_sample_plaintext(const EgmcParams& params, Rng& rng);

std::vector<fq_elem> nied_decrypt(const EgmcSecretKey& sk, const NiederreiterPublicKey& pk,
                                  const NiederreiterCiphertext& ct);

// --- wire formats -----------------------------------------------------------
//
// Every file starts with magic "EGMC".  Keys continue with version, kind,
// prf id and the parameter block (q, m, k, l1, l2, r as 16-bit LE words);
// ciphertexts carry just a scheme byte, their parameters travel with the
// keys.  Payload packing follows the field-element encoding.

enum class FileKind : std::uint8_t {
    mce_public_key = 1,
    nied_public_key = 2,
    secret_key = 3,
    mce_ciphertext = 4,
    nied_ciphertext = 5,
    matrix_code = 6,
    plaintext_record = 7,
};

std::vector<std::uint8_t> serialize(const McEliecePublicKey& pk);
std::vector<std::uint8_t> serialize(const NiederreiterPublicKey& pk);
std::vector<std::uint8_t> serialize(const EgmcSecretKey& sk);
std::vector<std::uint8_t> serialize(const McElieceCiphertext& ct);
std::vector<std::uint8_t> serialize(const NiederreiterCiphertext& ct);

McEliecePublicKey deserialize_mce_public_key(const std::vector<std::uint8_t>& bytes);
NiederreiterPublicKey deserialize_nied_public_key(const std::vector<std::uint8_t>& bytes);
EgmcSecretKey deserialize_secret_key(const std::vector<std::uint8_t>& bytes);
/// Ciphertexts do not carry parameters; the caller supplies them.
McElieceCiphertext deserialize_mce_ciphertext(const std::vector<std::uint8_t>& bytes,
                                              const EgmcParams& params);
NiederreiterCiphertext deserialize_nied_ciphertext(const std::vector<std::uint8_t>& bytes,
                                                   const EgmcParams& params);

std::vector<std::uint8_t> serialize_matrix_code(const MatrixCodeBasis& code);
MatrixCodeBasis deserialize_matrix_code(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> serialize_plaintext_record(const EgmcParams& params,
                                                     const std::vector<fq_elem>& mu);
std::vector<fq_elem> deserialize_plaintext_record(const std::vector<std::uint8_t>& bytes,
                                                  const EgmcParams& params);

std::optional<FileKind> peek_file_kind(const std::vector<std::uint8_t>& bytes);

/// Payload sizes implied by the parameters (headers excluded).
std::size_t mce_public_key_payload_bytes(const EgmcParams& p);
std::size_t nied_public_key_payload_bytes(const EgmcParams& p);
std::size_t mce_ciphertext_payload_bytes(const EgmcParams& p);
std::size_t nied_ciphertext_payload_bytes(const EgmcParams& p);

}  // namespace egmc

#endif
