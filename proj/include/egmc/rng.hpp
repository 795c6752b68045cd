#ifndef EGMC_RNG_HPP
#define EGMC_RNG_HPP

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace egmc {

/// Deterministic random generator: a ChaCha20 keystream keyed by a
/// 32-byte seed.  The same seed always yields the same stream on every
/// platform, which is what key generation and the test vectors rely on.
/// Identifier 0x01 in serialized headers refers to this expansion.
class Rng {
  public:
    static constexpr std::uint8_t kPrfId = 0x01;

    explicit Rng(const std::array<std::uint8_t, 32>& seed);
    explicit Rng(std::uint64_t seed);  // seed bytes = LE word, zero padded

    static Rng from_hex_seed(const std::string& hex);  // 64 hex chars

    std::uint8_t next_u8();
    std::uint32_t next_u32();
    std::uint64_t next_u64();
    void fill_bytes(std::uint8_t* out, std::size_t n);

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint32_t uniform(std::uint32_t bound);

  private:
    void refill();

    std::array<std::uint32_t, 16> state_{};
    std::array<std::uint8_t, 64> block_{};
    std::size_t pos_ = 64;
};

}  // namespace egmc

#endif
