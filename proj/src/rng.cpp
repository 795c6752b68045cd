#include "egmc/rng.hpp"

#include <cstring>
#include <stdexcept>

namespace egmc {

namespace {

inline std::uint32_t rotl(std::uint32_t x, int n) {
    return (x << n) | (x >> (32 - n));
}

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
    a += b; d ^= a; d = rotl(d, 16);
    c += d; b ^= c; b = rotl(b, 12);
    a += b; d ^= a; d = rotl(d, 8);
    c += d; b ^= c; b = rotl(b, 7);
}

inline std::uint32_t load32_le(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
           std::uint32_t(p[3]) << 24;
}

}  // namespace

Rng::Rng(const std::array<std::uint8_t, 32>& seed) {
    static const std::uint8_t sigma[16] = "expand 32-byte k";
    state_[0] = load32_le(sigma);
    state_[1] = load32_le(sigma + 4);
    state_[2] = load32_le(sigma + 8);
    state_[3] = load32_le(sigma + 12);
    for (int i = 0; i < 8; ++i) state_[4 + i] = load32_le(seed.data() + 4 * i);
    // counter (words 12-13) and nonce (14-15) start at zero
}

Rng::Rng(std::uint64_t seed) : Rng([&] {
    std::array<std::uint8_t, 32> s{};
    for (int i = 0; i < 8; ++i) s[i] = std::uint8_t(seed >> (8 * i));
    return s;
}()) {}

Rng Rng::from_hex_seed(const std::string& hex) {
    if (hex.size() != 64) throw std::invalid_argument("seed must be 64 hex characters");
    std::array<std::uint8_t, 32> s{};
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in seed");
    };
    for (int i = 0; i < 32; ++i) s[i] = std::uint8_t(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    return Rng(s);
}

void Rng::refill() {
    std::array<std::uint32_t, 16> x = state_;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) {
        std::uint32_t w = x[i] + state_[i];
        block_[4 * i] = std::uint8_t(w);
        block_[4 * i + 1] = std::uint8_t(w >> 8);
        block_[4 * i + 2] = std::uint8_t(w >> 16);
        block_[4 * i + 3] = std::uint8_t(w >> 24);
    }
    if (++state_[12] == 0) ++state_[13];
    pos_ = 0;
}

std::uint8_t Rng::next_u8() {
    if (pos_ >= 64) refill();
    return block_[pos_++];
}

std::uint32_t Rng::next_u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(next_u8()) << (8 * i);
    return v;
}

std::uint64_t Rng::next_u64() {
    std::uint64_t lo = next_u32();
    return lo | std::uint64_t(next_u32()) << 32;
}

void Rng::fill_bytes(std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = next_u8();
}

std::uint32_t Rng::uniform(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform: bound must be positive");
    if ((bound & (bound - 1)) == 0) return next_u32() & (bound - 1);
    const std::uint64_t span = (std::uint64_t(1) << 32) / bound * bound;
    for (;;) {
        std::uint32_t v = next_u32();
        if (v < span) return v % bound;
    }
}

}  // namespace egmc
