#include "egmc/serialize.hpp"

namespace egmc {

void ByteWriter::fq_elems(const BaseField& f, const std::vector<fq_elem>& v) {
    const unsigned w = f.bits_per_elem();
    std::uint32_t acc = 0;
    unsigned nbits = 0;
    for (fq_elem e : v) {
        if (e >= f.q()) throw parse_error("element out of range for the field");
        acc |= std::uint32_t(e) << nbits;
        nbits += w;
        while (nbits >= 8) {
            u8(std::uint8_t(acc));
            acc >>= 8;
            nbits -= 8;
        }
    }
    if (nbits) u8(std::uint8_t(acc));
}

std::uint8_t ByteReader::u8() {
    if (pos_ >= n_) throw parse_error("input truncated");
    return p_[pos_++];
}

std::uint16_t ByteReader::u16() {
    std::uint16_t lo = u8();
    return std::uint16_t(lo | std::uint16_t(u8()) << 8);
}

std::uint32_t ByteReader::u32() {
    std::uint32_t lo = u16();
    return lo | std::uint32_t(u16()) << 16;
}

void ByteReader::bytes(std::uint8_t* out, std::size_t n) {
    if (pos_ + n > n_) throw parse_error("input truncated");
    std::copy(p_ + pos_, p_ + pos_ + n, out);
    pos_ += n;
}

std::vector<fq_elem> ByteReader::fq_elems(const BaseField& f, std::size_t count) {
    const unsigned w = f.bits_per_elem();
    std::vector<fq_elem> v(count);
    std::uint32_t acc = 0;
    unsigned nbits = 0;
    for (std::size_t i = 0; i < count; ++i) {
        while (nbits < w) {
            acc |= std::uint32_t(u8()) << nbits;
            nbits += 8;
        }
        fq_elem e = fq_elem(acc & ((1u << w) - 1));
        if (e >= f.q()) throw parse_error("packed element out of range");
        v[i] = e;
        acc >>= w;
        nbits -= w;
    }
    if (acc != 0) throw parse_error("nonzero padding bits");
    return v;
}

void write_matrix(ByteWriter& w, const MatFq& m) {
    w.u32(m.rows());
    w.u32(m.cols());
    write_matrix_raw(w, m);
}

MatFq read_matrix(ByteReader& r, const BaseField& f) {
    const std::uint32_t rows = r.u32(), cols = r.u32();
    if (std::uint64_t(rows) * cols > (std::uint64_t(1) << 28)) throw parse_error("matrix too large");
    return read_matrix_raw(r, f, rows, cols);
}

void write_matrix_raw(ByteWriter& w, const MatFq& m) {
    std::vector<fq_elem> v(m.data(), m.data() + std::size_t(m.rows()) * m.cols());
    w.fq_elems(m.field(), v);
}

MatFq read_matrix_raw(ByteReader& r, const BaseField& f, std::uint32_t rows, std::uint32_t cols) {
    const auto v = r.fq_elems(f, std::size_t(rows) * cols);
    MatFq m(f, rows, cols);
    std::copy(v.begin(), v.end(), m.data());
    return m;
}

std::size_t packed_size_bytes(const BaseField& f, std::size_t count) {
    return (count * f.bits_per_elem() + 7) / 8;
}

std::uint64_t fnv1a64(const std::uint8_t* p, std::size_t n) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace egmc
