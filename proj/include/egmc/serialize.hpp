#ifndef EGMC_SERIALIZE_HPP
#define EGMC_SERIALIZE_HPP

#include <cstdint>
#include <vector>

#include "egmc/errors.hpp"
#include "egmc/gf.hpp"
#include "egmc/linalg.hpp"

namespace egmc {

/// Little-endian byte stream helpers plus the field-element bit packing:
/// ceil(log2 q) bits per element, filled LSB-first within each byte.

class ByteWriter {
  public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v) {
        u8(std::uint8_t(v));
        u8(std::uint8_t(v >> 8));
    }
    void u32(std::uint32_t v) {
        u16(std::uint16_t(v));
        u16(std::uint16_t(v >> 16));
    }
    void bytes(const std::uint8_t* p, std::size_t n) { buf_.insert(buf_.end(), p, p + n); }

    /// Packs elements of the given field, flushing to a byte boundary.
    void fq_elems(const BaseField& f, const std::vector<fq_elem>& v);

    const std::vector<std::uint8_t>& data() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

  private:
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
  public:
    ByteReader(const std::uint8_t* p, std::size_t n) : p_(p), n_(n) {}
    explicit ByteReader(const std::vector<std::uint8_t>& v) : p_(v.data()), n_(v.size()) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    void bytes(std::uint8_t* out, std::size_t n);
    std::vector<fq_elem> fq_elems(const BaseField& f, std::size_t count);

    std::size_t remaining() const { return n_ - pos_; }
    void expect_end() const {
        if (pos_ != n_) throw parse_error("trailing bytes in input");
    }

  private:
    const std::uint8_t* p_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

/// Matrix wire format: 4-byte LE rows and cols, then packed entries
/// row-major.
void write_matrix(ByteWriter& w, const MatFq& m);
MatFq read_matrix(ByteReader& r, const BaseField& f);

/// Entries only (shape known from context).
void write_matrix_raw(ByteWriter& w, const MatFq& m);
MatFq read_matrix_raw(ByteReader& r, const BaseField& f, std::uint32_t rows, std::uint32_t cols);

std::size_t packed_size_bytes(const BaseField& f, std::size_t count);

std::uint64_t fnv1a64(const std::uint8_t* p, std::size_t n);

}  // namespace egmc

#endif
