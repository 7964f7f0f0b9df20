#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcc {

/// Number of bits needed to address m distinct values, i.e. ceil(log2(m)).
/// ceil_log2(1) == 0.
inline int ceil_log2(uint64_t m) {
    if (m == 0) throw std::invalid_argument("ceil_log2: m must be positive");
    return m == 1 ? 0 : std::bit_width(m - 1);
}

/// A message payload: a sequence of bits, one byte per bit for simplicity.
class Bits {
public:
    Bits() = default;

    void push(bool b) { v_.push_back(b ? 1 : 0); }
    bool at(size_t i) const { return v_.at(i) != 0; }
    size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    void reserve(size_t n) { v_.reserve(n); }

    /// Append `width` bits of `value`, most significant first.
    void append_uint(uint64_t value, int width) {
        for (int k = width - 1; k >= 0; --k) push(((value >> k) & 1) != 0);
    }

    /// Read `width` bits starting at `pos`, most significant first.
    uint64_t read_uint(size_t pos, int width) const {
        uint64_t value = 0;
        for (int k = 0; k < width; ++k) value = (value << 1) | (at(pos + k) ? 1 : 0);
        return value;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(v_.size());
        for (uint8_t b : v_) s.push_back(b ? '1' : '0');
        return s;
    }

    bool operator==(const Bits& o) const { return v_ == o.v_; }

private:
    std::vector<uint8_t> v_;
};

/// Fixed-width binary label for v in [1, m]: ceil_log2(m) bits, MSB first.
inline Bits encode_label(int v, int m) {
    if (v < 1 || v > m) throw std::out_of_range("encode_label: value out of range");
    Bits b;
    b.append_uint(uint64_t(v - 1), ceil_log2(uint64_t(m)));
    return b;
}

/// Inverse of encode_label.
inline int decode_label(const Bits& bits, size_t pos, int m) {
    int width = ceil_log2(uint64_t(m));
    uint64_t raw = bits.read_uint(pos, width);
    if (raw >= uint64_t(m)) throw std::out_of_range("decode_label: value out of range");
    return int(raw) + 1;
}

}  // namespace tcc
