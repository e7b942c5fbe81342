#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uic/bigint.hpp"
#include "uic/errors.hpp"

namespace uic {

// Immutable finite sequence of bits. Bit 0 is the first bit of the stream;
// storage is MSB-first within 64-bit words.
class BitString {
public:
    BitString() = default;

    static BitString from_text(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t i) const noexcept
    {
        return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
    }
    bool at(std::size_t i) const;

    std::string to_text() const;

    // Copy of bits [pos, pos + len).
    BitString slice(std::size_t pos, std::size_t len) const;
    BitString flipped(std::size_t i) const;

    std::size_t count_ones() const noexcept;

    friend bool operator==(const BitString& a, const BitString& b) noexcept
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    friend class BitWriter;

    std::vector<std::uint64_t> words_;  // unused tail bits are always zero
    std::size_t size_ = 0;
};

// Append-only builder; finish() hands the bits over as a BitString.
class BitWriter {
public:
    BitWriter() = default;
    explicit BitWriter(const BitString& prefix);

    std::size_t size() const noexcept { return size_; }

    void push_back(bool bit);
    void append_zeros(std::size_t n);
    // Low `n` bits of `value`, most significant first (n <= 64).
    void append_bits(std::uint64_t value, unsigned n);
    // Low `n` bits of `value`, most significant first.
    void append_bits(const BigNat& value, std::uint64_t n);
    void append(const BitString& bits);

    BitString finish() &&;
    BitString snapshot() const;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// Cursor over a BitString. Never mutates the source, which must outlive it.
class BitReader {
public:
    explicit BitReader(const BitString& source) noexcept : source_(&source) {}

    const BitString& source() const noexcept { return *source_; }
    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return source_->size() - pos_; }
    bool at_end() const noexcept { return pos_ == source_->size(); }

    // Next k bits; throws TruncatedError{k, remaining} without advancing.
    BitString read(std::size_t k);
    bool read_bit();
    // Reads k bits and returns the integer '1' followed by those bits, i.e.
    // 2^k + value(bits). This is how trimmed sections are restored.
    BigNat read_with_leading_one(std::size_t k);

    void seek(std::size_t pos);

private:
    const BitString* source_;
    std::size_t pos_ = 0;
};

struct PackedBits {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;

    friend bool operator==(const PackedBits&, const PackedBits&) = default;
};

// MSB-first packing; the final partial byte is zero-padded in its low bits.
PackedBits pack_bytes(const BitString& bits);
// Inverse of pack_bytes; padding past bit_count is ignored. Throws
// std::invalid_argument if the byte count does not match bit_count.
BitString unpack_bytes(std::span<const std::uint8_t> bytes, std::uint64_t bit_count);

}  // namespace uic
