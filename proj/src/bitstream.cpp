#include "uic/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "uic/errors.hpp"

namespace uic {

const char* to_string(DecodeErrorKind kind) noexcept
{
    switch (kind) {
    case DecodeErrorKind::truncated: return "Truncated";
    case DecodeErrorKind::malformed: return "Malformed";
    case DecodeErrorKind::trailing_bits: return "TrailingBits";
    }
    return "Unknown";
}

TruncatedError::TruncatedError(std::size_t needed, std::size_t available)
    : DecodeError(DecodeErrorKind::truncated,
                  "Truncated: needed " + std::to_string(needed) + " bits, " +
                      std::to_string(available) + " available"),
      needed_(needed), available_(available)
{
}

std::uint64_t to_u64(const BigNat& n)
{
    std::uint64_t out;
    if (!fits_u64(n, out))
        throw std::overflow_error("integer does not fit in 64 bits");
    return out;
}

BigInt parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("invalid digit in integer '" + std::string(text) + "'");
    BigInt out(std::string(text.substr(i)), 10);
    return negative ? BigInt(-out) : out;
}

double log_2(const BigNat& n)
{
    if (sgn(n) <= 0)
        throw std::domain_error("log of a non-positive integer");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());  // n = mant * 2^exp, mant in [0.5, 1)
    return static_cast<double>(exp) + std::log2(mant);
}

double log_e(const BigNat& n)
{
    if (sgn(n) <= 0)
        throw std::domain_error("log of a non-positive integer");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return static_cast<double>(exp) * std::log(2.0) + std::log(mant);
}

// BitString

BitString BitString::from_text(std::string_view text)
{
    BitWriter w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch != '0' && ch != '1')
            throw ParseError("invalid bit character at index " + std::to_string(i), i);
        w.push_back(ch == '1');
    }
    return std::move(w).finish();
}

bool BitString::at(std::size_t i) const
{
    if (i >= size_)
        throw IndexError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(size_));
    return (*this)[i];
}

std::string BitString::to_text() const
{
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i])
            out[i] = '1';
    return out;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const
{
    if (pos > size_ || len > size_ - pos)
        throw IndexError("slice out of range");
    BitWriter w;
    std::size_t i = pos;
    const std::size_t end = pos + len;
    // word-at-a-time copy in 64-bit chunks
    while (end - i >= 64) {
        const std::size_t word = i >> 6;
        const unsigned off = i & 63;
        std::uint64_t v = words_[word] << off;
        if (off != 0)
            v |= words_[word + 1] >> (64 - off);
        w.append_bits(v, 64);
        i += 64;
    }
    for (; i < end; ++i)
        w.push_back((*this)[i]);
    return std::move(w).finish();
}

BitString BitString::flipped(std::size_t i) const
{
    if (i >= size_)
        throw IndexError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(size_));
    BitString out = *this;
    out.words_[i >> 6] ^= std::uint64_t{1} << (63 - (i & 63));
    return out;
}

std::size_t BitString::count_ones() const noexcept
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

// BitWriter

BitWriter::BitWriter(const BitString& prefix) : words_(prefix.words_), size_(prefix.size_) {}

void BitWriter::push_back(bool bit)
{
    if ((size_ & 63) == 0)
        words_.push_back(0);
    if (bit)
        words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
    ++size_;
}

void BitWriter::append_zeros(std::size_t n)
{
    const std::size_t new_size = size_ + n;
    words_.resize((new_size + 63) / 64, 0);
    size_ = new_size;
}

void BitWriter::append_bits(std::uint64_t value, unsigned n)
{
    if (n == 0)
        return;
    if (n < 64)
        value &= (std::uint64_t{1} << n) - 1;
    const unsigned used = size_ & 63;
    if (used == 0) {
        words_.push_back(value << (64 - n));
    } else {
        const unsigned free = 64 - used;
        if (n <= free) {
            words_.back() |= value << (free - n);
        } else {
            words_.back() |= value >> (n - free);
            words_.push_back(value << (64 - (n - free)));
        }
    }
    size_ += n;
}

void BitWriter::append_bits(const BigNat& value, std::uint64_t n)
{
    std::uint64_t i = n;
    while (i >= 64) {
        std::uint64_t chunk = 0;
        for (unsigned b = 0; b < 64; ++b)
            chunk = (chunk << 1) | (bit_at(value, i - 1 - b) ? 1u : 0u);
        append_bits(chunk, 64);
        i -= 64;
    }
    while (i > 0) {
        --i;
        push_back(bit_at(value, i));
    }
}

void BitWriter::append(const BitString& bits)
{
    const std::size_t full = bits.size_ / 64;
    for (std::size_t k = 0; k < full; ++k)
        append_bits(bits.words_[k], 64);
    const unsigned rest = bits.size_ & 63;
    if (rest != 0)
        append_bits(bits.words_[full] >> (64 - rest), rest);
}

BitString BitWriter::finish() &&
{
    BitString out;
    out.words_ = std::move(words_);
    out.size_ = size_;
    size_ = 0;
    return out;
}

BitString BitWriter::snapshot() const
{
    BitString out;
    out.words_ = words_;
    out.size_ = size_;
    return out;
}

// BitReader

BitString BitReader::read(std::size_t k)
{
    if (k > remaining())
        throw TruncatedError(k, remaining());
    BitString out = source_->slice(pos_, k);
    pos_ += k;
    return out;
}

bool BitReader::read_bit()
{
    if (at_end())
        throw TruncatedError(1, 0);
    return (*source_)[pos_++];
}

BigNat BitReader::read_with_leading_one(std::size_t k)
{
    if (k > remaining())
        throw TruncatedError(k, remaining());
    BigNat out;
    mpz_ptr z = out.get_mpz_t();
    mpz_setbit(z, static_cast<mp_bitcnt_t>(k));
    for (std::size_t b = 0; b < k; ++b)
        if ((*source_)[pos_ + b])
            mpz_setbit(z, static_cast<mp_bitcnt_t>(k - 1 - b));
    pos_ += k;
    return out;
}

void BitReader::seek(std::size_t pos)
{
    if (pos > source_->size())
        throw IndexError("seek past end of bit string");
    pos_ = pos;
}

// packing

PackedBits pack_bytes(const BitString& bits)
{
    PackedBits out;
    out.bit_count = bits.size();
    out.bytes.assign((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            out.bytes[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
    return out;
}

BitString unpack_bytes(std::span<const std::uint8_t> bytes, std::uint64_t bit_count)
{
    if (bytes.size() != (bit_count + 7) / 8)
        throw std::invalid_argument("byte count does not match bit count");
    BitWriter w;
    for (std::uint64_t i = 0; i < bit_count; ++i)
        w.push_back((bytes[i >> 3] >> (7 - (i & 7))) & 1u);
    return std::move(w).finish();
}

}  // namespace uic
