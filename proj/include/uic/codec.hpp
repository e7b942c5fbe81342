#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uic/bigint.hpp"
#include "uic/bitstream.hpp"
#include "uic/errors.hpp"

namespace uic {

struct Decoded {
    BigInt value;
    std::size_t consumed = 0;
};

// A prefix-free code for integers. Implementations are immutable once built
// and safe to share between threads.
class Codec {
public:
    virtual ~Codec() = default;

    virtual std::string name() const = 0;

    // Smallest encodable integer (0 or 1); nullopt when every integer is.
    virtual std::optional<int> domain_min() const { return 1; }
    bool in_domain(const BigInt& n) const;

    BitString encode(const BigInt& n) const;
    void encode_to(BitWriter& out, const BigInt& n) const;

    // Reads one code-word. On failure the reader is left where it was.
    BigInt decode(BitReader& in) const;
    Decoded decode_prefix(const BitString& bits) const;

    // |encode(n)| without materializing the bits.
    std::uint64_t length(const BigInt& n) const;

    // How many code-words have exactly `bits` bits.
    virtual BigNat count_by_length(std::uint64_t bits) const = 0;

protected:
    virtual void do_encode(BitWriter& out, const BigInt& n) const = 0;
    virtual BigInt do_decode(BitReader& in) const = 0;
    virtual std::uint64_t do_length(const BigInt& n) const = 0;

private:
    void check_domain(const BigInt& n) const;
};

using CodecPtr = std::shared_ptr<const Codec>;

// N >= 1 code built from an N >= 0 code: encode(N) = inner.encode(N - 1).
CodecPtr shift1(CodecPtr inner, std::string name = {});

// Code over all integers: z is ranked 0, 1, -1, 2, -2, ... and the rank
// (offset by the inner domain minimum) is encoded with `inner`.
CodecPtr zigzag(CodecPtr inner);

BigNat zigzag_rank(const BigInt& z);
BigInt zigzag_unrank(const BigNat& rank);

class SequenceDomainError : public DomainError {
public:
    SequenceDomainError(const std::string& what, std::size_t index)
        : DomainError(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Concatenated code-words with no separators.
BitString encode_sequence(const Codec& codec, std::span<const BigInt> values);

// With `count`, decodes exactly that many code-words and requires the input to
// be consumed exactly (TrailingBits otherwise). Without it, decodes greedily
// until the input is exhausted.
std::vector<BigInt> decode_sequence(const Codec& codec, const BitString& bits,
                                    std::optional<std::size_t> count = std::nullopt);

}  // namespace uic
