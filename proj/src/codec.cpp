#include "uic/codec.hpp"

#include <algorithm>
#include <utility>

namespace uic {

bool Codec::in_domain(const BigInt& n) const
{
    const auto lo = domain_min();
    return !lo || n >= *lo;
}

void Codec::check_domain(const BigInt& n) const
{
    if (!in_domain(n))
        throw DomainError(name() + ": " + to_decimal(n) + " is below the domain minimum " +
                          std::to_string(*domain_min()));
}

BitString Codec::encode(const BigInt& n) const
{
    BitWriter w;
    encode_to(w, n);
    return std::move(w).finish();
}

void Codec::encode_to(BitWriter& out, const BigInt& n) const
{
    check_domain(n);
    do_encode(out, n);
}

BigInt Codec::decode(BitReader& in) const
{
    const std::size_t start = in.position();
    try {
        return do_decode(in);
    } catch (...) {
        in.seek(start);
        throw;
    }
}

Decoded Codec::decode_prefix(const BitString& bits) const
{
    BitReader r(bits);
    BigInt v = decode(r);
    return {std::move(v), r.position()};
}

std::uint64_t Codec::length(const BigInt& n) const
{
    check_domain(n);
    return do_length(n);
}

namespace {

class Shift1Codec final : public Codec {
public:
    Shift1Codec(CodecPtr inner, std::string name) : inner_(std::move(inner)), name_(std::move(name))
    {
        if (name_.empty())
            name_ = "shift1(" + inner_->name() + ")";
    }

    std::string name() const override { return name_; }
    BigNat count_by_length(std::uint64_t bits) const override { return inner_->count_by_length(bits); }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override { inner_->encode_to(out, n - 1); }
    BigInt do_decode(BitReader& in) const override { return inner_->decode(in) + 1; }
    std::uint64_t do_length(const BigInt& n) const override { return inner_->length(n - 1); }

private:
    CodecPtr inner_;
    std::string name_;
};

class ZigzagCodec final : public Codec {
public:
    explicit ZigzagCodec(CodecPtr inner) : inner_(std::move(inner)), offset_(inner_->domain_min().value_or(0)) {}

    std::string name() const override { return "zigzag(" + inner_->name() + ")"; }
    std::optional<int> domain_min() const override { return std::nullopt; }
    BigNat count_by_length(std::uint64_t bits) const override { return inner_->count_by_length(bits); }

protected:
    void do_encode(BitWriter& out, const BigInt& z) const override
    {
        inner_->encode_to(out, zigzag_rank(z) + offset_);
    }
    BigInt do_decode(BitReader& in) const override
    {
        return zigzag_unrank(inner_->decode(in) - offset_);
    }
    std::uint64_t do_length(const BigInt& z) const override
    {
        return inner_->length(zigzag_rank(z) + offset_);
    }

private:
    CodecPtr inner_;
    int offset_;
};

}  // namespace

CodecPtr shift1(CodecPtr inner, std::string name)
{
    if (inner->domain_min() != 0)
        throw std::invalid_argument("shift1 needs a code for N >= 0, got " + inner->name());
    return std::make_shared<Shift1Codec>(std::move(inner), std::move(name));
}

CodecPtr zigzag(CodecPtr inner)
{
    if (!inner->domain_min())
        throw std::invalid_argument("zigzag needs a code for non-negative integers");
    return std::make_shared<ZigzagCodec>(std::move(inner));
}

BigNat zigzag_rank(const BigInt& z)
{
    // 0 -> 0, k -> 2k - 1, -k -> 2k
    if (sgn(z) > 0)
        return BigNat(2 * z - 1);
    return BigNat(-2 * z);
}

BigInt zigzag_unrank(const BigNat& rank)
{
    if (sgn(rank) < 0)
        throw DomainError("negative zigzag rank");
    if (mpz_odd_p(rank.get_mpz_t()))
        return BigInt((rank + 1) / 2);
    return BigInt(-(rank / 2));
}

BitString encode_sequence(const Codec& codec, std::span<const BigInt> values)
{
    BitWriter w;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!codec.in_domain(values[i]))
            throw SequenceDomainError(codec.name() + ": element " + std::to_string(i) + " (" +
                                          to_decimal(values[i]) + ") is outside the domain",
                                      i);
        codec.encode_to(w, values[i]);
    }
    return std::move(w).finish();
}

std::vector<BigInt> decode_sequence(const Codec& codec, const BitString& bits,
                                    std::optional<std::size_t> count)
{
    BitReader r(bits);
    std::vector<BigInt> out;
    if (count) {
        out.reserve(std::min(*count, bits.size()));
        for (std::size_t i = 0; i < *count; ++i)
            out.push_back(codec.decode(r));
        if (!r.at_end())
            throw DecodeError(DecodeErrorKind::trailing_bits,
                              "TrailingBits: " + std::to_string(r.remaining()) +
                                  " bits left after " + std::to_string(*count) + " code-words");
    } else {
        while (!r.at_end())
            out.push_back(codec.decode(r));
    }
    return out;
}

}  // namespace uic
