#include "uic/elias.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace uic::elias {

namespace {

std::uint64_t bit_length_u64(std::uint64_t v) { return v == 0 ? 0 : 64 - static_cast<std::uint64_t>(__builtin_clzll(v)); }

std::uint64_t omega_length_u64(std::uint64_t n)
{
    std::uint64_t total = 0;
    while (n != 1) {
        const std::uint64_t s = bit_length_u64(n);
        total += s;
        n = s - 1;
    }
    return total + 1;
}

std::uint64_t section_count_u64(std::uint64_t n)
{
    std::uint64_t k = 1;
    while (n != 1) {
        n = bit_length_u64(n) - 1;
        ++k;
    }
    return k;
}

void require_positive(const BigNat& n, const char* what)
{
    if (n < 1)
        throw DomainError(std::string(what) + ": " + to_decimal(n) + " is below the domain minimum 1");
}

// Bit count the caller is about to read; Truncated when the stream is short.
std::size_t checked_width(const BigNat& width, const BitReader& in)
{
    std::uint64_t w;
    if (!fits_u64(width, w) || w > in.remaining())
        throw TruncatedError(fits_u64(width, w) ? static_cast<std::size_t>(w)
                                                : std::numeric_limits<std::size_t>::max(),
                             in.remaining());
    return static_cast<std::size_t>(w);
}

// A count of sections or layers read from the stream. Every step it drives
// reads at least one bit, so anything above the remaining bits must truncate.
std::uint64_t checked_count(const BigNat& count, const BitReader& in)
{
    if (sgn(count) <= 0)
        throw DecodeError(DecodeErrorKind::malformed, "Malformed: section or layer count below one");
    std::uint64_t c;
    if (!fits_u64(count, c) || c - 1 > in.remaining())
        throw TruncatedError(in.remaining() + 1, in.remaining());
    return c;
}

void append_trimmed(BitWriter& out, const BigNat& v) { out.append_bits(v, bit_length(v) - 1); }

// Restores trimmed sections: starting from the implicit first section
// (value 1), each section has as many stored bits as the previous value.
BigNat read_trimmed_chain(BitReader& in, std::uint64_t sections)
{
    BigNat v = 1;
    for (std::uint64_t i = 1; i < sections; ++i)
        v = in.read_with_leading_one(checked_width(v, in));
    return v;
}

template <class F>
auto restoring(BitReader& in, F&& body)
{
    const std::size_t start = in.position();
    try {
        return body();
    } catch (...) {
        in.seek(start);
        throw;
    }
}

// Count code-words of `bits` bits for a code whose length depends only on
// the bit length s of N (2^(s-1) integers share each s). Every such code
// has length >= s - 1.
template <class LengthOfS>
BigNat count_by_value_width(std::uint64_t bits, LengthOfS&& length_of)
{
    BigNat total;
    for (std::uint64_t s = 1; s <= bits + 1; ++s)
        if (length_of(BigNat(static_cast<unsigned long>(s))) == bits)
            total += pow2(s - 1);
    return total;
}

struct RecursiveLayers {
    BigNat trimmed_bits;
    std::uint64_t layers = 1;  // nTet
};

// Layers above the first one for omega_r, given the number of emitted
// sections of the layer below.
void add_upper_layers(RecursiveLayers& acc, std::uint64_t todo)
{
    while (todo != 1) {
        acc.trimmed_bits += omega_length_u64(todo) - section_count_u64(todo);
        ++acc.layers;
        todo = section_count_u64(todo) - 1;
    }
}

RecursiveLayers recursive_layers_for_bit_length(const BigNat& s)
{
    RecursiveLayers acc;
    if (s == 1)
        return acc;
    const BigNat k = section_count_for_bit_length(s);
    acc.trimmed_bits = omega_length_for_bit_length(s) - k;
    ++acc.layers;
    add_upper_layers(acc, to_u64(k) - 1);
    return acc;
}

class OmegaCodec final : public Codec {
public:
    std::string name() const override { return "omega"; }
    BigNat count_by_length(std::uint64_t bits) const override
    {
        return count_by_value_width(bits, [](const BigNat& s) { return omega_length_for_bit_length(s); });
    }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override { omega_encode_to(out, n); }
    BigInt do_decode(BitReader& in) const override { return omega_decode(in); }
    std::uint64_t do_length(const BigInt& n) const override { return omega_length(n); }
};

class UnaryCodec final : public Codec {
public:
    std::string name() const override { return "unary"; }
    BigNat count_by_length(std::uint64_t bits) const override { return bits >= 1 ? 1 : 0; }

protected:
    void do_encode(BitWriter& out, const BigInt& k) const override
    {
        out.append_zeros(static_cast<std::size_t>(to_u64(k) - 1));
        out.push_back(true);
    }
    BigInt do_decode(BitReader& in) const override
    {
        std::uint64_t k = 1;
        while (!in.read_bit())
            ++k;
        return BigNat(static_cast<unsigned long>(k));
    }
    std::uint64_t do_length(const BigInt& k) const override { return to_u64(k); }
};

class OmegaPCodec final : public Codec {
public:
    explicit OmegaPCodec(CodecPtr sections) : sections_(std::move(sections))
    {
        if (!sections_->in_domain(1))
            throw std::invalid_argument("omega_p needs a section code that encodes 1, 2, ...");
    }

    std::string name() const override { return "omega_p(" + sections_->name() + ")"; }
    BigNat count_by_length(std::uint64_t bits) const override
    {
        return count_by_value_width(
            bits, [this](const BigNat& s) { return omega_p_length_for_bit_length(*sections_, s); });
    }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override
    {
        const auto values = section_values(n);
        sections_->encode_to(out, BigNat(static_cast<unsigned long>(values.size())));
        for (const auto& v : values)
            append_trimmed(out, v);
    }
    BigInt do_decode(BitReader& in) const override
    {
        const BigNat k = sections_->decode(in);
        return read_trimmed_chain(in, checked_count(k, in));
    }
    std::uint64_t do_length(const BigInt& n) const override
    {
        const std::uint64_t k = section_count(n);
        return sections_->length(BigNat(static_cast<unsigned long>(k))) + omega_length(n) - k;
    }

private:
    CodecPtr sections_;
};

class OmegaRCodec final : public Codec {
public:
    explicit OmegaRCodec(CodecPtr layers) : layers_(std::move(layers))
    {
        if (!layers_->in_domain(1))
            throw std::invalid_argument("omega_r needs a layer code that encodes 1, 2, ...");
    }

    std::string name() const override { return "omega_r(" + layers_->name() + ")"; }
    BigNat count_by_length(std::uint64_t bits) const override
    {
        return count_by_value_width(
            bits, [this](const BigNat& s) { return omega_r_length_for_bit_length(*layers_, s); });
    }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override
    {
        // Each layer trims the sections of omega(todo) and hands the number
        // of emitted sections to the next layer, until a layer emits nothing.
        // Later layers precede earlier ones in the stream.
        std::vector<std::vector<BigNat>> layers;
        BigNat todo = n;
        std::uint64_t n_tet = 1;
        for (;;) {
            auto values = section_values(todo);
            if (values.size() == 1)
                break;
            values.erase(values.begin());  // the implicit section for one
            todo = static_cast<unsigned long>(values.size());
            layers.push_back(std::move(values));
            ++n_tet;
        }
        layers_->encode_to(out, BigNat(static_cast<unsigned long>(n_tet)));
        for (auto layer = layers.rbegin(); layer != layers.rend(); ++layer)
            for (const auto& v : *layer)
                append_trimmed(out, v);
    }
    BigInt do_decode(BitReader& in) const override
    {
        const std::uint64_t n_tet = checked_count(layers_->decode(in), in);
        BigNat v = 1;
        for (std::uint64_t layer = 1; layer < n_tet; ++layer) {
            const std::uint64_t emitted = checked_count(v, in);
            v = read_trimmed_chain(in, emitted + 1);
        }
        return v;
    }
    std::uint64_t do_length(const BigInt& n) const override
    {
        return to_u64(omega_r_length_for_bit_length(*layers_, BigNat(static_cast<unsigned long>(bit_length(n)))));
    }

private:
    CodecPtr layers_;
};

}  // namespace

std::vector<BigNat> section_values(const BigNat& n)
{
    require_positive(n, "omega");
    std::vector<BigNat> values{n};
    while (values.back() != 1)
        values.emplace_back(static_cast<unsigned long>(bit_length(values.back()) - 1));
    std::reverse(values.begin(), values.end());
    return values;
}

SectionChain omega_sections(const BigNat& n)
{
    const auto values = section_values(n);
    SectionChain chain;
    for (std::size_t i = 0; i < values.size(); ++i) {
        BitWriter w;
        w.push_back(i + 1 == values.size());
        append_trimmed(w, values[i]);
        chain.sections.push_back(std::move(w).finish());
    }
    return chain;
}

std::uint64_t section_count(const BigNat& n)
{
    require_positive(n, "omega");
    if (n == 1)
        return 1;
    return 1 + section_count_u64(bit_length(n) - 1);
}

BigNat section_count_for_bit_length(const BigNat& bits)
{
    require_positive(bits, "omega");
    if (bits == 1)
        return 1;
    return BigNat(1 + section_count(BigNat(bits - 1)));
}

void omega_encode_to(BitWriter& out, const BigNat& n)
{
    const auto values = section_values(n);
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back(i + 1 == values.size());
        append_trimmed(out, values[i]);
    }
}

BitString omega_encode(const BigNat& n)
{
    BitWriter w;
    omega_encode_to(w, n);
    return std::move(w).finish();
}

BigNat omega_decode(BitReader& in)
{
    return restoring(in, [&] {
        BigNat section_bits = 1;
        for (;;) {
            const std::size_t width = checked_width(section_bits, in);
            const bool is_value = in.read_bit();
            BigNat v = in.read_with_leading_one(width - 1);
            if (is_value)
                return v;
            section_bits = v + 1;
        }
    });
}

Decoded omega_decode_prefix(const BitString& bits)
{
    BitReader r(bits);
    BigNat v = omega_decode(r);
    return {std::move(v), r.position()};
}

std::uint64_t omega_length(const BigNat& n)
{
    require_positive(n, "omega");
    return omega_length_for_bit_length(bit_length(n));
}

std::uint64_t omega_length_for_bit_length(std::uint64_t s)
{
    if (s == 0)
        throw DomainError("omega: bit length must be at least 1");
    return s == 1 ? 1 : s + omega_length_u64(s - 1);
}

BigNat omega_length_for_bit_length(const BigNat& s)
{
    require_positive(s, "omega");
    if (s == 1)
        return 1;
    return s + omega_length(BigNat(s - 1));
}

CodecPtr omega()
{
    static const CodecPtr instance = std::make_shared<OmegaCodec>();
    return instance;
}

CodecPtr unary()
{
    static const CodecPtr instance = std::make_shared<UnaryCodec>();
    return instance;
}

CodecPtr omega_p(CodecPtr section_code) { return std::make_shared<OmegaPCodec>(std::move(section_code)); }

CodecPtr omega_r(CodecPtr layer_code) { return std::make_shared<OmegaRCodec>(std::move(layer_code)); }

CodecPtr omega2()
{
    static const CodecPtr instance = omega_p(omega());
    return instance;
}

CodecPtr omega_star()
{
    static const CodecPtr instance = omega_r(omega());
    return instance;
}

BitString omega_p_encode(const Codec& section_code, const BigNat& n)
{
    require_positive(n, "omega_p");
    BitWriter w;
    const auto values = section_values(n);
    section_code.encode_to(w, BigNat(static_cast<unsigned long>(values.size())));
    for (const auto& v : values)
        append_trimmed(w, v);
    return std::move(w).finish();
}

Decoded omega_p_decode_prefix(const Codec& section_code, const BitString& bits)
{
    BitReader r(bits);
    const BigNat k = section_code.decode(r);
    BigNat v = read_trimmed_chain(r, checked_count(k, r));
    return {std::move(v), r.position()};
}

BitString omega_r_encode(const Codec& layer_code, const BigNat& n)
{
    require_positive(n, "omega_r");
    // Shares the codec implementation; the wrapper only borrows layer_code.
    const OmegaRCodec codec(CodecPtr(&layer_code, [](const Codec*) {}));
    return codec.encode(n);
}

Decoded omega_r_decode_prefix(const Codec& layer_code, const BitString& bits)
{
    const OmegaRCodec codec(CodecPtr(&layer_code, [](const Codec*) {}));
    return codec.decode_prefix(bits);
}

BigNat omega_p_length_for_bit_length(const Codec& section_code, const BigNat& s)
{
    const BigNat k = section_count_for_bit_length(s);
    return BigNat(section_code.length(k) + omega_length_for_bit_length(s) - k);
}

BigNat omega_r_length_for_bit_length(const Codec& layer_code, const BigNat& s)
{
    const RecursiveLayers acc = recursive_layers_for_bit_length(s);
    return BigNat(layer_code.length(BigNat(static_cast<unsigned long>(acc.layers))) + acc.trimmed_bits);
}

double log_star_length(const BigNat& n, double c)
{
    require_positive(n, "log*");
    double total = c;
    double term = log_2(n);
    while (term > 0) {
        total += term;
        term = std::log2(term);
    }
    return total;
}

}  // namespace uic::elias
