#include <gtest/gtest.h>

#include "uic/elias.hpp"
#include "uic/fibonacci.hpp"
#include "uic/registry.hpp"
#include "uic/wtc.hpp"

using namespace uic;

namespace {
BitString bits(const char* s) { return BitString::from_text(s); }
std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST(Codec, SmallestCodeWords)
{
    EXPECT_EQ(fibonacci::codec()->encode(1).to_text(), "11");
    EXPECT_EQ(elias::omega()->encode(1).to_text(), "1");
    EXPECT_EQ(wtc::wtc1()->encode(1).to_text(), "0");
}

TEST(Codec, DecodePrefix)
{
    auto d = fibonacci::codec()->decode_prefix(bits("1101"));
    EXPECT_EQ(d.value, 1);
    EXPECT_EQ(d.consumed, 2u);

    d = wtc::wtc1()->decode_prefix(bits("100100"));
    EXPECT_EQ(d.value, 2);
    EXPECT_EQ(d.consumed, 3u);

    EXPECT_THROW((void)elias::omega()->decode_prefix(bits("00")), TruncatedError);
}

TEST(Codec, FailedDecodeLeavesReaderInPlace)
{
    const auto b = bits("11000");
    BitReader r(b);
    EXPECT_EQ(fibonacci::codec()->decode(r), 1);
    EXPECT_THROW((void)fibonacci::codec()->decode(r), TruncatedError);
    EXPECT_EQ(r.position(), 2u);
}

TEST(Codec, DomainChecks)
{
    EXPECT_THROW((void)fibonacci::codec()->encode(0), DomainError);
    EXPECT_THROW((void)wtc::wtc1()->encode(-3), DomainError);
    EXPECT_THROW((void)elias::omega()->length(0), DomainError);
    EXPECT_EQ(wtc::wtc0()->encode(0).to_text(), "0");
}

TEST(Codec, LengthMatchesEncoding)
{
    for (const auto& id : codec_ids()) {
        const auto c = make_codec(id);
        const long lo = c->domain_min().value_or(0);
        for (long n = lo; n < lo + 300; ++n)
            EXPECT_EQ(c->length(n), c->encode(n).size()) << id << ' ' << n;
    }
}

TEST(Shift1, OffsetsByOne)
{
    const auto w1 = shift1(wtc::wtc0(), "mine");
    EXPECT_EQ(w1->name(), "mine");
    EXPECT_EQ(w1->domain_min(), 1);
    for (long n = 1; n < 200; ++n)
        EXPECT_EQ(w1->encode(n), wtc::wtc0()->encode(n - 1));
    EXPECT_THROW((void)shift1(fibonacci::codec()), std::invalid_argument);
}

TEST(Zigzag, RankOrder)
{
    EXPECT_EQ(zigzag_rank(0), 0);
    EXPECT_EQ(zigzag_rank(1), 1);
    EXPECT_EQ(zigzag_rank(-1), 2);
    EXPECT_EQ(zigzag_rank(2), 3);
    EXPECT_EQ(zigzag_rank(-2), 4);
    EXPECT_EQ(zigzag_rank(3), 5);
    for (long z = -500; z <= 500; ++z)
        EXPECT_EQ(zigzag_unrank(zigzag_rank(z)), z);
}

TEST(Zigzag, WrapsBothDomainKinds)
{
    const auto zw = zigzag(wtc::wtc0());
    const auto zf = zigzag(fibonacci::codec());
    EXPECT_FALSE(zw->domain_min().has_value());
    // rank 0 is WTC0(0) = "0" and Fib(1) = "11"
    EXPECT_EQ(zw->encode(0).to_text(), "0");
    EXPECT_EQ(zf->encode(0).to_text(), "11");
    EXPECT_EQ(zf->encode(-2), fibonacci::codec()->encode(5));
    for (long z = -300; z <= 300; ++z) {
        EXPECT_EQ(zw->decode_prefix(zw->encode(z)).value, z);
        EXPECT_EQ(zf->decode_prefix(zf->encode(z)).value, z);
        EXPECT_EQ(zf->length(z), zf->encode(z).size());
    }
}

TEST(Sequence, EncodeAndDecode)
{
    const auto fib = fibonacci::codec();
    const auto w1 = wtc::wtc1();
    EXPECT_EQ(encode_sequence(*fib, ints({9, 2})).to_text(), "100011011");
    EXPECT_EQ(encode_sequence(*w1, ints({3, 4, 2})).to_text(), "1010011000100");
    EXPECT_TRUE(encode_sequence(*fib, {}).empty());

    EXPECT_EQ(decode_sequence(*fib, bits("100011011"), 2), ints({9, 2}));
    EXPECT_EQ(decode_sequence(*w1, bits("1010011000100"), 3), ints({3, 4, 2}));
    EXPECT_EQ(decode_sequence(*elias::omega(), bits("1"), 1), ints({1}));
    EXPECT_EQ(decode_sequence(*w1, bits("1010011000100")), ints({3, 4, 2}));
}

TEST(Sequence, Framing)
{
    const auto fib = fibonacci::codec();
    try {
        (void)decode_sequence(*fib, bits("100011011"), 1);
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.kind(), DecodeErrorKind::trailing_bits);
    }
    EXPECT_THROW((void)decode_sequence(*fib, bits("100011011"), 3), TruncatedError);
    EXPECT_THROW((void)decode_sequence(*fib, bits("1000110"), std::nullopt), TruncatedError);
}

TEST(Sequence, DomainErrorCarriesIndex)
{
    try {
        (void)encode_sequence(*fibonacci::codec(), ints({4, 7, 0, 2}));
        FAIL();
    } catch (const SequenceDomainError& e) {
        EXPECT_EQ(e.index(), 2u);
    }
}
