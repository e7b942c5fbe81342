#include <gtest/gtest.h>

#include <random>

#include "../support/reference.hpp"
#include "uic/wtc.hpp"

using namespace uic;

TEST(Catalan, Values)
{
    const long expect[] = {1, 1, 2, 5, 14};
    for (std::size_t f = 0; f < 5; ++f)
        EXPECT_EQ(wtc::catalan(f), expect[f]);
    EXPECT_EQ(wtc::catalan(10), 16796);
    const mpq_class ratio(wtc::catalan(101), wtc::catalan(100));
    EXPECT_GE(ratio, mpq_class(39, 10));
    for (std::size_t f = 0; f < 300; ++f) {
        BigNat b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * f, f);
        ASSERT_EQ(wtc::catalan(f) * (f + 1), b) << f;
    }
}

TEST(Catalan, Cumulative)
{
    EXPECT_EQ(wtc::ccatalan(-1), 0);
    EXPECT_EQ(wtc::ccatalan(0), 1);
    EXPECT_EQ(wtc::ccatalan(1), 2);
    EXPECT_EQ(wtc::ccatalan(2), 4);
    EXPECT_EQ(wtc::ccatalan(3), 9);
    EXPECT_EQ(wtc::ccatalan(4), 23);
}

TEST(Paths, Figure)
{
    EXPECT_EQ(wtc::paths(6, 3), 48);
    EXPECT_EQ(wtc::paths(4, 4), 14);
    EXPECT_EQ(wtc::paths(2, 3), 0);
    EXPECT_EQ(wtc::paths(6, 6), 132);
    EXPECT_EQ(wtc::paths(5, 4), 42);
}

TEST(Paths, TableMatchesRecurrenceAndClosedForm)
{
    const ref::PathTable table(30);
    for (std::size_t r = 0; r <= 30; ++r)
        for (std::size_t c = 0; c <= 30; ++c) {
            ASSERT_EQ(wtc::paths(r, c), table(r, c)) << r << ',' << c;
            ASSERT_EQ(wtc::paths_closed_form(r, c), table(r, c)) << r << ',' << c;
        }
    // across the memo boundary
    for (std::size_t r = wtc::paths_memo_rows - 3; r < wtc::paths_memo_rows + 3; ++r)
        for (std::size_t c = 0; c <= r + 1; c += 7)
            ASSERT_EQ(wtc::paths(r, c), wtc::paths_closed_form(r, c));
    for (std::size_t f = 1; f < 400; f += 37)
        EXPECT_EQ(wtc::paths(f, f), wtc::catalan(f));
}

TEST(ForkCount, Blocks)
{
    EXPECT_EQ(wtc::fork_count(0), 0u);
    EXPECT_EQ(wtc::fork_count(1), 1u);
    EXPECT_EQ(wtc::fork_count(3), 2u);
    EXPECT_EQ(wtc::fork_count(4), 3u);
    for (std::int64_t f = 1; f <= 60; ++f) {
        EXPECT_EQ(wtc::fork_count(wtc::ccatalan(f - 1)), static_cast<std::size_t>(f));
        EXPECT_EQ(wtc::fork_count(wtc::ccatalan(f) - 1), static_cast<std::size_t>(f));
        EXPECT_EQ(wtc::fork_count(wtc::ccatalan(f)), static_cast<std::size_t>(f + 1));
    }
}

TEST(Wtc0, Encode)
{
    EXPECT_EQ(wtc::wtc0_encode(0).to_text(), "0");
    EXPECT_EQ(wtc::wtc0_encode(1).to_text(), "100");
    EXPECT_EQ(wtc::wtc0_encode(8).to_text(), "1110000");
    EXPECT_EQ(wtc::wtc0_encode(23).to_text(), "10101010100");
}

TEST(Wtc0, DecodePrefix)
{
    auto d = wtc::wtc0_decode_prefix(BitString::from_text("0"));
    EXPECT_EQ(d.value, 0);
    EXPECT_EQ(d.consumed, 1u);
    d = wtc::wtc0_decode_prefix(BitString::from_text("1101000"));
    EXPECT_EQ(d.value, 7);
    EXPECT_EQ(d.consumed, 7u);
    EXPECT_THROW((void)wtc::wtc0_decode_prefix(BitString::from_text("111000")), TruncatedError);
}

TEST(Wtc0, LexicographicOrderOfTrees)
{
    const auto trees = ref::trees_in_order(7);
    const ref::PathTable table(10);
    for (std::size_t n = 0; n < trees.size(); ++n) {
        ASSERT_EQ(wtc::wtc0_encode(n).to_text(), trees[n]) << n;
        ASSERT_EQ(ref::wtc0_encode_listing(table, n), trees[n]) << n;
        ASSERT_EQ(ref::wtc0_decode_listing(table, trees[n]), n);
    }
}

TEST(Wtc0, MatchesListingFurtherOut)
{
    const ref::PathTable table(32);
    for (std::uint64_t n = 0; n < 100000; ++n) {
        const auto b = wtc::wtc0_encode(n);
        ASSERT_EQ(b.to_text(), ref::wtc0_encode_listing(table, n)) << n;
        ASSERT_EQ(wtc::wtc0_length(n), b.size());
    }
}

TEST(Wtc0, FirstAndLastOfEachLength)
{
    for (std::int64_t f = 1; f < 40; ++f) {
        std::string first;
        for (std::int64_t i = 0; i < f; ++i)
            first += "10";
        first += "0";
        const std::string last = std::string(f, '1') + std::string(f + 1, '0');
        EXPECT_EQ(wtc::wtc0_encode(wtc::ccatalan(f - 1)).to_text(), first);
        EXPECT_EQ(wtc::wtc0_encode(wtc::ccatalan(f) - 1).to_text(), last);
    }
}

TEST(Wtc0, RoundTripLargeForks)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        BigNat n = 0;
        const unsigned bits = 1 + rng() % 4096;
        for (unsigned b = 0; b < bits; ++b)
            n = 2 * n + static_cast<unsigned long>(rng() & 1);
        const auto code = wtc::wtc0_encode(n);
        EXPECT_EQ(code.size(), wtc::wtc0_length(n));
        const auto d = wtc::wtc0_decode_prefix(code);
        EXPECT_EQ(d.value, n);
        EXPECT_EQ(d.consumed, code.size());
    }
}

TEST(Wtc1, Examples)
{
    const auto w1 = wtc::wtc1();
    EXPECT_EQ(w1->name(), "wtc1");
    EXPECT_EQ(w1->encode(5).to_text(), "1010100");
    EXPECT_EQ(w1->encode(100).to_text(), "1011101001000");
    EXPECT_EQ(wtc::wtc1_length(1000000), 27u);
    // blocks are [cC_{f-1} + 1, cC_f]: 5..9 take seven bits
    EXPECT_EQ(wtc::wtc1_length(4), 5u);
    for (long n = 5; n <= 9; ++n)
        EXPECT_EQ(wtc::wtc1_length(n), 7u);
    EXPECT_EQ(wtc::wtc1_length(10), 9u);
    EXPECT_EQ(wtc::wtc1_length(wtc::ccatalan(847) + 1), 1697u);
    EXPECT_THROW((void)wtc::wtc1_length(0), DomainError);
}

TEST(Wtc1, BlockLaw)
{
    for (std::int64_t f = 1; f <= 60; ++f) {
        const auto len = static_cast<std::uint64_t>(2 * f + 1);
        EXPECT_EQ(wtc::wtc1_length(wtc::ccatalan(f - 1) + 1), len);
        if (f >= 2)
            EXPECT_EQ(wtc::wtc1_length(wtc::ccatalan(f - 1) + 2), len);
        EXPECT_EQ(wtc::wtc1_length(wtc::ccatalan(f)), len);
        EXPECT_EQ(wtc::wtc1_length(wtc::ccatalan(f) + 1), len + 2);
    }
}

TEST(Wtc, CountByLength)
{
    const auto w0 = wtc::wtc0();
    EXPECT_EQ(w0->count_by_length(1), 1);
    EXPECT_EQ(w0->count_by_length(2), 0);
    EXPECT_EQ(w0->count_by_length(7), 5);
    EXPECT_EQ(wtc::wtc1()->count_by_length(9), 14);
}
