#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "uic/analysis.hpp"
#include "uic/catalan_oracle.hpp"
#include "uic/elias.hpp"
#include "uic/wtc.hpp"

using namespace uic;
namespace an = uic::analysis;

TEST(ImpliedMass, SmallLengths)
{
    EXPECT_EQ(an::implied_mass(*an::code_codec(an::Code::wtc1), 3), mpq_class(1, 8));
    EXPECT_EQ(an::implied_mass(*an::code_codec(an::Code::omega), 3), mpq_class(1, 4));
    EXPECT_EQ(an::implied_mass(*an::code_codec(an::Code::fibonacci), 1), 0);
}

TEST(Cumulative, ClosedFormsAgreeWithPartialSums)
{
    const auto fib = an::code_codec(an::Code::fibonacci);
    const auto om = an::code_codec(an::Code::omega);
    const auto w1 = an::code_codec(an::Code::wtc1);
    mpq_class sf = 0, so = 0, sw = 0;
    for (std::uint64_t len = 1; len <= 400; ++len) {
        sf += an::implied_mass(*fib, len);
        so += an::implied_mass(*om, len);
        sw += an::implied_mass(*w1, len);
        ASSERT_EQ(an::cumulative_fibonacci(len), sf) << len;
        ASSERT_EQ(an::cumulative_omega(len), so) << len;
        const auto w = an::cumulative_wtc1(len);
        ASSERT_TRUE(w.exact);
        ASSERT_NEAR(w.mass, sw.get_d(), 1e-15) << len;
        ASSERT_LT(sf, 1);
        ASSERT_LT(so, 1);
        ASSERT_LT(sw, 1);
    }
}

TEST(Cumulative, FloatTailTracksExactSum)
{
    const auto exact = an::cumulative_wtc1(20001, 20000);
    const auto mixed = an::cumulative_wtc1(20001, 100);
    EXPECT_TRUE(exact.exact);
    EXPECT_FALSE(mixed.exact);
    EXPECT_LT(mixed.error_bound, 1e-9);
    EXPECT_NEAR(mixed.mass, exact.mass, mixed.error_bound + 1e-15);
}

TEST(Cumulative, TableRows)
{
    const std::uint64_t lengths[] = {3, 10};
    const auto rows = an::cumulative_table(lengths);
    EXPECT_DOUBLE_EQ(rows[0].mass_fib, 0.375);
    EXPECT_DOUBLE_EQ(rows[0].mass_omega, 0.75);
    EXPECT_DOUBLE_EQ(rows[0].mass_wtc1, 0.625);
    EXPECT_NEAR(rows[1].mass_fib, 0.859, 5e-4);
    EXPECT_NEAR(rows[1].mass_omega, 0.875, 5e-4);
    EXPECT_NEAR(rows[1].mass_wtc1, 0.754, 5e-4);
}

TEST(Lead, Rows)
{
    auto r = an::lead_row(65536);
    EXPECT_EQ(r.len_fib, 24u);
    EXPECT_EQ(r.len_omega, 28u);
    EXPECT_EQ(r.len_wtc1, 23u);
    EXPECT_EQ(r.leaders, 4u);
    r = an::lead_row(32768);
    EXPECT_EQ(r.leaders, 7u);
    r = an::lead_row(1);
    EXPECT_FALSE(r.leads(an::Code::fibonacci));
    EXPECT_TRUE(r.leads(an::Code::omega));
    EXPECT_TRUE(r.leads(an::Code::wtc1));
}

TEST(Crossover, Records)
{
    auto c = an::crossover_check(848);
    EXPECT_EQ(c.block_start, wtc::ccatalan(847) + 1);
    EXPECT_EQ(c.wtc_start, 1697u);
    EXPECT_EQ(c.omega_start, 1697u);
    c = an::crossover_check(3389);
    EXPECT_EQ(c.wtc_start, 6779u);
    EXPECT_EQ(c.omega_start, 6778u);
    c = an::crossover_check(10);
    EXPECT_EQ(c.wtc_start, 21u);
    EXPECT_EQ(c.omega_start, elias::omega_length(wtc::ccatalan(9) + 1));
}

TEST(Crossover, SharedBlock)
{
    const auto r = an::shared_block(134, 255);
    ASSERT_TRUE(r.has_value());
    const BigNat wtc_lo = wtc::ccatalan(133) + 1, wtc_hi = wtc::ccatalan(134);
    const BigNat om_lo = pow2(254), om_hi = pow2(255) - 1;
    EXPECT_EQ(r->lo, wtc_lo > om_lo ? wtc_lo : om_lo);
    EXPECT_EQ(r->hi, wtc_hi < om_hi ? wtc_hi : om_hi);
    EXPECT_LE(r->lo, r->hi);
    EXPECT_EQ(wtc::wtc1_length(r->lo), 269u);
    EXPECT_EQ(elias::omega_length(r->lo), 269u);
    EXPECT_EQ(wtc::wtc1_length(r->hi), 269u);
    EXPECT_EQ(elias::omega_length(r->hi), 269u);
    EXPECT_FALSE(an::shared_block(10, 255).has_value());
}

TEST(Bounds, FUpperLower)
{
    EXPECT_THROW((void)an::f_upper(4), DomainError);
    EXPECT_THROW((void)an::f_lower(4), DomainError);
    EXPECT_LT(2 * an::f_lower(5) + 1, 7);
    EXPECT_GT(2 * an::f_upper(5) + 1, 7);
    EXPECT_LT(2 * an::f_lower(1000000) + 1, 27);
    EXPECT_GT(2 * an::f_upper(1000000) + 1, 27);
}

TEST(Bounds, Epsilon)
{
    EXPECT_DOUBLE_EQ(an::epsilon(2), 2.0);
    EXPECT_THROW((void)an::epsilon(1), DomainError);
}

TEST(Bounds, LengthApprox)
{
    EXPECT_EQ(an::length_approx(0, 5), 1);
    EXPECT_EQ(an::length_approx(1, -7), 3);
    EXPECT_LE(std::abs(an::length_approx(1000000, an::approx_c_average) - 27), 2.5);
}

TEST(Bounds, CumulativeCatalanSandwich)
{
    for (std::size_t f : {1u, 2u, 10u, 100u, 1000u, 3000u}) {
        const auto b = an::cc_bounds(f);
        const double lg = log_2(wtc::ccatalan(static_cast<std::int64_t>(f)));
        EXPECT_LT(b.log2_lower, lg) << f;
        EXPECT_GT(b.log2_upper, lg) << f;
    }
}

TEST(Bounds, LogGrid)
{
    const auto g = an::log_grid(3, 4);
    ASSERT_FALSE(g.empty());
    EXPECT_EQ(g.front(), 5);
    EXPECT_EQ(g.back(), 1000);
    for (std::size_t i = 1; i < g.size(); ++i)
        EXPECT_LT(g[i - 1], g[i]);
}

TEST(Csv, EmptyReportsAreHeaderOnly)
{
    EXPECT_EQ(an::csv_codewords({}), "N,fibonacci,omega,wtc1\n");
    EXPECT_EQ(an::csv_lengths({}), "N,fibonacci,omega,wtc1\n");
    EXPECT_EQ(an::csv_lead({}), "N,fibonacci,omega,wtc1\n");
    EXPECT_EQ(an::csv_cumulative({}).find('\n'), an::csv_cumulative({}).size() - 1);
    EXPECT_EQ(an::csv_bounds({}).find('\n'), an::csv_bounds({}).size() - 1);
}

TEST(Csv, LeadAsterisks)
{
    const BigNat ns[] = {1, 6919};
    EXPECT_EQ(an::csv_lead(an::lead_table(ns)), "N,fibonacci,omega,wtc1\n1,2,1*,1*\n6919,20*,20*,21\n");
}

TEST(Oracle, ExactRangeAgrees)
{
    for (std::size_t f = 200; f < 1500; f += 13) {
        const auto lg = an::log2_ccatalan(f);
        const double exact = log_2(wtc::ccatalan(static_cast<std::int64_t>(f)));
        EXPECT_NEAR(static_cast<double>(lg.whole) + lg.correction, exact, 1e-9) << f;
        EXPECT_EQ(lg.bit_length(), bit_length(wtc::ccatalan(static_cast<std::int64_t>(f))));
        const auto o = an::oracle_block_end(f);
        EXPECT_EQ(o.omega_length, elias::omega_length(wtc::ccatalan(static_cast<std::int64_t>(f))));
    }
}

TEST(Oracle, CatalanSeriesAgainstExact)
{
    for (std::size_t f : {250u, 1000u, 4000u}) {
        const double exact = log_2(wtc::catalan(f));
        const auto lg = an::log2_catalan(f);
        EXPECT_NEAR(static_cast<double>(lg.whole) + lg.correction, exact, 1e-9) << f;
    }
}

TEST(Oracle, ExactBitLengthWithTailBound)
{
    for (std::size_t f : {5u, 64u, 300u, 2500u}) {
        const auto got = an::exact_ccatalan_bit_length(f, 16);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, bit_length(wtc::ccatalan(static_cast<std::int64_t>(f))));
    }
}
