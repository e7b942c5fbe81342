#include "uic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "uic/elias.hpp"
#include "uic/fibonacci.hpp"
#include "uic/wtc.hpp"

namespace uic::analysis {

namespace {

constexpr double ln4 = 2 * std::numbers::ln2;

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

double to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace

std::string_view code_name(Code code)
{
    switch (code) {
    case Code::fibonacci: return "fibonacci";
    case Code::omega: return "omega";
    case Code::wtc1: return "wtc1";
    }
    return "?";
}

CodecPtr code_codec(Code code)
{
    switch (code) {
    case Code::fibonacci: return fibonacci::codec();
    case Code::omega: return elias::omega();
    case Code::wtc1: return wtc::wtc1();
    }
    return nullptr;
}

std::uint64_t code_length(Code code, const BigNat& n)
{
    switch (code) {
    case Code::fibonacci: return fibonacci::length(n);
    case Code::omega: return elias::omega_length(n);
    case Code::wtc1: return wtc::wtc1_length(n);
    }
    return 0;
}

// implied distributions

mpq_class implied_mass(const Codec& codec, std::uint64_t bits)
{
    mpq_class q(codec.count_by_length(bits), pow2(bits));
    q.canonicalize();
    return q;
}

mpq_class cumulative_fibonacci(std::uint64_t max_length)
{
    // sum_{i=0}^{L-2} F_i / 2^(i+2) = 1 - F_{L+1} / 2^L, with F_0 = F_1 = 1,
    // which is the standard Fibonacci number of index L + 2.
    BigNat f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(max_length + 2));
    mpq_class q(f, pow2(max_length));
    q.canonicalize();
    return 1 - q;
}

mpq_class cumulative_omega(std::uint64_t max_length)
{
    if (max_length == 0)
        return 0;
    // N = 1 has mass 1/2. The 2^(s-1) integers with an s-bit value section
    // (s >= 2) share length s + |omega(s-1)|, so together they weigh
    // 2^-(|omega(s-1)| + 1).
    std::map<std::uint64_t, std::uint64_t> by_exponent;
    for (std::uint64_t s = 2;; ++s) {
        const std::uint64_t head = elias::omega_length(BigNat(static_cast<unsigned long>(s - 1)));
        if (s + head > max_length)
            break;
        ++by_exponent[head + 1];
    }
    mpq_class total(1, 2);
    for (const auto& [exponent, count] : by_exponent) {
        mpq_class term(BigNat(static_cast<unsigned long>(count)), pow2(exponent));
        term.canonicalize();
        total += term;
    }
    return total;
}

WtcCumulative cumulative_wtc1(std::uint64_t max_length, std::size_t exact_forks)
{
    WtcCumulative out;
    if (max_length == 0)
        return out;
    const std::size_t top = static_cast<std::size_t>((max_length - 1) / 2);
    const std::size_t exact_top = std::min(top, exact_forks);

    // Horner over a common denominator 2^(2 exact_top + 1).
    BigNat numerator;
    for (std::size_t f = 0; f <= exact_top; ++f)
        numerator = numerator * 4 + wtc::catalan(f);
    mpq_class exact(numerator, pow2(2 * exact_top + 1));
    exact.canonicalize();
    out.mass = to_double(exact);
    if (exact_top == top)
        return out;

    out.exact = false;
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    mpq_class seed(wtc::catalan(exact_top), pow2(2 * exact_top + 1));
    double term = to_double(seed);
    double sum = out.mass;
    double bound = u * sum;  // rounding of the exact part
    std::size_t steps = 0;
    for (std::size_t f = exact_top; f < top; ++f) {
        term *= static_cast<double>(2 * f + 1) / static_cast<double>(2 * (f + 2));
        ++steps;
        sum += term;
        // term: one rounding for the seed plus two per step; sum: one per add
        bound += term * static_cast<double>(2 * steps + 1) * u + sum * u;
    }
    out.mass = sum;
    out.error_bound = bound;
    return out;
}

std::vector<DistributionRow> cumulative_table(std::span<const std::uint64_t> max_lengths,
                                              std::size_t exact_wtc_forks)
{
    std::vector<DistributionRow> rows;
    rows.reserve(max_lengths.size());
    for (const std::uint64_t len : max_lengths) {
        DistributionRow row;
        row.max_length = len;
        row.mass_fib = to_double(cumulative_fibonacci(len));
        row.mass_omega = to_double(cumulative_omega(len));
        const WtcCumulative w = cumulative_wtc1(len, exact_wtc_forks);
        row.mass_wtc1 = w.mass;
        row.wtc1_error_bound = w.error_bound;
        rows.push_back(row);
    }
    return rows;
}

// comparative lengths

std::uint64_t LeadRow::length(Code code) const
{
    switch (code) {
    case Code::fibonacci: return len_fib;
    case Code::omega: return len_omega;
    case Code::wtc1: return len_wtc1;
    }
    return 0;
}

LeadRow lead_row(const BigNat& n)
{
    LeadRow row;
    row.n = n;
    row.len_fib = fibonacci::length(n);
    row.len_omega = elias::omega_length(n);
    row.len_wtc1 = wtc::wtc1_length(n);
    const std::uint64_t best = std::min({row.len_fib, row.len_omega, row.len_wtc1});
    for (const Code code : all_codes)
        if (row.length(code) == best)
            row.leaders |= 1u << static_cast<unsigned>(code);
    return row;
}

std::vector<LeadRow> lead_table(std::span<const BigNat> ns)
{
    std::vector<LeadRow> rows;
    rows.reserve(ns.size());
    for (const auto& n : ns)
        rows.push_back(lead_row(n));
    return rows;
}

CrossoverRecord crossover_check(std::size_t forks)
{
    if (forks == 0)
        throw DomainError("crossover_check needs at least one fork");
    CrossoverRecord rec;
    rec.forks = forks;
    rec.block_start = wtc::ccatalan(static_cast<std::int64_t>(forks) - 1) + 1;
    rec.block_end = wtc::ccatalan(static_cast<std::int64_t>(forks));
    rec.wtc_start = wtc::wtc1_length(rec.block_start);
    rec.wtc_end = wtc::wtc1_length(rec.block_end);
    rec.omega_start = elias::omega_length(rec.block_start);
    rec.omega_end = elias::omega_length(rec.block_end);
    return rec;
}

std::optional<std::size_t> first_crossover(BlockEdge edge, Relation relation, std::size_t after,
                                           std::size_t up_to)
{
    for (std::size_t f = after + 1; f <= up_to; ++f) {
        const std::uint64_t wtc_len = 2 * f + 1;
        const BigNat n = edge == BlockEdge::start ? BigNat(wtc::ccatalan(static_cast<std::int64_t>(f) - 1) + 1)
                                                  : wtc::ccatalan(static_cast<std::int64_t>(f));
        const std::uint64_t omega_len = elias::omega_length(n);
        const bool holds = relation == Relation::equal ? wtc_len == omega_len : wtc_len > omega_len;
        if (holds)
            return f;
    }
    return std::nullopt;
}

std::optional<Range> shared_block(std::size_t forks, std::uint64_t value_bits)
{
    if (forks == 0 || value_bits == 0)
        return std::nullopt;
    BigNat lo = wtc::ccatalan(static_cast<std::int64_t>(forks) - 1) + 1;
    BigNat hi = wtc::ccatalan(static_cast<std::int64_t>(forks));
    const BigNat omega_lo = pow2(value_bits - 1);
    const BigNat omega_hi = pow2(value_bits) - 1;
    lo = std::max(lo, omega_lo);
    hi = std::min(hi, omega_hi);
    if (lo > hi)
        return std::nullopt;
    return Range{lo, hi};
}

// asymptotics

double f_upper(const BigNat& n)
{
    if (n < 5)
        throw DomainError("f_upper needs N >= 5");
    const double ln_n = log_e(n);
    const double numerator =
        ln_n + 1.5 * std::log(ln_n / ln4) + 0.5 * std::log(9 * std::numbers::pi / 16);
    return numerator / ((1 - 1.5 / ln_n) * ln4);
}

double f_lower(const BigNat& n)
{
    const double upper = f_upper(n);
    return log_e(n) / (ln4 - (1.5 / upper) * std::log(upper));
}

double epsilon(const BigNat& n)
{
    if (n < 2)
        throw DomainError("epsilon needs N >= 2");
    const double lg = log_2(n);
    return static_cast<double>(wtc::wtc1_length(n)) - lg - 1.5 * std::log2(lg);
}

double length_approx(const BigNat& n, double c)
{
    if (sgn(n) < 0)
        throw DomainError("length_approx needs N >= 0");
    if (n == 0)
        return 1;
    if (n == 1)
        return 3;
    const double lg = log_2(n);
    return lg + 1.5 * std::log2(lg) + c;
}

CcBounds cc_bounds(std::size_t forks)
{
    if (forks == 0)
        throw DomainError("cc_bounds needs f >= 1");
    const double f = static_cast<double>(forks);
    const double lead = 2 * (f + 1) - std::log2(3.0);
    CcBounds b;
    b.log2_lower = lead - std::log2(f + 1) - 0.5 * std::log2(std::numbers::pi * f);
    b.log2_upper = lead - 0.5 * std::log2(std::numbers::pi * f * f * f);
    return b;
}

BoundsRow bounds_row(const BigNat& n, double c)
{
    BoundsRow row;
    row.n = n;
    row.length = wtc::wtc1_length(n);
    row.f_upper = f_upper(n);
    row.f_lower = f_lower(n);
    row.eps = epsilon(n);
    row.approx = length_approx(n, c);
    return row;
}

std::vector<BigNat> log_grid(unsigned decades, unsigned per_decade)
{
    std::vector<BigNat> out;
    for (unsigned k = 0; k <= decades * per_decade; ++k) {
        BigNat decade;
        mpz_ui_pow_ui(decade.get_mpz_t(), 10, k / per_decade);
        const double frac = std::pow(10.0, static_cast<double>(k % per_decade) / per_decade);
        const auto scaled = static_cast<unsigned long>(std::llround(frac * 1e6));
        BigNat n = (decade * scaled + 500000) / 1000000;
        if (n < 5)
            n = 5;
        if (out.empty() || out.back() != n)
            out.push_back(n);
    }
    return out;
}

// CSV

std::string csv_codewords(std::span<const BigNat> ns)
{
    std::ostringstream out;
    out << "N,fibonacci,omega,wtc1\n";
    for (const auto& n : ns) {
        out << to_decimal(n);
        for (const Code code : all_codes)
            out << ',' << code_codec(code)->encode(n).to_text();
        out << '\n';
    }
    return out.str();
}

std::string csv_lengths(std::span<const BigNat> ns)
{
    std::ostringstream out;
    out << "N,fibonacci,omega,wtc1\n";
    for (const auto& n : ns) {
        out << to_decimal(n);
        for (const Code code : all_codes)
            out << ',' << code_length(code, n);
        out << '\n';
    }
    return out.str();
}

std::string csv_cumulative(std::span<const DistributionRow> rows, int decimals)
{
    std::ostringstream out;
    out << "max_length,fibonacci,omega,wtc1\n";
    for (const auto& r : rows)
        out << r.max_length << ',' << fixed(r.mass_fib, decimals) << ',' << fixed(r.mass_omega, decimals)
            << ',' << fixed(r.mass_wtc1, decimals) << '\n';
    return out.str();
}

std::string csv_lead(std::span<const LeadRow> rows)
{
    std::ostringstream out;
    out << "N,fibonacci,omega,wtc1\n";
    for (const auto& r : rows) {
        out << to_decimal(r.n);
        for (const Code code : all_codes)
            out << ',' << r.length(code) << (r.leads(code) ? "*" : "");
        out << '\n';
    }
    return out.str();
}

std::string csv_bounds(std::span<const BoundsRow> rows, int decimals)
{
    std::ostringstream out;
    out << "N,length,lower,upper,approx,epsilon\n";
    for (const auto& r : rows)
        out << to_decimal(r.n) << ',' << r.length << ',' << fixed(2 * r.f_lower + 1, decimals) << ','
            << fixed(2 * r.f_upper + 1, decimals) << ',' << fixed(r.approx, decimals) << ','
            << fixed(r.eps, decimals) << '\n';
    return out.str();
}

}  // namespace uic::analysis
