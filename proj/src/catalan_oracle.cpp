#include "uic/catalan_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uic/elias.hpp"
#include "uic/wtc.hpp"

namespace uic::analysis {

namespace {

// Below this many forks the exact tables are cheap and the Stirling series
// is not yet accurate to double precision.
constexpr std::size_t exact_forks = 200;

// Stirling correction: ln Gamma(z + 1) - (z ln z - z + ln(2 pi z) / 2).
double stirling_tail(double z)
{
    const double z2 = z * z;
    return (1.0 / 12 - (1.0 / 360 - (1.0 / 1260 - 1.0 / (1680 * z2)) / z2) / z2) / z;
}

Log2Split exact_split(const BigNat& v)
{
    const std::uint64_t bits = bit_length(v);
    Log2Split out;
    out.whole = static_cast<std::int64_t>(bits) - 1;
    // v / 2^(bits-1) in [1, 2)
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    out.correction = std::log2(mant) + 1;
    return out;
}

// cC_f / C_f = 1 + C_{f-1}/C_f + C_{f-2}/C_f + ...
double cumulative_ratio(std::size_t forks)
{
    double sum = 1;
    double term = 1;
    for (std::size_t m = forks; m >= 1; --m) {
        term *= static_cast<double>(m + 1) / static_cast<double>(2 * (2 * m - 1));
        sum += term;
        if (term < 1e-20 * sum)
            break;
    }
    return sum;
}

}  // namespace

std::uint64_t Log2Split::bit_length() const
{
    return static_cast<std::uint64_t>(whole + static_cast<std::int64_t>(std::floor(correction)) + 1);
}

double Log2Split::boundary_margin() const
{
    const double frac = correction - std::floor(correction);
    return std::min(frac, 1 - frac);
}

Log2Split log2_catalan(std::size_t forks)
{
    if (forks < exact_forks)
        return exact_split(wtc::catalan(forks));
    // ln C_f = 2f ln 2 - ln(pi)/2 - ln(f)/2 - ln(f + 1) + S(2f) - 2 S(f)
    const double f = static_cast<double>(forks);
    const double ln_f = std::log(f);
    const double rest = -0.5 * std::log(std::numbers::pi) - 0.5 * ln_f - (ln_f + std::log1p(1 / f)) +
                        stirling_tail(2 * f) - 2 * stirling_tail(f);
    Log2Split out;
    out.whole = 2 * static_cast<std::int64_t>(forks);
    out.correction = rest / std::numbers::ln2;
    return out;
}

Log2Split log2_ccatalan(std::size_t forks)
{
    if (forks < exact_forks)
        return exact_split(wtc::ccatalan(static_cast<std::int64_t>(forks)));
    Log2Split out = log2_catalan(forks);
    out.correction += std::log2(cumulative_ratio(forks));
    return out;
}

OracleBlockEnd oracle_block_end(std::size_t forks)
{
    const Log2Split lg = log2_ccatalan(forks);
    OracleBlockEnd out;
    out.forks = forks;
    out.wtc_length = 2 * forks + 1;
    out.bit_length = lg.bit_length();
    out.omega_length = elias::omega_length_for_bit_length(out.bit_length);
    out.margin = lg.boundary_margin();
    return out;
}

BlockEndScan scan_block_end_crossover(std::size_t after, std::size_t up_to, std::size_t exact_below)
{
    BlockEndScan scan;
    scan.exact_below = exact_below;
    for (std::size_t f = after + 1; f <= up_to; ++f) {
        std::uint64_t omega_len;
        if (f < exact_below) {
            omega_len = elias::omega_length(wtc::ccatalan(static_cast<std::int64_t>(f)));
        } else {
            const OracleBlockEnd o = oracle_block_end(f);
            omega_len = o.omega_length;
            if (o.margin < scan.min_margin) {
                scan.min_margin = o.margin;
                scan.min_margin_forks = f;
            }
        }
        if (2 * f + 1 > omega_len) {
            scan.first = f;
            break;
        }
    }
    return scan;
}

std::optional<std::uint64_t> exact_ccatalan_bit_length(std::size_t forks, std::size_t terms)
{
    BigNat c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * forks, forks);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), forks + 1);
    BigNat sum;
    std::size_t m = forks;
    for (std::size_t k = 0; k < terms; ++k) {
        sum += c;
        if (m == 0)
            return bit_length(sum);
        // C_{m-1} = C_m (m + 1) / (2 (2m - 1))
        c *= static_cast<unsigned long>(m + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2 * (2 * m - 1));
        --m;
    }
    if (m == 0)
        return bit_length(BigNat(sum + c));
    // the rest is cC_m <= 2 C_m
    const BigNat upper = sum + 2 * c;
    if (bit_length(sum) != bit_length(upper))
        return std::nullopt;
    return bit_length(sum);
}

}  // namespace uic::analysis
