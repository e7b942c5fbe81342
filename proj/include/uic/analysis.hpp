#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uic/codec.hpp"

namespace uic::analysis {

// The three codes compared throughout the analysis.
enum class Code { fibonacci, omega, wtc1 };

inline constexpr Code all_codes[] = {Code::fibonacci, Code::omega, Code::wtc1};

std::string_view code_name(Code code);
CodecPtr code_codec(Code code);
std::uint64_t code_length(Code code, const BigNat& n);

// ---------------------------------------------------------------------------
// Implied distributions: Pr(N) = 2^-|w(N)|.

// Exact probability mass of the integers whose code-words have exactly `bits`
// bits, count_by_length(bits) / 2^bits.
mpq_class implied_mass(const Codec& codec, std::uint64_t bits);

// Exact cumulative masses up to and including code-words of `max_length` bits.
mpq_class cumulative_fibonacci(std::uint64_t max_length);
mpq_class cumulative_omega(std::uint64_t max_length);

struct WtcCumulative {
    double mass = 0;
    double error_bound = 0;  // absolute; zero when the sum is exact
    bool exact = true;
};

// Sum of C_f / 2^(2f+1) over 2f + 1 <= max_length. Terms up to f =
// exact_forks are summed exactly; later ones use the ratio
// t_{f+1} / t_f = (2f + 1) / (2(f + 2)) in floating point.
WtcCumulative cumulative_wtc1(std::uint64_t max_length, std::size_t exact_forks = 5000);

struct DistributionRow {
    std::uint64_t max_length = 0;
    double mass_fib = 0;
    double mass_omega = 0;
    double mass_wtc1 = 0;
    double wtc1_error_bound = 0;
};

std::vector<DistributionRow> cumulative_table(std::span<const std::uint64_t> max_lengths,
                                              std::size_t exact_wtc_forks = 5000);

// ---------------------------------------------------------------------------
// Comparative lengths.

struct LeadRow {
    BigNat n;
    std::uint64_t len_fib = 0;
    std::uint64_t len_omega = 0;
    std::uint64_t len_wtc1 = 0;
    unsigned leaders = 0;  // bit i set when all_codes[i] attains the minimum

    std::uint64_t length(Code code) const;
    bool leads(Code code) const { return (leaders >> static_cast<unsigned>(code)) & 1u; }
};

LeadRow lead_row(const BigNat& n);
std::vector<LeadRow> lead_table(std::span<const BigNat> ns);

// WTC1 and omega lengths at both ends of the WTC1 block of f forks,
// i.e. N in [cC_{f-1} + 1, cC_f], computed exactly.
struct CrossoverRecord {
    std::size_t forks = 0;
    BigNat block_start;
    BigNat block_end;
    std::uint64_t wtc_start = 0;
    std::uint64_t wtc_end = 0;
    std::uint64_t omega_start = 0;
    std::uint64_t omega_end = 0;
};

CrossoverRecord crossover_check(std::size_t forks);

enum class BlockEdge { start, end };
enum class Relation { equal, wtc_longer };

// Smallest f in (after, up_to] where the relation holds at the given block
// edge, by exact evaluation.
std::optional<std::size_t> first_crossover(BlockEdge edge, Relation relation, std::size_t after,
                                           std::size_t up_to);

// Integers inside both the WTC1 block of f forks and the omega block of
// value-section width s, as an inclusive range.
struct Range {
    BigNat lo;
    BigNat hi;
};
std::optional<Range> shared_block(std::size_t forks, std::uint64_t value_bits);

// ---------------------------------------------------------------------------
// Asymptotics of the WTC1 length L(N) = 2 f(N) + 1.

// Upper and lower estimates of f(N) (natural logarithms); N >= 5.
double f_upper(const BigNat& n);
double f_lower(const BigNat& n);

// L(N) - log2 N - 1.5 log2 log2 N, N >= 2.
double epsilon(const BigNat& n);

// 1 for N = 0, 3 for N = 1, else log2 N + 1.5 log2 log2 N + c.
double length_approx(const BigNat& n, double c);

inline constexpr double approx_c_upper = 2.0;
inline constexpr double approx_c_lower = -0.5;
inline constexpr double approx_c_average = 0.75;

// log2 of the closed-form lower and upper bounds on cC_f, f >= 1:
// 4^(f+1) / (3 (f+1) sqrt(pi f)) < cC_f < 4^(f+1) / (3 sqrt(pi f^3)).
struct CcBounds {
    double log2_lower = 0;
    double log2_upper = 0;
};
CcBounds cc_bounds(std::size_t forks);

struct BoundsRow {
    BigNat n;
    std::uint64_t length = 0;
    double f_upper = 0;
    double f_lower = 0;
    double eps = 0;
    double approx = 0;  // length_approx(n, c)
};

BoundsRow bounds_row(const BigNat& n, double c = approx_c_average);

// N = round(10^(k / per_decade)) for k = 0 .. decades * per_decade, kept >= 5
// and deduplicated.
std::vector<BigNat> log_grid(unsigned decades, unsigned per_decade);

// ---------------------------------------------------------------------------
// CSV reports: header row then one row per entry, '\n' line ends.

std::string csv_codewords(std::span<const BigNat> ns);
std::string csv_lengths(std::span<const BigNat> ns);
std::string csv_cumulative(std::span<const DistributionRow> rows, int decimals = 4);
std::string csv_lead(std::span<const LeadRow> rows);
std::string csv_bounds(std::span<const BoundsRow> rows, int decimals = 4);

}  // namespace uic::analysis
