#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

// Floating-point view of cumulative Catalan numbers for fork counts far past
// what exact arithmetic handles comfortably. log2 cC_f is carried as the
// exact integer 2f plus a real correction of modest size, so its fractional
// part keeps full double precision even for f in the tens of millions.
namespace uic::analysis {

struct Log2Split {
    std::int64_t whole = 0;  // exact integer part of the representation
    double correction = 0;   // log2 value = whole + correction

    // bit length of the integer this is log2 of
    std::uint64_t bit_length() const;
    // distance from the value to the nearest integer
    double boundary_margin() const;
};

// log2 C_f and log2 cC_f from the Stirling series. f >= 1.
Log2Split log2_catalan(std::size_t forks);
Log2Split log2_ccatalan(std::size_t forks);

// omega and WTC1 lengths at N = cC_f predicted from log2 cC_f.
struct OracleBlockEnd {
    std::size_t forks = 0;
    std::uint64_t wtc_length = 0;
    std::uint64_t omega_length = 0;
    std::uint64_t bit_length = 0;  // of cC_f
    double margin = 0;             // of log2 cC_f from an integer
};

OracleBlockEnd oracle_block_end(std::size_t forks);

struct BlockEndScan {
    std::optional<std::size_t> first;  // first f with |WTC1(cC_f)| > |omega(cC_f)|
    double min_margin = 1;             // smallest margin seen over the scan
    std::size_t min_margin_forks = 0;
    std::size_t exact_below = 0;       // forks below this were checked exactly
};

// Scans f in (after, up_to]. Fork counts below `exact_below` are evaluated
// with exact integers; the rest use the oracle.
BlockEndScan scan_block_end_crossover(std::size_t after, std::size_t up_to,
                                      std::size_t exact_below = 2000);

// Exact bit length of cC_f from exact C_f, ..., C_{f-terms+1} and the bound
// cC_{f-terms} <= 2 C_{f-terms}. nullopt if the bound cannot settle it.
// About half a second at f = 1.4e7.
std::optional<std::uint64_t> exact_ccatalan_bit_length(std::size_t forks, std::size_t terms = 64);

}  // namespace uic::analysis
