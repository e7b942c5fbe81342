#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace uic {

// Arbitrary-precision integers. BigNat is used where only non-negative values
// are meaningful; BigInt where sign matters (zigzag). Both are GMP integers.
using BigNat = mpz_class;
using BigInt = mpz_class;

// Number of significant bits; 0 for zero.
inline std::uint64_t bit_length(const BigNat& n)
{
    return sgn(n) == 0 ? 0 : static_cast<std::uint64_t>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

inline bool bit_at(const BigNat& n, std::uint64_t i)
{
    return mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0;
}

inline BigNat from_u64(std::uint64_t v)
{
    BigNat out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

// Returns true and stores the value when n fits in 64 bits.
inline bool fits_u64(const BigNat& n, std::uint64_t& out)
{
    if (sgn(n) < 0 || bit_length(n) > 64)
        return false;
    out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, n.get_mpz_t());
    return true;
}

std::uint64_t to_u64(const BigNat& n);  // throws std::overflow_error

// Decimal parsing with optional leading '-'; throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

inline BigNat pow2(std::uint64_t e)
{
    BigNat out;
    mpz_setbit(out.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return out;
}

// Natural and binary logarithms of a positive integer, accurate for
// integers far beyond double range.
double log_e(const BigNat& n);
double log_2(const BigNat& n);

}  // namespace uic
