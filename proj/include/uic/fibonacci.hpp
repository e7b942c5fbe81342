#pragma once

#include <cstddef>
#include <cstdint>

#include "uic/codec.hpp"

// Fibonacci (Zeckendorf) code for N >= 1. Bit k (1-based) of a code-word is
// set when F_k takes part in the greedy decomposition of N; a final '1' closes
// the code-word, so every code-word ends in "11" and contains no other "11".
namespace uic::fibonacci {

// F_0 = F_1 = 1, F_j = F_{j-1} + F_{j-2}. Memoized; safe for concurrent use.
const BigNat& fib(std::size_t j);

// Largest j >= 1 with F_j <= n (n >= 1).
std::size_t largest_index_not_above(const BigNat& n);

BitString encode(const BigNat& n);
void encode_to(BitWriter& out, const BigNat& n);
BigNat decode(BitReader& in);
Decoded decode_prefix(const BitString& bits);

std::uint64_t length(const BigNat& n);

// Code-words of exactly `bits` bits: F_{bits-2}, or 0 below two bits.
BigNat count_by_length(std::uint64_t bits);

CodecPtr codec();

}  // namespace uic::fibonacci
