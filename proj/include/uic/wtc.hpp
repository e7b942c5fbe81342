#pragma once

#include <cstddef>
#include <cstdint>

#include "uic/codec.hpp"

// Wallace Tree Code.
//
// A full binary tree written in prefix order ('1' per fork, '0' per leaf) is a
// self-delimiting code-word: it ends as soon as the zeros outnumber the ones.
// WTC0 numbers the trees by size (f forks, 2f + 1 bits) and then
// lexicographically, starting from 0; WTC1 is the same code shifted to N >= 1.
namespace uic::wtc {

// C_f, exact. Memoized in a table shared by all threads.
const BigNat& catalan(std::size_t f);

// cC_f = C_0 + ... + C_f; cC_{-1} = 0.
const BigNat& ccatalan(std::int64_t f);

// Lattice paths from (r, c) to the origin that never cross the diagonal:
// paths(r, c) = 0 if c > r, paths(r, 0) = 1, else
// paths(r - 1, c) + paths(r, c - 1). paths(f, f) = C_f.
// Small arguments come from a memoized triangular table.
BigNat paths(std::size_t r, std::size_t c);

// The same count from the ballot-number closed form
// (r - c + 1) / (r + 1) * binom(r + c, c).
BigNat paths_closed_form(std::size_t r, std::size_t c);

inline constexpr std::size_t paths_memo_rows = 256;

// Number of forks in the WTC0 code-word of n: the smallest f with cC_f > n.
std::size_t fork_count(const BigNat& n);

BitString wtc0_encode(const BigNat& n);
void wtc0_encode_to(BitWriter& out, const BigNat& n);
BigNat wtc0_decode(BitReader& in);
Decoded wtc0_decode_prefix(const BitString& bits);

std::uint64_t wtc0_length(const BigNat& n);
// 2f + 1 with f minimal such that cC_f > N - 1.
std::uint64_t wtc1_length(const BigNat& n);

CodecPtr wtc0();
CodecPtr wtc1();  // shift1(wtc0())

}  // namespace uic::wtc
