#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uic/codec.hpp"

// Elias omega and its generalizations.
//
// An omega code-word is zero or more length sections followed by one value
// section (the binary form of N). The first bit of every section would be a
// '1' and is used as a flag instead: '0' for a length section, '1' for the
// value section. The first length section is always "0" (standing for one);
// each section holds one less than the length of the next.
//
// omega_p(s) moves those flag bits out: each section loses its first bit and
// the code-word is prefixed by s.encode(number of sections). omega_r(t)
// applies the same trick recursively to the section count and uses t for
// the number of recursion layers.
namespace uic::elias {

// Sections of omega(N) in stream order, flag bits included.
struct SectionChain {
    std::vector<BitString> sections;

    std::size_t section_count() const noexcept { return sections.size(); }
};

SectionChain omega_sections(const BigNat& n);

// Values carried by the sections of omega(N), outermost first: 1, ..., N.
// Section i+1 has bit_length(values[i]) + 1 bits; the last one is N itself.
std::vector<BigNat> section_values(const BigNat& n);

std::uint64_t section_count(const BigNat& n);
BigNat section_count_for_bit_length(const BigNat& bits);

BitString omega_encode(const BigNat& n);
void omega_encode_to(BitWriter& out, const BigNat& n);
BigNat omega_decode(BitReader& in);
Decoded omega_decode_prefix(const BitString& bits);

// |omega(N)|: 1 for N = 1, else s + |omega(s - 1)| with s = bit_length(N).
std::uint64_t omega_length(const BigNat& n);
// Same, given only the bit length s of N (s >= 1). The BigNat overload
// handles integers too large to materialize.
std::uint64_t omega_length_for_bit_length(std::uint64_t s);
BigNat omega_length_for_bit_length(const BigNat& s);

CodecPtr omega();
CodecPtr unary();          // k -> (k - 1) zeros then '1'
CodecPtr omega_p(CodecPtr section_code);
CodecPtr omega_r(CodecPtr layer_code);
CodecPtr omega2();         // omega_p(omega)
CodecPtr omega_star();     // omega_r(omega)

BitString omega_p_encode(const Codec& section_code, const BigNat& n);
Decoded omega_p_decode_prefix(const Codec& section_code, const BitString& bits);
BitString omega_r_encode(const Codec& layer_code, const BigNat& n);
Decoded omega_r_decode_prefix(const Codec& layer_code, const BitString& bits);

// Code-word lengths of omega_p(s) and omega_r(t) for any N with bit length s.
BigNat omega_p_length_for_bit_length(const Codec& section_code, const BigNat& s);
BigNat omega_r_length_for_bit_length(const Codec& layer_code, const BigNat& s);

// c + log2(N) + log2(log2(N)) + ..., keeping only positive terms.
double log_star_length(const BigNat& n, double c);

}  // namespace uic::elias
