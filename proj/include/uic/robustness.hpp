#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uic/codec.hpp"

// Single-bit-flip fault injection on encoded sequences.
namespace uic::robustness {

BitString flip_bit(const BitString& bits, std::size_t index);

enum class FaultStatus {
    clean_decode,    // the corrupted stream split into whole code-words
    truncated_tail,  // the last code-word ran off the end
    malformed_tail,  // decoding stopped on impossible bits
};

const char* to_string(FaultStatus status) noexcept;

struct FaultReport {
    std::optional<std::size_t> flipped_index;  // nullopt: no flip
    std::vector<BigInt> original;
    std::vector<BigInt> decoded;  // every completed code-word
    FaultStatus status = FaultStatus::clean_decode;
    // unit-cost edit distance between original and decoded
    std::size_t affected_count = 0;
};

// Greedy decode that keeps every value read before the stream ends or breaks.
struct GreedyDecode {
    std::vector<BigInt> values;
    FaultStatus status = FaultStatus::clean_decode;
};

GreedyDecode decode_greedy(const Codec& codec, const BitString& bits);

std::size_t edit_distance(std::span<const BigInt> a, std::span<const BigInt> b);

FaultReport run_fault(const Codec& codec, std::span<const BigInt> values,
                      std::optional<std::size_t> index);

// One report per bit of the encoded stream, in bit order.
std::vector<FaultReport> fault_sweep(const Codec& codec, std::span<const BigInt> values);

}  // namespace uic::robustness
