#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uic/bitstream.hpp"
#include "uic/codec.hpp"

// Binary container for an encoded integer sequence:
//
//   offset  size  field
//   0       4     magic "UIC1"
//   4       1     codec wire id (see registry.hpp)
//   5       8     count of code-words, little-endian
//   13      8     payload bit count, little-endian
//   21      n     payload, MSB-first, ceil(bit_count / 8) bytes
namespace uic {

inline constexpr std::array<std::uint8_t, 4> container_magic{'U', 'I', 'C', '1'};
inline constexpr std::size_t container_header_size = 21;

class ContainerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Container {
    std::uint8_t codec = 0;
    std::uint64_t count = 0;
    BitString payload;
};

std::vector<std::uint8_t> serialize(const Container& c);
Container parse_container(std::span<const std::uint8_t> bytes);

Container encode_container(std::string_view codec_id, std::span<const BigInt> values);
// Decodes exactly `count` code-words spanning exactly the payload.
std::vector<BigInt> decode_container(const Container& c);

}  // namespace uic
