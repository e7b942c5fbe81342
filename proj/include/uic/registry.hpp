#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uic/codec.hpp"

namespace uic {

// Codec identifiers shared by the CLI, the container format and the Python
// module. Wire ids are append-only:
//
//   1 fib          4 omega-star     7 wtc1
//   2 omega        5 omega-p:fib    8 omega-p:unary
//   3 omega2       6 wtc0           9 unary
//
// "zigzag:<inner>" has wire id 0x80 | id(inner).
CodecPtr make_codec(std::string_view id);

std::uint8_t wire_id(std::string_view id);
std::string codec_id_from_wire(std::uint8_t wire);

// Base codec ids (no zigzag forms), in wire-id order.
std::vector<std::string> codec_ids();

}  // namespace uic
