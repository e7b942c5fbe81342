#include "uic/container.hpp"

#include <algorithm>

#include "uic/registry.hpp"

namespace uic {

namespace {

void put_le64(std::vector<std::uint8_t>& out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le64(std::span<const std::uint8_t> in)
{
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | in[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace

std::vector<std::uint8_t> serialize(const Container& c)
{
    const PackedBits packed = pack_bytes(c.payload);
    std::vector<std::uint8_t> out(container_magic.begin(), container_magic.end());
    out.push_back(c.codec);
    put_le64(out, c.count);
    put_le64(out, packed.bit_count);
    out.insert(out.end(), packed.bytes.begin(), packed.bytes.end());
    return out;
}

Container parse_container(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < container_header_size)
        throw ContainerError("container too short for header");
    if (!std::equal(container_magic.begin(), container_magic.end(), bytes.begin()))
        throw ContainerError("bad container magic");
    Container c;
    c.codec = bytes[4];
    codec_id_from_wire(c.codec);  // validates
    c.count = get_le64(bytes.subspan(5, 8));
    const std::uint64_t bit_count = get_le64(bytes.subspan(13, 8));
    const auto payload = bytes.subspan(container_header_size);
    if (payload.size() != (bit_count + 7) / 8)
        throw ContainerError("payload size " + std::to_string(payload.size()) +
                             " bytes does not match bit count " + std::to_string(bit_count));
    c.payload = unpack_bytes(payload, bit_count);
    return c;
}

Container encode_container(std::string_view codec_id, std::span<const BigInt> values)
{
    const CodecPtr codec = make_codec(codec_id);
    Container c;
    c.codec = wire_id(codec_id);
    c.count = values.size();
    c.payload = encode_sequence(*codec, values);
    return c;
}

std::vector<BigInt> decode_container(const Container& c)
{
    const CodecPtr codec = make_codec(codec_id_from_wire(c.codec));
    return decode_sequence(*codec, c.payload, static_cast<std::size_t>(c.count));
}

}  // namespace uic
