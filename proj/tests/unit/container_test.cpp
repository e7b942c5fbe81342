#include <gtest/gtest.h>

#include "uic/container.hpp"
#include "uic/registry.hpp"

using namespace uic;

namespace {
std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST(Registry, WireIds)
{
    EXPECT_EQ(wire_id("fib"), 1);
    EXPECT_EQ(wire_id("omega"), 2);
    EXPECT_EQ(wire_id("omega2"), 3);
    EXPECT_EQ(wire_id("omega-star"), 4);
    EXPECT_EQ(wire_id("omega-p:fib"), 5);
    EXPECT_EQ(wire_id("wtc0"), 6);
    EXPECT_EQ(wire_id("wtc1"), 7);
    EXPECT_EQ(wire_id("omega-p:unary"), 8);
    EXPECT_EQ(wire_id("unary"), 9);
    EXPECT_EQ(wire_id("zigzag:wtc0"), 0x86);
    for (const auto& id : codec_ids()) {
        EXPECT_EQ(codec_id_from_wire(wire_id(id)), id);
        EXPECT_EQ(codec_id_from_wire(wire_id("zigzag:" + id)), "zigzag:" + id);
    }
    EXPECT_THROW((void)make_codec("nope"), std::invalid_argument);
    EXPECT_THROW((void)codec_id_from_wire(0x55), std::invalid_argument);
}

TEST(Container, Layout)
{
    const auto c = encode_container("fib", ints({9, 2}));
    EXPECT_EQ(c.payload.to_text(), "100011011");
    const auto bytes = serialize(c);
    ASSERT_EQ(bytes.size(), container_header_size + 2);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "UIC1");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[5], 2);  // count, little-endian
    for (int i = 6; i < 13; ++i)
        EXPECT_EQ(bytes[i], 0);
    EXPECT_EQ(bytes[13], 9);  // bit count
    EXPECT_EQ(bytes[21], 0x8D);
    EXPECT_EQ(bytes[22], 0x80);
}

TEST(Container, RoundTrips)
{
    const std::pair<const char*, std::vector<BigInt>> cases[] = {
        {"wtc1", ints({24})},
        {"fib", ints({9, 2})},
        {"omega", ints({1})},
        {"zigzag:wtc0", ints({0, -5, 7, -1000000})},
        {"omega-star", ints({36, 1, 2, 65536})},
    };
    for (const auto& [id, xs] : cases) {
        const auto c = encode_container(id, xs);
        const auto bytes = serialize(c);
        const auto back = parse_container(bytes);
        EXPECT_EQ(decode_container(back), xs) << id;
        EXPECT_EQ(serialize(encode_container(id, decode_container(back))), bytes) << id;
    }
    EXPECT_EQ(encode_container("wtc1", ints({24})).payload.to_text(), "10101010100");
    EXPECT_EQ(encode_container("omega", ints({1})).payload.size(), 1u);
}

TEST(Container, Corruption)
{
    auto bytes = serialize(encode_container("fib", ints({9, 2})));
    auto bad = bytes;
    bad[0] = 'X';
    EXPECT_THROW((void)parse_container(bad), ContainerError);
    EXPECT_THROW((void)parse_container(std::span(bytes).first(10)), ContainerError);
    bad = bytes;
    bad.push_back(0);
    EXPECT_THROW((void)parse_container(bad), ContainerError);

    // a longer bit count with a matching payload leaves bits over
    Container c = encode_container("fib", ints({9, 2}));
    c.payload = BitString::from_text("1000110110");
    try {
        (void)decode_container(parse_container(serialize(c)));
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.kind(), DecodeErrorKind::trailing_bits);
    }
    c.payload = BitString::from_text("10001101");
    EXPECT_THROW((void)decode_container(c), TruncatedError);
}
