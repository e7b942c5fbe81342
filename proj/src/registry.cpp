#include "uic/registry.hpp"

#include <array>
#include <stdexcept>

#include "uic/elias.hpp"
#include "uic/fibonacci.hpp"
#include "uic/wtc.hpp"

namespace uic {

namespace {

struct Entry {
    std::string_view id;
    std::uint8_t wire;
    CodecPtr (*make)();
};

constexpr std::string_view zigzag_prefix = "zigzag:";
constexpr std::uint8_t zigzag_bit = 0x80;

const std::array<Entry, 9>& entries()
{
    static const std::array<Entry, 9> table{{
        {"fib", 1, [] { return fibonacci::codec(); }},
        {"omega", 2, [] { return elias::omega(); }},
        {"omega2", 3, [] { return elias::omega2(); }},
        {"omega-star", 4, [] { return elias::omega_star(); }},
        {"omega-p:fib", 5, [] { return elias::omega_p(fibonacci::codec()); }},
        {"wtc0", 6, [] { return wtc::wtc0(); }},
        {"wtc1", 7, [] { return wtc::wtc1(); }},
        {"omega-p:unary", 8, [] { return elias::omega_p(elias::unary()); }},
        {"unary", 9, [] { return elias::unary(); }},
    }};
    return table;
}

const Entry& find(std::string_view id)
{
    for (const auto& e : entries())
        if (e.id == id)
            return e;
    throw std::invalid_argument("unknown codec '" + std::string(id) + "'");
}

}  // namespace

CodecPtr make_codec(std::string_view id)
{
    if (id.starts_with(zigzag_prefix))
        return zigzag(find(id.substr(zigzag_prefix.size())).make());
    return find(id).make();
}

std::uint8_t wire_id(std::string_view id)
{
    if (id.starts_with(zigzag_prefix))
        return zigzag_bit | find(id.substr(zigzag_prefix.size())).wire;
    return find(id).wire;
}

std::string codec_id_from_wire(std::uint8_t wire)
{
    const bool zz = (wire & zigzag_bit) != 0;
    const std::uint8_t base = wire & static_cast<std::uint8_t>(~zigzag_bit);
    for (const auto& e : entries())
        if (e.wire == base)
            return (zz ? std::string(zigzag_prefix) : std::string()) + std::string(e.id);
    throw std::invalid_argument("unknown codec id " + std::to_string(wire));
}

std::vector<std::string> codec_ids()
{
    std::vector<std::string> out;
    for (const auto& e : entries())
        out.emplace_back(e.id);
    return out;
}

}  // namespace uic
