#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uic/analysis.hpp"
#include "uic/catalan_oracle.hpp"
#include "uic/container.hpp"
#include "uic/fibonacci.hpp"
#include "uic/registry.hpp"
#include "uic/robustness.hpp"
#include "uic/wtc.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through base 16, which CPython converts in
// linear time and without the decimal digit limit.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        object text = reinterpret_steal<object>(PyNumber_ToBase(src.ptr(), 16));
        if (!text)
            return false;
        std::string s = text.cast<std::string>();
        const bool negative = !s.empty() && s[0] == '-';
        s.erase(0, negative ? 3 : 2);  // "-0x" / "0x"
        value.set_str(s, 16);
        if (negative)
            value = -value;
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle)
    {
        const std::string s = v.get_str(16);
        return PyLong_FromString(s.c_str(), nullptr, 16);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace uic;

py::dict fault_dict(const robustness::FaultReport& r)
{
    py::dict d;
    d["flipped_index"] = r.flipped_index;
    d["original"] = r.original;
    d["decoded"] = r.decoded;
    d["status"] = robustness::to_string(r.status);
    d["affected_count"] = r.affected_count;
    return d;
}

}  // namespace

PYBIND11_MODULE(uicodes, m)
{
    m.doc() = "Universal codes for integers: Fibonacci, Elias omega variants, Wallace tree code";

    // std::out_of_range (IndexError) and std::invalid_argument map to the
    // builtin IndexError and ValueError already
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<ContainerError>(m, "ContainerError", PyExc_ValueError);

    m.def("codec_ids", &codec_ids, "Registered base codec ids");
    m.def(
        "encode", [](const std::string& codec, const mpz_class& n) { return make_codec(codec)->encode(n).to_text(); },
        py::arg("codec"), py::arg("n"), "Code-word of n as a '0'/'1' string");
    m.def(
        "decode",
        [](const std::string& codec, const std::string& bits) {
            const auto d = make_codec(codec)->decode_prefix(BitString::from_text(bits));
            return py::make_tuple(d.value, d.consumed);
        },
        py::arg("codec"), py::arg("bits"), "Decode one code-word from the front: (value, bits consumed)");
    m.def(
        "length", [](const std::string& codec, const mpz_class& n) { return make_codec(codec)->length(n); },
        py::arg("codec"), py::arg("n"));
    m.def(
        "encode_sequence",
        [](const std::string& codec, const std::vector<mpz_class>& xs) {
            return encode_sequence(*make_codec(codec), xs).to_text();
        },
        py::arg("codec"), py::arg("values"));
    m.def(
        "decode_sequence",
        [](const std::string& codec, const std::string& bits, std::optional<std::size_t> count) {
            return decode_sequence(*make_codec(codec), BitString::from_text(bits), count);
        },
        py::arg("codec"), py::arg("bits"), py::arg("count") = py::none());

    m.def(
        "encode_container",
        [](const std::string& codec, const std::vector<mpz_class>& xs) {
            const auto bytes = serialize(encode_container(codec, xs));
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("codec"), py::arg("values"));
    m.def(
        "decode_container",
        [](const py::bytes& data) {
            const std::string s = data;
            const auto c = parse_container(
                std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
            return py::make_tuple(codec_id_from_wire(c.codec), decode_container(c));
        },
        py::arg("data"), "(codec id, values)");

    m.def("fib", [](std::size_t j) { return fibonacci::fib(j); }, py::arg("j"));
    m.def("catalan", [](std::size_t f) { return wtc::catalan(f); }, py::arg("f"));
    m.def("ccatalan", [](std::int64_t f) { return wtc::ccatalan(f); }, py::arg("f"));

    m.def(
        "flip_bit", [](const std::string& bits, std::size_t i) {
            return robustness::flip_bit(BitString::from_text(bits), i).to_text();
        },
        py::arg("bits"), py::arg("index"));
    m.def(
        "run_fault",
        [](const std::string& codec, const std::vector<mpz_class>& xs, std::optional<std::size_t> index) {
            return fault_dict(robustness::run_fault(*make_codec(codec), xs, index));
        },
        py::arg("codec"), py::arg("values"), py::arg("index") = py::none());

    m.def(
        "lengths",
        [](const mpz_class& n) {
            const auto r = analysis::lead_row(n);
            py::dict d;
            d["fibonacci"] = r.len_fib;
            d["omega"] = r.len_omega;
            d["wtc1"] = r.len_wtc1;
            py::list leaders;
            for (const auto code : analysis::all_codes)
                if (r.leads(code))
                    leaders.append(std::string(analysis::code_name(code)));
            d["leaders"] = leaders;
            return d;
        },
        py::arg("n"), "Fibonacci, omega and WTC1 lengths of n and which are shortest");
    m.def(
        "cumulative",
        [](std::uint64_t max_length) {
            const std::uint64_t one[] = {max_length};
            const auto r = analysis::cumulative_table(one).front();
            return py::make_tuple(r.mass_fib, r.mass_omega, r.mass_wtc1);
        },
        py::arg("max_length"), "Implied probability of code-words up to max_length bits");
    m.def("epsilon", [](const mpz_class& n) { return analysis::epsilon(n); }, py::arg("n"));
    m.def("f_upper", [](const mpz_class& n) { return analysis::f_upper(n); }, py::arg("n"));
    m.def("f_lower", [](const mpz_class& n) { return analysis::f_lower(n); }, py::arg("n"));
    m.def(
        "crossover_check",
        [](std::size_t forks) {
            const auto r = analysis::crossover_check(forks);
            py::dict d;
            d["block_start"] = r.block_start;
            d["block_end"] = r.block_end;
            d["wtc_start"] = r.wtc_start;
            d["omega_start"] = r.omega_start;
            d["wtc_end"] = r.wtc_end;
            d["omega_end"] = r.omega_end;
            return d;
        },
        py::arg("forks"));
    m.def(
        "oracle_block_end",
        [](std::size_t forks) {
            const auto o = analysis::oracle_block_end(forks);
            py::dict d;
            d["wtc_length"] = o.wtc_length;
            d["omega_length"] = o.omega_length;
            d["bit_length"] = o.bit_length;
            d["margin"] = o.margin;
            return d;
        },
        py::arg("forks"));
}
