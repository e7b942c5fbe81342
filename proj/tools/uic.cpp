// uic: encode/decode integer streams, dump analysis tables, inject bit errors.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "uic/analysis.hpp"
#include "uic/catalan_oracle.hpp"
#include "uic/container.hpp"
#include "uic/registry.hpp"
#include "uic/robustness.hpp"

namespace {

using namespace uic;

// Error with a ready-to-print message; main() turns it into exit code 2.
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<BigInt> read_integers(std::istream& in)
{
    std::vector<BigInt> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        try {
            out.push_back(parse_decimal(line));
        } catch (const std::exception& e) {
            throw UsageFailure("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<BigInt> parse_all(const std::vector<std::string>& words)
{
    std::vector<BigInt> out;
    for (const auto& w : words)
        out.push_back(parse_decimal(w));
    return out;
}

std::string join(std::span<const BigInt> xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ' ';
        s += to_decimal(xs[i]);
    }
    return s;
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageFailure("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

int cmd_encode(const std::string& codec, const std::string& input, const std::string& output)
{
    std::vector<BigInt> values;
    if (input.empty() || input == "-") {
        values = read_integers(std::cin);
    } else {
        std::ifstream f(input);
        if (!f)
            throw UsageFailure("cannot open " + input);
        values = read_integers(f);
    }
    Container c;
    try {
        c = encode_container(codec, values);
    } catch (const SequenceDomainError& e) {
        // blank lines are skipped, so report the value's own line
        throw UsageFailure("value " + std::to_string(e.index() + 1) + ": " + e.what());
    }
    const auto bytes = serialize(c);
    std::ofstream out(output, std::ios::binary);
    if (!out)
        throw UsageFailure("cannot write " + output);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::cout << c.payload.size() << '\n';
    return 0;
}

int cmd_decode(const std::string& input)
{
    const Container c = parse_container(read_file(input));
    for (const auto& v : decode_container(c))
        std::cout << to_decimal(v) << '\n';
    return 0;
}

std::vector<BigNat> default_codeword_ns()
{
    std::vector<BigNat> ns;
    for (unsigned long n = 1; n <= 24; ++n)
        ns.emplace_back(n);
    ns.emplace_back(100);
    return ns;
}

std::vector<BigNat> default_length_ns()
{
    std::vector<BigNat> ns;
    BigNat p = 10;
    for (int k = 2; k <= 9; ++k)
        ns.push_back(p *= 10);
    BigNat googol;
    mpz_ui_pow_ui(googol.get_mpz_t(), 10, 100);
    ns.push_back(googol);
    return ns;
}

std::vector<BigNat> default_lead_ns()
{
    std::vector<BigNat> ns;
    for (unsigned long n : {1, 2, 3, 4, 13, 16, 610, 627, 1597, 2057, 4181, 6765, 6919, 8192,
                            10946, 16384, 17711, 23715, 28657, 32768, 46368, 65536, 82501})
        ns.emplace_back(n);
    return ns;
}

int cmd_table(const std::string& which, const std::vector<std::string>& values, std::string range,
              unsigned decades, unsigned per_decade, int decimals)
{
    std::vector<BigNat> ns;
    if (!range.empty()) {
        const auto dots = range.find("..");
        if (dots == std::string::npos)
            throw UsageFailure("--range expects A..B");
        const BigNat lo = parse_decimal(range.substr(0, dots));
        const BigNat hi = parse_decimal(range.substr(dots + 2));
        for (BigNat n = lo; n <= hi; ++n)
            ns.push_back(n);
    }
    for (const auto& v : parse_all(values))
        ns.push_back(v);

    if (which == "codewords") {
        std::cout << analysis::csv_codewords(ns.empty() ? default_codeword_ns() : ns);
    } else if (which == "lengths") {
        std::cout << analysis::csv_lengths(ns.empty() ? default_length_ns() : ns);
    } else if (which == "lead") {
        std::cout << analysis::csv_lead(analysis::lead_table(ns.empty() ? default_lead_ns() : ns));
    } else if (which == "cumulative") {
        std::vector<std::uint64_t> lengths;
        for (const auto& n : ns)
            lengths.push_back(to_u64(n));
        if (lengths.empty())
            lengths = {1, 2, 3, 4, 10, 100, 1000, 10000, 100000, 1000000};
        std::cout << analysis::csv_cumulative(analysis::cumulative_table(lengths), decimals);
    } else if (which == "bounds") {
        if (ns.empty())
            ns = analysis::log_grid(decades, per_decade);
        std::vector<analysis::BoundsRow> rows;
        for (const auto& n : ns)
            rows.push_back(analysis::bounds_row(n));
        std::cout << analysis::csv_bounds(rows, decimals);
    } else {
        throw UsageFailure("unknown table " + which);
    }
    return 0;
}

int cmd_flip(const std::string& codec_id, std::size_t at, const std::string& bits_text,
             const std::vector<std::string>& values)
{
    const CodecPtr codec = make_codec(codec_id);
    if (!bits_text.empty()) {
        const BitString bits = BitString::from_text(bits_text);
        const BitString flipped = robustness::flip_bit(bits, at);
        const auto got = robustness::decode_greedy(*codec, flipped);
        std::cout << "bits: " << flipped.to_text() << '\n'
                  << "decoded: " << join(got.values) << '\n'
                  << "status: " << robustness::to_string(got.status) << '\n';
        return 0;
    }
    const auto xs = parse_all(values);
    if (xs.empty())
        throw UsageFailure("flip needs integers or --bits");
    const auto report = robustness::run_fault(*codec, xs, at);
    std::cout << "original: " << join(report.original) << '\n'
              << "bits: " << robustness::flip_bit(encode_sequence(*codec, xs), at).to_text() << '\n'
              << "decoded: " << join(report.decoded) << '\n'
              << "status: " << robustness::to_string(report.status) << '\n'
              << "affected: " << report.affected_count << '\n';
    return 0;
}

int cmd_crossover(std::size_t from, std::size_t to)
{
    std::cout << "forks,block_start_wtc,block_start_omega,block_end_wtc,block_end_omega\n";
    for (std::size_t f = from; f <= to; ++f) {
        const auto r = analysis::crossover_check(f);
        std::cout << f << ',' << r.wtc_start << ',' << r.omega_start << ',' << r.wtc_end << ','
                  << r.omega_end << '\n';
    }
    return 0;
}

int cmd_oracle(std::size_t forks)
{
    const auto o = analysis::oracle_block_end(forks);
    std::cout << "forks: " << o.forks << '\n'
              << "bit_length(cC): " << o.bit_length << '\n'
              << "wtc1: " << o.wtc_length << '\n'
              << "omega: " << o.omega_length << '\n'
              << "margin: " << o.margin << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Universal integer codes"};
    app.require_subcommand(1);

    std::string codec, input, output;
    auto* enc = app.add_subcommand("encode", "Encode decimal integers (one per line) into a container");
    enc->add_option("--codec", codec, "Codec id")->required();
    enc->add_option("-i,--input", input, "Input text file (default: stdin)");
    enc->add_option("-o,--output", output, "Container file")->required();

    std::string container_path;
    auto* dec = app.add_subcommand("decode", "Print the integers stored in a container");
    dec->add_option("container", container_path)->required();

    std::string which = "codewords", range;
    std::vector<std::string> table_values;
    unsigned decades = 30, per_decade = 10;
    int decimals = 4;
    auto* tab = app.add_subcommand("table", "Emit an analysis table as CSV");
    tab->add_option("--which", which)
        ->check(CLI::IsMember({"codewords", "lengths", "cumulative", "lead", "bounds"}));
    tab->add_option("--range", range, "Inclusive range A..B");
    tab->add_option("values", table_values, "Explicit N (or code-word lengths for cumulative)");
    tab->add_option("--decades", decades, "bounds: decades of the log grid");
    tab->add_option("--per-decade", per_decade, "bounds: grid points per decade");
    tab->add_option("--decimals", decimals);

    std::string flip_codec, flip_bits;
    std::size_t flip_at = 0;
    std::vector<std::string> flip_values;
    auto* flip = app.add_subcommand("flip", "Flip one bit of an encoded stream and decode greedily");
    flip->add_option("--codec", flip_codec)->required();
    flip->add_option("--at", flip_at, "Bit index")->required();
    flip->add_option("--bits", flip_bits, "Raw bit stream instead of integers");
    flip->add_option("values", flip_values);

    std::size_t cross_from = 1, cross_to = 1;
    auto* cross = app.add_subcommand("crossover", "WTC1 vs omega lengths at the ends of WTC1 blocks");
    cross->add_option("--from", cross_from)->required();
    cross->add_option("--to", cross_to)->required();

    std::size_t oracle_forks = 0;
    auto* oracle = app.add_subcommand("oracle", "Floating-point block-end comparison for large fork counts");
    oracle->add_option("--forks", oracle_forks)->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc)
            return cmd_encode(codec, input, output);
        if (*dec)
            return cmd_decode(container_path);
        if (*tab)
            return cmd_table(which, table_values, range, decades, per_decade, decimals);
        if (*flip)
            return cmd_flip(flip_codec, flip_at, flip_bits, flip_values);
        if (*cross)
            return cmd_crossover(cross_from, cross_to);
        if (*oracle)
            return cmd_oracle(oracle_forks);
    } catch (const DecodeError& e) {
        std::cerr << "uic: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "uic: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
