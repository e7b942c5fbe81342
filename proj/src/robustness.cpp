#include "uic/robustness.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace uic::robustness {

BitString flip_bit(const BitString& bits, std::size_t index)
{
    return bits.flipped(index);
}

const char* to_string(FaultStatus status) noexcept
{
    switch (status) {
    case FaultStatus::clean_decode:
        return "clean_decode";
    case FaultStatus::truncated_tail:
        return "truncated_tail";
    case FaultStatus::malformed_tail:
        return "malformed_tail";
    }
    return "unknown";
}

GreedyDecode decode_greedy(const Codec& codec, const BitString& bits)
{
    GreedyDecode out;
    BitReader in(bits);
    while (!in.at_end()) {
        try {
            out.values.push_back(codec.decode(in));
        } catch (const DecodeError& e) {
            out.status = e.kind() == DecodeErrorKind::truncated ? FaultStatus::truncated_tail
                                                                : FaultStatus::malformed_tail;
            break;
        }
    }
    return out;
}

std::size_t edit_distance(std::span<const BigInt> a, std::span<const BigInt> b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

namespace {

FaultReport fault_on(const Codec& codec, std::span<const BigInt> values, const BitString& clean,
                     std::optional<std::size_t> index)
{
    FaultReport report;
    report.flipped_index = index;
    report.original.assign(values.begin(), values.end());
    GreedyDecode got = decode_greedy(codec, index ? clean.flipped(*index) : clean);
    report.decoded = std::move(got.values);
    report.status = got.status;
    report.affected_count = edit_distance(report.original, report.decoded);
    return report;
}

}  // namespace

FaultReport run_fault(const Codec& codec, std::span<const BigInt> values,
                      std::optional<std::size_t> index)
{
    const BitString clean = encode_sequence(codec, values);
    if (index && *index >= clean.size())
        throw IndexError("flip index " + std::to_string(*index) + " outside a stream of " +
                         std::to_string(clean.size()) + " bits");
    return fault_on(codec, values, clean, index);
}

std::vector<FaultReport> fault_sweep(const Codec& codec, std::span<const BigInt> values)
{
    const BitString clean = encode_sequence(codec, values);
    std::vector<FaultReport> reports(clean.size());
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    if (clean.size() < 64 || workers == 1) {
        for (std::size_t i = 0; i < clean.size(); ++i)
            reports[i] = fault_on(codec, values, clean, i);
        return reports;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < clean.size(); i += workers)
                reports[i] = fault_on(codec, values, clean, i);
        }));
    }
    for (auto& job : jobs)
        job.get();
    return reports;
}

}  // namespace uic::robustness
