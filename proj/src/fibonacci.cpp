#include "uic/fibonacci.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace uic::fibonacci {

namespace {

class FibTable {
public:
    static FibTable& instance()
    {
        static FibTable table;
        return table;
    }

    const BigNat& at(std::size_t j)
    {
        {
            std::shared_lock lock(mutex_);
            if (j < values_.size())
                return values_[j];
        }
        std::unique_lock lock(mutex_);
        grow_locked(j + 1);
        return values_[j];
    }

    std::size_t largest_index_not_above(const BigNat& n)
    {
        for (;;) {
            {
                std::shared_lock lock(mutex_);
                if (values_.back() > n) {
                    // F is strictly increasing from index 1 on.
                    auto it = std::upper_bound(values_.begin() + 1, values_.end(), n);
                    return static_cast<std::size_t>(it - values_.begin()) - 1;
                }
            }
            std::unique_lock lock(mutex_);
            grow_locked(values_.size() * 2);
        }
    }

private:
    FibTable() : values_{BigNat(1), BigNat(1)} { grow_locked(96); }

    void grow_locked(std::size_t size)
    {
        // deque keeps references to existing elements valid while growing
        while (values_.size() < size)
            values_.push_back(values_[values_.size() - 1] + values_[values_.size() - 2]);
    }

    std::shared_mutex mutex_;
    std::deque<BigNat> values_;
};

class FibonacciCodec final : public Codec {
public:
    std::string name() const override { return "fib"; }
    BigNat count_by_length(std::uint64_t bits) const override { return fibonacci::count_by_length(bits); }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override { fibonacci::encode_to(out, n); }
    BigInt do_decode(BitReader& in) const override { return fibonacci::decode(in); }
    std::uint64_t do_length(const BigInt& n) const override { return fibonacci::length(n); }
};

void require_positive(const BigNat& n)
{
    if (n < 1)
        throw DomainError("fib: " + to_decimal(n) + " is below the domain minimum 1");
}

}  // namespace

const BigNat& fib(std::size_t j) { return FibTable::instance().at(j); }

std::size_t largest_index_not_above(const BigNat& n)
{
    require_positive(n);
    return FibTable::instance().largest_index_not_above(n);
}

void encode_to(BitWriter& out, const BigNat& n)
{
    const std::size_t top = largest_index_not_above(n);
    // bits[k] for k = 1..top, then the closing '1' at top + 1
    std::vector<bool> bits(top + 2, false);
    BigNat rest = n;
    std::size_t j = top;
    while (sgn(rest) > 0) {
        while (fib(j) > rest)
            --j;
        bits[j] = true;
        rest -= fib(j);
        --j;  // Zeckendorf: the next index is at most j - 1 below this one
    }
    bits[top + 1] = true;
    for (std::size_t k = 1; k <= top + 1; ++k)
        out.push_back(bits[k]);
}

BitString encode(const BigNat& n)
{
    BitWriter w;
    encode_to(w, n);
    return std::move(w).finish();
}

BigNat decode(BitReader& in)
{
    const std::size_t start = in.position();
    BigNat value;
    bool previous = false;
    for (std::size_t k = 1;; ++k) {
        if (in.at_end()) {
            const std::size_t consumed = in.position() - start;
            in.seek(start);
            throw TruncatedError(consumed + 1, consumed);
        }
        const bool bit = in.read_bit();
        if (bit && previous)
            return value;
        if (bit)
            value += fib(k);
        previous = bit;
    }
}

Decoded decode_prefix(const BitString& bits)
{
    BitReader r(bits);
    BigNat v = decode(r);
    return {std::move(v), r.position()};
}

std::uint64_t length(const BigNat& n) { return largest_index_not_above(n) + 1; }

BigNat count_by_length(std::uint64_t bits)
{
    if (bits < 2)
        return 0;
    return fib(static_cast<std::size_t>(bits - 2));
}

CodecPtr codec()
{
    static const CodecPtr instance = std::make_shared<FibonacciCodec>();
    return instance;
}

}  // namespace uic::fibonacci
