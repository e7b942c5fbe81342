#include "uic/wtc.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace uic::wtc {

namespace {

class CatalanTables {
public:
    static CatalanTables& instance()
    {
        static CatalanTables tables;
        return tables;
    }

    const BigNat& catalan(std::size_t f)
    {
        ensure(f + 1);
        std::shared_lock lock(mutex_);
        return catalan_[f];
    }

    const BigNat& ccatalan(std::size_t f)
    {
        ensure(f + 1);
        std::shared_lock lock(mutex_);
        return cumulative_[f];
    }

    std::size_t fork_count(const BigNat& n)
    {
        for (;;) {
            {
                std::shared_lock lock(mutex_);
                if (cumulative_.back() > n)
                    return static_cast<std::size_t>(
                        std::upper_bound(cumulative_.begin(), cumulative_.end(), n) - cumulative_.begin());
            }
            std::unique_lock lock(mutex_);
            grow_locked(cumulative_.size() * 2);
        }
    }

    BigNat paths(std::size_t r, std::size_t c)
    {
        if (c > r)
            return 0;
        if (r >= paths_memo_rows)
            return paths_closed_form(r, c);
        {
            std::shared_lock lock(mutex_);
            if (r < paths_.size())
                return paths_[r][c];
        }
        std::unique_lock lock(mutex_);
        while (paths_.size() <= r) {
            const std::size_t row = paths_.size();
            std::vector<BigNat> next(row + 1);
            next[0] = 1;
            for (std::size_t col = 1; col <= row; ++col) {
                const BigNat& down = col <= row - 1 ? paths_[row - 1][col] : zero_;
                next[col] = down + next[col - 1];
            }
            paths_.push_back(std::move(next));
        }
        return paths_[r][c];
    }

private:
    CatalanTables()
    {
        catalan_.emplace_back(1);
        cumulative_.emplace_back(1);
        grow_locked(64);
    }

    void ensure(std::size_t size)
    {
        {
            std::shared_lock lock(mutex_);
            if (catalan_.size() >= size)
                return;
        }
        std::unique_lock lock(mutex_);
        grow_locked(std::max(size, catalan_.size() * 2));
    }

    void grow_locked(std::size_t size)
    {
        while (catalan_.size() < size) {
            const unsigned long f = catalan_.size() - 1;
            // C_{f+1} = 2(2f + 1) C_f / (f + 2), exact
            BigNat next = catalan_.back() * (2 * (2 * f + 1));
            mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), f + 2);
            cumulative_.push_back(cumulative_.back() + next);
            catalan_.push_back(std::move(next));
        }
    }

    std::shared_mutex mutex_;
    std::deque<BigNat> catalan_;
    std::deque<BigNat> cumulative_;
    std::deque<std::vector<BigNat>> paths_;
    const BigNat zero_ = 0;
};

// Walks the lattice from (f, f) keeping binom(r - 1 + c, c) up to date, so
// paths(r - 1, c) costs one multiply and one exact division per step.
class LatticeWalk {
public:
    explicit LatticeWalk(std::size_t f) : r_(f), c_(f)
    {
        mpz_bin_uiui(binom_.get_mpz_t(), 2 * f - 1, f);
    }

    std::size_t row() const noexcept { return r_; }

    // paths(r - 1, c)
    BigNat below() const
    {
        const std::size_t a = r_ - 1;
        if (c_ > a)
            return 0;
        BigNat out = binom_ * static_cast<unsigned long>(a - c_ + 1);
        mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), a + 1);
        return out;
    }

    void step_one()  // '1': move left
    {
        const std::size_t a = r_ - 1;
        binom_ *= static_cast<unsigned long>(c_);
        mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), a + c_);
        --c_;
    }

    void step_zero()  // '0': move down
    {
        const std::size_t a = r_ - 1;
        --r_;
        if (r_ == 0)
            return;
        binom_ *= static_cast<unsigned long>(a);
        mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), a + c_);
    }

private:
    std::size_t r_;
    std::size_t c_;
    BigNat binom_;
};

class Wtc0Codec final : public Codec {
public:
    std::string name() const override { return "wtc0"; }
    std::optional<int> domain_min() const override { return 0; }
    BigNat count_by_length(std::uint64_t bits) const override
    {
        if (bits % 2 == 0)
            return 0;
        return catalan(static_cast<std::size_t>(bits / 2));
    }

protected:
    void do_encode(BitWriter& out, const BigInt& n) const override { wtc0_encode_to(out, n); }
    BigInt do_decode(BitReader& in) const override { return wtc0_decode(in); }
    std::uint64_t do_length(const BigInt& n) const override { return wtc0_length(n); }
};

}  // namespace

const BigNat& catalan(std::size_t f) { return CatalanTables::instance().catalan(f); }

const BigNat& ccatalan(std::int64_t f)
{
    static const BigNat zero = 0;
    if (f < 0)
        return zero;
    return CatalanTables::instance().ccatalan(static_cast<std::size_t>(f));
}

BigNat paths(std::size_t r, std::size_t c) { return CatalanTables::instance().paths(r, c); }

BigNat paths_closed_form(std::size_t r, std::size_t c)
{
    if (c > r)
        return 0;
    BigNat out;
    mpz_bin_uiui(out.get_mpz_t(), r + c, c);
    out *= static_cast<unsigned long>(r - c + 1);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), r + 1);
    return out;
}

std::size_t fork_count(const BigNat& n)
{
    if (sgn(n) < 0)
        throw DomainError("wtc0: " + to_decimal(n) + " is below the domain minimum 0");
    return CatalanTables::instance().fork_count(n);
}

void wtc0_encode_to(BitWriter& out, const BigNat& n)
{
    const std::size_t f = fork_count(n);
    if (f == 0) {
        out.push_back(false);
        return;
    }
    BigNat rank = n - ccatalan(static_cast<std::int64_t>(f) - 1);
    LatticeWalk walk(f);
    while (walk.row() > 0) {
        BigNat below = walk.below();
        if (rank >= below) {
            out.push_back(true);
            rank -= below;
            walk.step_one();
        } else {
            out.push_back(false);
            walk.step_zero();
        }
    }
    out.push_back(false);
}

BitString wtc0_encode(const BigNat& n)
{
    BitWriter w;
    wtc0_encode_to(w, n);
    return std::move(w).finish();
}

BigNat wtc0_decode(BitReader& in)
{
    const std::size_t start = in.position();
    const BitString& src = in.source();
    std::size_t ones = 0;
    std::size_t zeros = 0;
    std::size_t pos = start;
    while (zeros <= ones) {
        if (pos == src.size()) {
            const std::size_t consumed = pos - start;
            throw TruncatedError(consumed + (ones - zeros + 1), consumed);
        }
        if (src[pos++])
            ++ones;
        else
            ++zeros;
    }
    in.seek(pos);

    const std::size_t f = ones;
    BigNat value = ccatalan(static_cast<std::int64_t>(f) - 1);
    if (f == 0)
        return value;
    LatticeWalk walk(f);
    for (std::size_t i = start; walk.row() > 0; ++i) {
        if (src[i]) {
            value += walk.below();
            walk.step_one();
        } else {
            walk.step_zero();
        }
    }
    return value;
}

Decoded wtc0_decode_prefix(const BitString& bits)
{
    BitReader r(bits);
    BigNat v = wtc0_decode(r);
    return {std::move(v), r.position()};
}

std::uint64_t wtc0_length(const BigNat& n) { return 2 * fork_count(n) + 1; }

std::uint64_t wtc1_length(const BigNat& n)
{
    if (n < 1)
        throw DomainError("wtc1: " + to_decimal(n) + " is below the domain minimum 1");
    return wtc0_length(BigNat(n - 1));
}

CodecPtr wtc0()
{
    static const CodecPtr instance = std::make_shared<Wtc0Codec>();
    return instance;
}

CodecPtr wtc1()
{
    static const CodecPtr instance = shift1(wtc0(), "wtc1");
    return instance;
}

}  // namespace uic::wtc
