#include "rp/compositions.hpp"

#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "rp/core_trees.hpp"

namespace rp {

namespace {

constexpr std::uint64_t kMaxTotal = std::numeric_limits<std::uint64_t>::max();

} // namespace

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (Part p : parts_) {
        if (p == 0)
            throw std::invalid_argument("composition parts must be positive");
        if (total_ > kMaxTotal - p)
            throw std::invalid_argument("composition total overflows");
        total_ += p;
    }
}

BinaryPartition::BinaryPartition(std::vector<std::uint64_t> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
    while (!multiplicities_.empty() && multiplicities_.back() == 0)
        multiplicities_.pop_back();
    if (multiplicities_.size() > 64)
        throw std::invalid_argument("binary partition total overflows");
    for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
        const std::uint64_t m = multiplicities_[i];
        if (m > (kMaxTotal >> i))
            throw std::invalid_argument("binary partition total overflows");
        const std::uint64_t weight = m << i;
        if (total_ > kMaxTotal - weight)
            throw std::invalid_argument("binary partition total overflows");
        total_ += weight;
    }
}

BinaryPartition BinaryPartition::from_parts(std::span<const std::uint64_t> parts) {
    std::vector<std::uint64_t> ms;
    for (std::uint64_t p : parts) {
        if (p == 0 || !std::has_single_bit(p))
            throw std::invalid_argument("binary partition parts must be powers of two");
        const unsigned i = static_cast<unsigned>(std::countr_zero(p));
        if (ms.size() <= i)
            ms.resize(i + 1, 0);
        ++ms[i];
    }
    return BinaryPartition(std::move(ms));
}

std::vector<std::uint64_t> BinaryPartition::parts_descending() const {
    std::vector<std::uint64_t> parts;
    for (std::size_t i = multiplicities_.size(); i-- > 0;)
        parts.insert(parts.end(), multiplicities_[i], std::uint64_t{1} << i);
    return parts;
}

bool is_rp_composition(const Composition& c) {
    return is_rp(std::span<const Part>(c.parts()));
}

std::vector<CountValue> rp_composition_counts(std::uint64_t upto) {
    std::vector<CountValue> f(upto + 1);
    f[0] = 1;
    for (std::uint64_t m = 1; m <= upto; ++m)
        f[m] = (m % 2 == 1) ? f[m - 1] : f[m - 2] + f[m / 2];
    return f;
}

CountValue count_rp_compositions(std::uint64_t n) {
    return rp_composition_counts(n)[n];
}

std::vector<CountValue> binary_partition_counts(std::uint64_t upto) {
    std::vector<CountValue> b(upto + 1, CountValue(1)); // partitions into 1s only
    for (std::uint64_t power = 2; power != 0 && power <= upto; power <<= 1)
        for (std::uint64_t m = power; m <= upto; ++m)
            b[m] += b[m - power];
    return b;
}

CountValue count_binary_partitions(std::uint64_t n) {
    return binary_partition_counts(n)[n];
}

void for_each_composition(std::uint64_t n, const std::function<void(const Composition&)>& fn,
                          std::uint64_t max_n) {
    if (n > max_n)
        throw BoundError("for_each_composition: n=" + std::to_string(n) +
                         " exceeds the sweep bound of " + std::to_string(max_n));
    if (n == 0) {
        fn(Composition{});
        return;
    }
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    std::vector<Part> parts;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        parts.clear();
        Part run = 1;
        for (std::uint64_t i = 0; i + 1 < n; ++i) {
            if ((mask >> i) & 1) { // cut after position i
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        fn(Composition(parts));
    }
}

namespace {

// Enumerates RP compositions of n, handing each parts vector to emit.
void rp_compositions_rec(std::uint64_t n, const std::function<void(std::vector<Part>&)>& emit) {
    if (n == 0) {
        std::vector<Part> empty;
        emit(empty);
        return;
    }
    const auto wrap = [&](std::uint64_t half_total, std::uint64_t middle) {
        rp_compositions_rec(half_total, [&](std::vector<Part>& w) {
            std::vector<Part> full;
            full.reserve(2 * w.size() + 1);
            full.insert(full.end(), w.begin(), w.end());
            if (middle != 0)
                full.push_back(middle);
            full.insert(full.end(), w.begin(), w.end());
            emit(full);
        });
    };
    if (n % 2 == 0) {
        wrap(n / 2, 0); // doubled form w w
        for (std::uint64_t j = 1; j <= n / 2; ++j)
            wrap(n / 2 - j, 2 * j);
    } else {
        for (std::uint64_t j = 0; j <= (n - 1) / 2; ++j)
            wrap((n - 1) / 2 - j, 2 * j + 1);
    }
}

} // namespace

void for_each_rp_composition(std::uint64_t n, const std::function<void(const Composition&)>& fn) {
    rp_compositions_rec(n, [&](std::vector<Part>& parts) { fn(Composition(parts)); });
}

std::vector<Composition> rp_compositions(std::uint64_t n) {
    std::vector<Composition> out;
    for_each_rp_composition(n, [&](const Composition& c) { out.push_back(c); });
    return out;
}

namespace {

void binary_partitions_rec(unsigned level, std::uint64_t remaining, std::vector<std::uint64_t>& ms,
                           const std::function<void(const BinaryPartition&)>& fn) {
    if (level == 0) {
        ms[0] = remaining;
        fn(BinaryPartition(ms));
        ms[0] = 0;
        return;
    }
    const std::uint64_t weight = std::uint64_t{1} << level;
    for (std::uint64_t m = remaining / weight + 1; m-- > 0;) {
        ms[level] = m;
        binary_partitions_rec(level - 1, remaining - m * weight, ms, fn);
    }
    ms[level] = 0;
}

} // namespace

void for_each_binary_partition(std::uint64_t n,
                               const std::function<void(const BinaryPartition&)>& fn,
                               std::uint64_t max_n) {
    if (n > max_n)
        throw BoundError("for_each_binary_partition: n=" + std::to_string(n) +
                         " exceeds the enumeration bound of " + std::to_string(max_n));
    if (n == 0) {
        fn(BinaryPartition{});
        return;
    }
    const unsigned top = static_cast<unsigned>(std::bit_width(n)) - 1;
    std::vector<std::uint64_t> ms(top + 1, 0);
    binary_partitions_rec(top, n, ms, fn);
}

std::vector<BinaryPartition> binary_partitions(std::uint64_t n, std::uint64_t max_n) {
    std::vector<BinaryPartition> out;
    for_each_binary_partition(n, [&](const BinaryPartition& p) { out.push_back(p); }, max_n);
    return out;
}

Composition partition_to_composition(const BinaryPartition& p) {
    std::vector<std::optional<Part>> levels;
    levels.reserve(p.multiplicities().size());
    for (std::uint64_t m : p.multiplicities())
        levels.push_back(m == 0 ? std::optional<Part>{} : std::optional<Part>{m});
    return Composition(inorder_expand(std::span<const std::optional<Part>>(levels)));
}

BinaryPartition composition_to_partition(const Composition& c) {
    if (!is_rp_composition(c))
        throw std::domain_error(
            "composition_to_partition: composition is not recursively palindromic");
    std::vector<std::uint64_t> ms;
    for (std::span<const Part> cur(c.parts()); !cur.empty(); cur = cur.first(cur.size() / 2))
        ms.push_back(cur.size() % 2 == 1 ? cur[cur.size() / 2] : 0);
    return BinaryPartition(std::move(ms));
}

Composition pair_composition(const Composition& c) {
    return Composition(pair_sequence(std::span<const Part>(c.parts())));
}

} // namespace rp
