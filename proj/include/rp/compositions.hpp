#ifndef RP_COMPOSITIONS_HPP
#define RP_COMPOSITIONS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rp/count.hpp"

// Recursively palindromic compositions of an integer and their bijection
// with partitions into powers of two (binary partitions).
//
// The counting function f satisfies f(0) = 1, f(2n+1) = f(2n) and
// f(2n) = f(2n-2) + f(n): an RP composition of even sum is either two copies
// of a smaller RP composition or such a copy wrapped around an even middle
// part, and an odd sum forces an odd middle part.  The binary partition
// counts b(n) satisfy the same recurrences, and partition_to_composition /
// composition_to_partition realize the equality f(n) = b(n) bijectively.

namespace rp {

using Part = std::uint64_t;

// Ordered positive parts with their sum; the empty composition has sum 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Part> parts);

    const std::vector<Part>& parts() const { return parts_; }
    std::uint64_t total() const { return total_; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Part> parts_;
    std::uint64_t total_ = 0;
};

// Multiplicity vector over parts 2^i: multiplicities()[i] is the number of
// copies of 2^i.  Trailing zero multiplicities are trimmed at construction so
// equal partitions compare equal; the top multiplicity of a nonempty
// partition is therefore always positive.
class BinaryPartition {
public:
    BinaryPartition() = default;
    explicit BinaryPartition(std::vector<std::uint64_t> multiplicities);

    static BinaryPartition from_parts(std::span<const std::uint64_t> parts);

    const std::vector<std::uint64_t>& multiplicities() const { return multiplicities_; }
    std::uint64_t total() const { return total_; }
    std::vector<std::uint64_t> parts_descending() const;

    friend bool operator==(const BinaryPartition& a, const BinaryPartition& b) {
        return a.multiplicities_ == b.multiplicities_;
    }

private:
    std::vector<std::uint64_t> multiplicities_;
    std::uint64_t total_ = 0;
};

bool is_rp_composition(const Composition& c);

// f(0..upto) by the recurrences above.
std::vector<CountValue> rp_composition_counts(std::uint64_t upto);
CountValue count_rp_compositions(std::uint64_t n);

// b(0..upto) by bounded-largest-part counting (parts 1, 2, 4, ... admitted
// one power at a time), deliberately not the f recurrences so the equality
// f(n) = b(n) is a real cross-check.
std::vector<CountValue> binary_partition_counts(std::uint64_t upto);
CountValue count_binary_partitions(std::uint64_t n);

inline constexpr std::uint64_t kDefaultCompositionSweepBound = 24;
inline constexpr std::uint64_t kDefaultBinaryPartitionBound = 64;

// All 2^(n-1) compositions of n, by ascending cut mask; oracle plumbing.
void for_each_composition(std::uint64_t n, const std::function<void(const Composition&)>& fn,
                          std::uint64_t max_n = kDefaultCompositionSweepBound);

// All RP compositions of n, grouped by middle part: for even n the doubled
// form w w first, then middle parts 2j ascending; for odd n middle parts
// 2j+1 ascending.  Emits exactly f(n) compositions.
void for_each_rp_composition(std::uint64_t n, const std::function<void(const Composition&)>& fn);
std::vector<Composition> rp_compositions(std::uint64_t n);

// All binary partitions of n, in descending lexicographic order of
// (m_l, ..., m_0), i.e. largest parts chosen greedily first.
void for_each_binary_partition(std::uint64_t n,
                               const std::function<void(const BinaryPartition&)>& fn,
                               std::uint64_t max_n = kDefaultBinaryPartitionBound);
std::vector<BinaryPartition> binary_partitions(std::uint64_t n,
                                               std::uint64_t max_n = kDefaultBinaryPartitionBound);

// Expands the multiplicity of 2^i into the shared label of depth i of a
// complete tree (zero multiplicities act as empty marks) and reads the parts
// back off in inorder.  The result is an RP composition of the same total.
Composition partition_to_composition(const BinaryPartition& p);

// Inverse direction: repeatedly strip the middle part (or record 0 for an
// even part count) and recurse on the half.  Rejects non-RP compositions.
BinaryPartition composition_to_partition(const Composition& c);

// The pairing involution on the parts tuple; compositions of n are closed
// under rearrangement, so the partner is again a composition of n.
Composition pair_composition(const Composition& c);

} // namespace rp

#endif
