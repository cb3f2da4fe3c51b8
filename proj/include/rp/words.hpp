#ifndef RP_WORDS_HPP
#define RP_WORDS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rp/core_trees.hpp"
#include "rp/count.hpp"

// Counting, enumerating and encoding recursively palindromic words.
//
// There are exactly K^alpha(n) RP words of length n over K letters, where
// alpha(n) is the number of 1 digits in the binary expansion of n.  Each RP
// word corresponds to one choice of letter per symbol level of its midpoint
// tree, which is what RPCode stores.

namespace rp {

// Sum of the binary digits of n.
inline unsigned alpha(std::uint64_t n) {
    return static_cast<unsigned>(std::popcount(n));
}

// Exact number of RP words of length n over an alphabet of the given size.
inline CountValue count_rp_words(std::uint64_t n, std::uint64_t alphabet_size) {
    if (alphabet_size == 0)
        throw std::invalid_argument("count_rp_words: alphabet size must be at least 1");
    return boost::multiprecision::pow(CountValue(alphabet_size), alpha(n));
}

// Ordered collection of distinct letter tokens; the order fixes enumeration
// order.
template <typename T>
class Alphabet {
public:
    explicit Alphabet(std::vector<T> letters) : letters_(std::move(letters)) {
        if (letters_.empty())
            throw std::invalid_argument("alphabet needs at least one letter");
        for (std::size_t i = 0; i < letters_.size(); ++i)
            for (std::size_t j = i + 1; j < letters_.size(); ++j)
                if (letters_[i] == letters_[j])
                    throw std::invalid_argument("alphabet letters must be distinct");
    }

    std::size_t size() const { return letters_.size(); }
    const std::vector<T>& letters() const { return letters_; }

private:
    std::vector<T> letters_;
};

// Per-depth labels of the midpoint tree of an RP word, root first: entry i is
// the shared label of depth i and is a symbol exactly when binary digit i of
// the encoded length is 1.  The deepest entry of a nonempty code is always a
// symbol (lengths have no leading zero digit).
template <typename T>
class RPCode {
public:
    using Level = std::optional<T>;

    RPCode() = default;

    explicit RPCode(std::vector<Level> levels) : levels_(std::move(levels)) {
        if (!levels_.empty() && !levels_.back())
            throw std::invalid_argument("code: deepest level must carry a symbol");
        if (levels_.size() > 63)
            throw std::invalid_argument("code: encoded length does not fit in 64 bits");
    }

    const std::vector<Level>& levels() const { return levels_; }

    // Length of the encoded word: sum of 2^i over the symbol indices i.
    std::uint64_t encoded_length() const {
        std::uint64_t n = 0;
        for (std::size_t i = 0; i < levels_.size(); ++i)
            if (levels_[i])
                n += std::uint64_t{1} << i;
        return n;
    }

    friend bool operator==(const RPCode& a, const RPCode& b) { return a.levels_ == b.levels_; }

private:
    std::vector<Level> levels_;
};

// Reads off the level labels of the midpoint tree of an RP word.  Rejects
// sequences that are not RP; those lie outside the bijection's domain.
template <typename T>
RPCode<T> encode_rp_word(std::span<const T> w) {
    if (!is_rp(w))
        throw std::domain_error("encode_rp_word: sequence is not recursively palindromic");
    std::vector<std::optional<T>> levels;
    for (std::span<const T> cur = w; !cur.empty(); cur = cur.first(cur.size() / 2)) {
        if (cur.size() % 2 == 1)
            levels.emplace_back(cur[cur.size() / 2]);
        else
            levels.emplace_back(std::nullopt);
    }
    return RPCode<T>(std::move(levels));
}

template <typename T>
RPCode<T> encode_rp_word(const std::vector<T>& w) {
    return encode_rp_word(std::span<const T>(w));
}

// Inverse of encode_rp_word; the result is an RP word of length
// code.encoded_length().
template <typename T>
std::vector<T> decode_rp_code(const RPCode<T>& code) {
    return inorder_expand(std::span<const std::optional<T>>(code.levels()));
}

// Visits every RP word of length n exactly once, in lexicographic word
// order: letter choices are enumerated with the deepest symbol level as the
// most significant position, and deeper levels fill the front of the decoded
// word, so that order sorts the output.
template <typename T, typename Fn>
void for_each_rp_word(std::uint64_t n, const Alphabet<T>& alphabet, Fn&& fn) {
    std::vector<unsigned> slots; // depths carrying a symbol, root first
    for (unsigned i = 0; i < 64; ++i)
        if ((n >> i) & 1)
            slots.push_back(i);
    std::vector<std::optional<T>> levels(std::bit_width(n));
    std::vector<std::size_t> choice(slots.size(), 0);
    const std::vector<T>& letters = alphabet.letters();
    while (true) {
        for (std::size_t j = 0; j < slots.size(); ++j)
            levels[slots[j]] = letters[choice[j]];
        fn(inorder_expand(std::span<const std::optional<T>>(levels)));
        std::size_t j = 0; // roll from the root side: deepest slot is most significant
        while (j < choice.size()) {
            if (++choice[j] < letters.size())
                break;
            choice[j] = 0;
            ++j;
        }
        if (j == choice.size())
            break;
    }
}

template <typename T>
std::vector<std::vector<T>> rp_words(std::uint64_t n, const Alphabet<T>& alphabet) {
    std::vector<std::vector<T>> out;
    for_each_rp_word(n, alphabet, [&](std::vector<T> w) { out.push_back(std::move(w)); });
    return out;
}

inline constexpr std::uint64_t kDefaultOracleBound = std::uint64_t{1} << 24;

// Filters all alphabet_size^n words of length n through is_rp, in
// lexicographic order.  Used by tests and the self-verification command as an
// oracle independent of the code bijection.  Refuses candidate spaces larger
// than max_candidates.
template <typename T>
std::vector<std::vector<T>> brute_force_rp_words(std::uint64_t n, const Alphabet<T>& alphabet,
                                                 std::uint64_t max_candidates = kDefaultOracleBound) {
    const std::size_t k = alphabet.size();
    if (k > 1) {
        CountValue candidates = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            candidates *= k;
            if (candidates > max_candidates)
                throw BoundError("brute_force_rp_words: " + std::to_string(k) + "^" +
                                 std::to_string(n) + " candidate words exceed the bound of " +
                                 std::to_string(max_candidates));
        }
    }
    const std::vector<T>& letters = alphabet.letters();
    std::vector<std::vector<T>> out;
    std::vector<std::size_t> idx(n, 0);
    std::vector<T> word(n, letters[0]);
    while (true) {
        if (is_rp(std::span<const T>(word)))
            out.push_back(word);
        std::size_t j = n; // rightmost position rolls fastest
        while (j-- > 0) {
            if (++idx[j] < k) {
                word[j] = letters[idx[j]];
                break;
            }
            idx[j] = 0;
            word[j] = letters[0];
        }
        if (j == std::size_t(-1))
            break;
    }
    return out;
}

} // namespace rp

#endif
