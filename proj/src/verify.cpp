#include "rp/verify.hpp"

#include <algorithm>
#include <map>

#include "rp/catalan.hpp"
#include "rp/compositions.hpp"
#include "rp/core_trees.hpp"
#include "rp/formats.hpp"

namespace rp::verify {

namespace {

std::string count_str(const CountValue& v) {
    return v.str();
}

void fail(SuiteResult& result, const std::string& counterexample) {
    result.pass = false;
    result.summary = "counterexample: " + counterexample;
}

Alphabet<char> binary_alphabet() {
    return parse_alphabet("01");
}

// Runs fn for every word of length n over the alphabet, in lexicographic
// order.  fn returns false to abort the sweep.
bool sweep_words(std::uint64_t n, const Alphabet<char>& alphabet,
                 const std::function<bool(const std::string&)>& fn) {
    const std::vector<char>& letters = alphabet.letters();
    std::vector<std::size_t> idx(n, 0);
    std::string word(n, letters.empty() ? ' ' : letters[0]);
    while (true) {
        if (!fn(word))
            return false;
        std::size_t j = n;
        while (j-- > 0) {
            if (++idx[j] < letters.size()) {
                word[j] = letters[idx[j]];
                break;
            }
            idx[j] = 0;
            word[j] = letters[0];
        }
        if (j == std::size_t(-1))
            return true;
    }
}

std::string multiset_key(std::string w) {
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace

SuiteResult word_count_suite(const Bounds& bounds) {
    SuiteResult result{"word-count"};
    const struct {
        const char* letters;
        unsigned max_n;
    } sweeps[] = {{"01", bounds.words_max_n}, {"012", bounds.words_k3_max_n}};
    unsigned cases = 0;
    for (const auto& sweep : sweeps) {
        const Alphabet<char> alphabet = parse_alphabet(sweep.letters);
        const std::uint64_t k = alphabet.size();
        for (unsigned n = 0; n <= sweep.max_n; ++n) {
            const auto words = brute_force_rp_words<char>(n, alphabet, bounds.max_candidates);
            const CountValue expected = count_rp_words(n, k);
            CountValue candidates = boost::multiprecision::pow(CountValue(k), n);
            result.cases.push_back("words K=" + std::to_string(k) + " n=" + std::to_string(n) +
                                   ": rp=" + std::to_string(words.size()) +
                                   " candidates=" + count_str(candidates) +
                                   " expected=" + count_str(expected));
            if (CountValue(words.size()) != expected) {
                fail(result, "K=" + std::to_string(k) + " n=" + std::to_string(n) + " brute=" +
                                 std::to_string(words.size()) + " expected=" + count_str(expected));
                return result;
            }
            ++cases;
        }
    }
    result.summary = std::to_string(cases) + " lengths checked";
    return result;
}

SuiteResult word_pairing_suite(const Bounds& bounds) {
    SuiteResult result{"word-pairing"};

    // pinned pairs
    const struct {
        const char* word;
        const char* partner;
    } pinned[] = {{"MADAMIMADAM", "AMDMAIAMDMA"}, {"AABB", "BBAA"}};
    for (const auto& p : pinned) {
        const std::string partner = pair_word(p.word);
        result.cases.push_back(std::string("pairing ") + p.word + " -> " + partner);
        if (partner != p.partner || pair_word(partner) != p.word) {
            fail(result, std::string(p.word) + " paired with " + partner + " expected " +
                             p.partner);
            return result;
        }
        if (is_rp_word(p.word) || partner == p.word) {
            fail(result, std::string(p.word) + " must not be a fixed point");
            return result;
        }
    }

    const Alphabet<char> alphabet = binary_alphabet();
    for (unsigned n = 0; n <= bounds.pairing_max_n; ++n) {
        std::uint64_t words = 0;
        std::uint64_t fixed = 0;
        std::string bad;
        const bool complete = sweep_words(n, alphabet, [&](const std::string& w) {
            ++words;
            const std::string partner = pair_word(w);
            const bool w_is_rp = is_rp_word(w);
            if (pair_word(partner) != w)
                bad = w + " (not self-inverse)";
            else if (multiset_key(partner) != multiset_key(w))
                bad = w + " (letters not preserved)";
            else if ((partner == w) != w_is_rp)
                bad = w + (w_is_rp ? " (RP word moved)" : " (non-RP word fixed)");
            if (!bad.empty())
                return false;
            if (partner == w)
                ++fixed;
            return true;
        });
        if (!complete) {
            fail(result, bad);
            return result;
        }
        const CountValue expected_fixed = count_rp_words(n, 2);
        result.cases.push_back("pairing n=" + std::to_string(n) + ": words=" +
                               std::to_string(words) + " fixed=" + std::to_string(fixed) +
                               " expected=" + count_str(expected_fixed));
        if (CountValue(fixed) != expected_fixed) {
            fail(result, "n=" + std::to_string(n) + " fixed=" + std::to_string(fixed) +
                             " expected=" + count_str(expected_fixed));
            return result;
        }
    }
    result.summary = std::to_string(bounds.pairing_max_n) + " lengths swept";
    return result;
}

SuiteResult word_code_suite(const Bounds& bounds) {
    SuiteResult result{"word-code-bijection"};

    // pinned example: code A0B0C <-> its 21-letter word
    const std::string display = "A0B0C";
    const std::string expected_word = "AABAAAABAACAABAAAABAA";
    const std::string decoded = decode_code(parse_code(display));
    result.cases.push_back("code " + display + " -> " + decoded);
    if (decoded != expected_word) {
        fail(result, "code " + display + " decoded to " + decoded);
        return result;
    }
    if (format_code(encode_word(expected_word)) != display) {
        fail(result, "encode(" + expected_word + ") != " + display);
        return result;
    }

    const Alphabet<char> alphabet = binary_alphabet();
    for (unsigned n = 0; n <= bounds.code_max_n; ++n) {
        const auto brute = brute_force_rp_words<char>(n, alphabet, bounds.max_candidates);
        for (const auto& w : brute) {
            const auto code = encode_rp_word(std::span<const char>(w));
            if (code.encoded_length() != n || decode_rp_code(code) != w) {
                fail(result, "decode(encode(w)) != w for w=" + string_from_word(w));
                return result;
            }
        }
        // the other direction: every valid code for n comes back unchanged
        std::vector<unsigned> slots;
        for (unsigned i = 0; i < 64; ++i)
            if ((std::uint64_t(n) >> i) & 1)
                slots.push_back(i);
        std::vector<std::optional<char>> levels(std::bit_width(std::uint64_t(n)));
        std::vector<std::size_t> choice(slots.size(), 0);
        std::uint64_t codes = 0;
        while (true) {
            for (std::size_t j = 0; j < slots.size(); ++j)
                levels[slots[j]] = alphabet.letters()[choice[j]];
            const RPCode<char> code(levels);
            if (!(encode_rp_word(decode_rp_code(code)) == code)) {
                fail(result, "encode(decode(c)) != c for code " + format_code(code));
                return result;
            }
            ++codes;
            std::size_t j = 0;
            while (j < choice.size()) {
                if (++choice[j] < alphabet.size())
                    break;
                choice[j] = 0;
                ++j;
            }
            if (j == choice.size())
                break;
        }
        if (CountValue(codes) != CountValue(brute.size())) {
            fail(result, "code count differs from word count at n=" + std::to_string(n));
            return result;
        }
        // the enumerator decodes every code once, in word order, matching the
        // lexicographically sorted brute-force list element for element
        const auto enumerated = rp_words(n, alphabet);
        if (enumerated != brute) {
            fail(result, "enumerated words differ from brute force at n=" + std::to_string(n));
            return result;
        }
        for (const auto& w : enumerated) {
            if (!is_rp(std::span<const char>(w))) {
                fail(result, "enumerated non-RP word " + string_from_word(w));
                return result;
            }
        }
        result.cases.push_back("codes n=" + std::to_string(n) + ": rp-words=" +
                               std::to_string(brute.size()) + " round-trips ok");
    }
    result.summary = std::to_string(bounds.code_max_n) + " lengths swept";
    return result;
}

SuiteResult composition_count_suite(const Bounds& bounds) {
    SuiteResult result{"composition-count"};
    const auto f = rp_composition_counts(bounds.counts_max_n);
    const auto b = binary_partition_counts(bounds.counts_max_n);
    for (unsigned n = 0; n <= bounds.counts_max_n; ++n) {
        if (f[n] != b[n]) {
            fail(result, "f(" + std::to_string(n) + ")=" + count_str(f[n]) + " but b(" +
                             std::to_string(n) + ")=" + count_str(b[n]));
            return result;
        }
        if (n % 2 == 1 && f[n] != f[n - 1]) {
            fail(result, "f(" + std::to_string(n) + ") != f(" + std::to_string(n - 1) + ")");
            return result;
        }
    }
    result.cases.push_back("f(n)=b(n) for n<=" + std::to_string(bounds.counts_max_n) +
                           " (f(" + std::to_string(bounds.counts_max_n) +
                           ")=" + count_str(f[bounds.counts_max_n]) + ")");

    for (unsigned n = 0; n <= bounds.comp_brute_max_n; ++n) {
        std::uint64_t total = 0;
        std::uint64_t rp = 0;
        std::vector<std::vector<Part>> brute;
        for_each_composition(
            n,
            [&](const Composition& c) {
                ++total;
                if (is_rp_composition(c)) {
                    ++rp;
                    brute.push_back(c.parts());
                }
            },
            std::max<std::uint64_t>(n, kDefaultCompositionSweepBound));
        result.cases.push_back("compositions n=" + std::to_string(n) + ": rp=" +
                               std::to_string(rp) + " of " + std::to_string(total) +
                               " expected=" + count_str(f[n]));
        if (CountValue(rp) != f[n]) {
            fail(result, "n=" + std::to_string(n) + " brute=" + std::to_string(rp) +
                             " expected=" + count_str(f[n]));
            return result;
        }
        std::vector<std::vector<Part>> enumerated;
        for_each_rp_composition(
            n, [&](const Composition& c) { enumerated.push_back(c.parts()); });
        std::sort(brute.begin(), brute.end());
        std::sort(enumerated.begin(), enumerated.end());
        if (enumerated != brute) {
            fail(result, "enumerated RP compositions differ from brute force at n=" +
                             std::to_string(n));
            return result;
        }
    }
    result.summary = "counts agree to n=" + std::to_string(bounds.counts_max_n) +
                     ", brute force to n=" + std::to_string(bounds.comp_brute_max_n);
    return result;
}

SuiteResult composition_bijection_suite(const Bounds& bounds) {
    SuiteResult result{"composition-partition-bijection"};

    // pinned example: the ten-part partition of 37 and its 21-part composition
    const std::string partition_text = "16,4,4,4,4,1,1,1,1,1";
    const std::string composition_text = "1+1+4+1+1+1+1+4+1+1+5+1+1+4+1+1+1+1+4+1+1";
    const BinaryPartition partition = parse_partition(partition_text);
    const std::string mapped = format_composition(partition_to_composition(partition));
    result.cases.push_back("partition " + partition_text + " -> " + mapped);
    if (mapped != composition_text) {
        fail(result, partition_text + " mapped to " + mapped);
        return result;
    }
    if (format_partition(composition_to_partition(parse_composition(composition_text))) !=
        partition_text) {
        fail(result, "reverse image of " + composition_text + " is not " + partition_text);
        return result;
    }

    for (unsigned n = 0; n <= bounds.comp_brute_max_n; ++n) {
        std::uint64_t partitions = 0;
        std::string bad;
        for_each_binary_partition(
            n,
            [&](const BinaryPartition& p) {
                if (!bad.empty())
                    return;
                ++partitions;
                const Composition c = partition_to_composition(p);
                if (!is_rp_composition(c) || c.total() != n)
                    bad = "image of " + format_partition(p) + " invalid";
                else if (!(composition_to_partition(c) == p))
                    bad = "round trip moved partition " + format_partition(p);
            },
            std::max<std::uint64_t>(n, kDefaultBinaryPartitionBound));
        std::uint64_t compositions = 0;
        for_each_rp_composition(n, [&](const Composition& c) {
            if (!bad.empty())
                return;
            ++compositions;
            const BinaryPartition p = composition_to_partition(c);
            if (p.total() != n)
                bad = "image of " + format_composition(c) + " has wrong total";
            else if (!(partition_to_composition(p) == c))
                bad = "round trip moved composition " + format_composition(c);
        });
        if (!bad.empty()) {
            fail(result, "n=" + std::to_string(n) + ": " + bad);
            return result;
        }
        if (partitions != compositions) {
            fail(result, "n=" + std::to_string(n) + ": " + std::to_string(partitions) +
                             " partitions vs " + std::to_string(compositions) + " compositions");
            return result;
        }
        result.cases.push_back("bijection n=" + std::to_string(n) + ": " +
                               std::to_string(partitions) + " objects per side");
    }
    result.summary = "round trips exact to n=" + std::to_string(bounds.comp_brute_max_n);
    return result;
}

SuiteResult composition_pairing_suite(const Bounds& bounds) {
    SuiteResult result{"composition-pairing"};

    // pinned cases
    {
        const Composition moved = parse_composition("1+1+2");
        const std::string partner = format_composition(pair_composition(moved));
        result.cases.push_back("pairing 1+1+2 -> " + partner);
        if (partner != "2+1+1") {
            fail(result, "1+1+2 paired with " + partner);
            return result;
        }
        const Composition fixed = parse_composition("2+1+2+6+2+1+2");
        if (!(pair_composition(fixed) == fixed) || !is_rp_composition(fixed)) {
            fail(result, "2+1+2+6+2+1+2 must be a fixed point");
            return result;
        }
    }

    const auto f = rp_composition_counts(bounds.comp_pairing_max_n);
    for (unsigned n = 0; n <= bounds.comp_pairing_max_n; ++n) {
        std::uint64_t total = 0;
        std::uint64_t fixed = 0;
        std::string bad;
        for_each_composition(
            n,
            [&](const Composition& c) {
                if (!bad.empty())
                    return;
                ++total;
                const Composition partner = pair_composition(c);
                auto sorted = [](std::vector<Part> parts) {
                    std::sort(parts.begin(), parts.end());
                    return parts;
                };
                if (!(pair_composition(partner) == c))
                    bad = format_composition(c) + " (not self-inverse)";
                else if (partner.total() != c.total() ||
                         sorted(partner.parts()) != sorted(c.parts()))
                    bad = format_composition(c) + " (parts not preserved)";
                else if ((partner == c) != is_rp_composition(c))
                    bad = format_composition(c) + " (fixed points are not the RP compositions)";
                else if (partner == c)
                    ++fixed;
            },
            std::max<std::uint64_t>(n, kDefaultCompositionSweepBound));
        if (!bad.empty()) {
            fail(result, bad);
            return result;
        }
        result.cases.push_back("comp-pairing n=" + std::to_string(n) + ": compositions=" +
                               std::to_string(total) + " fixed=" + std::to_string(fixed) +
                               " expected=" + count_str(f[n]));
        if (CountValue(fixed) != f[n]) {
            fail(result, "n=" + std::to_string(n) + " fixed=" + std::to_string(fixed) +
                             " expected=" + count_str(f[n]));
            return result;
        }
    }
    result.summary = std::to_string(bounds.comp_pairing_max_n) + " totals swept";
    return result;
}

SuiteResult catalan_suite(const Bounds& bounds) {
    SuiteResult result{"catalan-parity"};
    const unsigned tree_bound = std::max(bounds.catalan_max_n, kDefaultShapeTreeBound);
    for (unsigned n = 0; n <= bounds.catalan_max_n; ++n) {
        std::uint64_t trees = 0;
        std::uint64_t fixed = 0;
        std::string bad;
        for_each_shape_tree(
            n,
            [&](const ShapeTree& t) {
                if (!bad.empty())
                    return;
                ++trees;
                const ShapeTree image = catalan_involution(t);
                if (image.internal_nodes() != n)
                    bad = "involution changed the node count";
                else if (!(catalan_involution(image) == t))
                    bad = "involution is not self-inverse";
                else if (image == t)
                    ++fixed;
                else if (first_asymmetric_depth(image) != first_asymmetric_depth(t))
                    bad = "first asymmetric depth moved";
            },
            tree_bound);
        if (!bad.empty()) {
            fail(result, "n=" + std::to_string(n) + ": " + bad);
            return result;
        }
        const CountValue cn = catalan_number(n);
        const std::uint64_t expected_fixed = parity_rule(n) ? 1 : 0;
        result.cases.push_back("catalan n=" + std::to_string(n) + ": trees=" +
                               std::to_string(trees) + " fixed=" + std::to_string(fixed) +
                               " expected=" + std::to_string(expected_fixed));
        if (CountValue(trees) != cn) {
            fail(result, "n=" + std::to_string(n) + " enumerated " + std::to_string(trees) +
                             " trees, C_n=" + count_str(cn));
            return result;
        }
        if (fixed != expected_fixed || CountValue(fixed) % 2 != cn % 2) {
            fail(result, "n=" + std::to_string(n) + " fixed=" + std::to_string(fixed) +
                             " expected=" + std::to_string(expected_fixed));
            return result;
        }
    }
    for (unsigned n = 0; n <= bounds.parity_max_n; ++n) {
        const bool odd = (catalan_number(n) % 2) == 1;
        if (parity_rule(n) != odd) {
            fail(result, "parity_rule(" + std::to_string(n) + ") disagrees with C_n");
            return result;
        }
    }
    result.cases.push_back("parity rule matches exact Catalan parity for n<=" +
                           std::to_string(bounds.parity_max_n));
    result.summary = "involutions swept to n=" + std::to_string(bounds.catalan_max_n);
    return result;
}

std::vector<SuiteResult> run_all(const Bounds& bounds) {
    return {
        word_count_suite(bounds),
        word_pairing_suite(bounds),
        word_code_suite(bounds),
        composition_count_suite(bounds),
        composition_bijection_suite(bounds),
        composition_pairing_suite(bounds),
        catalan_suite(bounds),
    };
}

} // namespace rp::verify
