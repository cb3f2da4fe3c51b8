#include "doctest.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rp/core_trees.hpp"
#include "rp/formats.hpp"

using rp::MidpointTree;

namespace {

// Reference expansion, transcribing the defining recursion directly:
// expand([]) = empty, expand(l0 : rest) = expand(rest) ++ [l0?] ++ expand(rest).
std::vector<char> expand_reference(std::span<const std::optional<char>> levels) {
    if (levels.empty())
        return {};
    const auto rest = expand_reference(levels.subspan(1));
    std::vector<char> out = rest;
    if (levels.front())
        out.push_back(*levels.front());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

MidpointTree<char> tree_of(std::string_view w) {
    return rp::midpoint_tree(std::span<const char>(w.data(), w.size()));
}

// Labels at the given depth, left to right; nullopt for the empty mark.
std::vector<std::optional<char>> labels_at_depth(const MidpointTree<char>& t, std::size_t depth) {
    std::vector<const rp::MidpointNode<char>*> level;
    if (t.root())
        level.push_back(t.root().get());
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<const rp::MidpointNode<char>*> next;
        for (const auto* v : level) {
            if (v->left)
                next.push_back(v->left.get());
            if (v->right)
                next.push_back(v->right.get());
        }
        level = std::move(next);
    }
    std::vector<std::optional<char>> labels;
    for (const auto* v : level)
        labels.push_back(v->label);
    return labels;
}

void for_all_binary_words(std::size_t max_len, const std::function<void(const std::string&)>& fn) {
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::string w(n, '0');
        while (true) {
            fn(w);
            std::size_t j = n;
            while (j-- > 0) {
                if (w[j] == '0') {
                    w[j] = '1';
                    break;
                }
                w[j] = '0';
            }
            if (j == std::size_t(-1))
                break;
        }
    }
}

} // namespace

TEST_SUITE_BEGIN("core_trees");

TEST_CASE("midpoint tree of MADAMIMADAM") {
    const auto t = tree_of("MADAMIMADAM");
    CHECK(labels_at_depth(t, 0) == std::vector<std::optional<char>>{'I'});
    CHECK(labels_at_depth(t, 1) == std::vector<std::optional<char>>{'D', 'D'});
    CHECK(labels_at_depth(t, 2) ==
          std::vector<std::optional<char>>{std::nullopt, std::nullopt, std::nullopt, std::nullopt});
    CHECK(labels_at_depth(t, 3) ==
          std::vector<std::optional<char>>{'M', 'A', 'A', 'M', 'M', 'A', 'A', 'M'});
    CHECK(rp::height(t) == 4);
}

TEST_CASE("midpoint tree edge cases") {
    CHECK(tree_of("").empty());
    const auto t = tree_of("AB");
    REQUIRE(!t.empty());
    CHECK(!t.root()->label.has_value());
    REQUIRE(t.root()->left);
    REQUIRE(t.root()->right);
    CHECK(t.root()->left->label == 'A');
    CHECK(t.root()->right->label == 'B');
}

TEST_CASE("inorder recovers the word") {
    CHECK(rp::string_from_word(rp::inorder_word(tree_of("MADAMIMADAM"))) == "MADAMIMADAM");
    CHECK(rp::inorder_word(tree_of("")).empty());
    CHECK(rp::string_from_word(rp::inorder_word(tree_of("ABACABA"))) == "ABACABA");
}

TEST_CASE("round trip and sibling shapes, exhaustive binary words") {
    for_all_binary_words(14, [](const std::string& w) {
        const auto t = tree_of(w);
        REQUIRE(rp::string_from_word(rp::inorder_word(t)) == w);
        // sibling subtrees always have the same shape
        std::vector<const rp::MidpointNode<char>*> stack;
        if (t.root())
            stack.push_back(t.root().get());
        while (!stack.empty()) {
            const auto* v = stack.back();
            stack.pop_back();
            REQUIRE(rp::detail::node_height(v->left) == rp::detail::node_height(v->right));
            if (v->left)
                stack.push_back(v->left.get());
            if (v->right)
                stack.push_back(v->right.get());
        }
    });
}

TEST_CASE("is_rp matches the definition") {
    CHECK(rp::is_rp_word("ABACABA"));
    CHECK_FALSE(rp::is_rp_word("MADAM"));
    CHECK(rp::is_rp_word(""));
    CHECK(rp::is_rp_word("0001000"));
    CHECK_FALSE(rp::is_rp_word("AABB"));
}

TEST_CASE("first asymmetric depth") {
    CHECK(rp::first_asymmetric_depth(tree_of("AABB")) == 0);
    CHECK(!rp::first_asymmetric_depth(tree_of("0101010")).has_value());
    CHECK(rp::first_asymmetric_depth(tree_of("MADAMIMADAM")) == 1);
    CHECK(!rp::first_asymmetric_depth(tree_of("")).has_value());
}

TEST_CASE("criterion agreement: asymmetric depth absent iff RP") {
    for_all_binary_words(14, [](const std::string& w) {
        REQUIRE(rp::is_rp_word(w) == !rp::first_asymmetric_depth(tree_of(w)).has_value());
    });
    // three letters, shorter lengths
    std::vector<std::string> words{""};
    for (std::size_t n = 1; n <= 9; ++n) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'a', 'b', 'c'})
                next.push_back(w + c);
        for (const auto& w : next)
            REQUIRE(rp::is_rp_word(w) == !rp::first_asymmetric_depth(tree_of(w)).has_value());
        words = std::move(next);
    }
}

TEST_CASE("swap_at_depth") {
    const auto t = tree_of("MADAMIMADAM");
    CHECK(rp::string_from_word(rp::inorder_word(rp::swap_at_depth(t, 1))) == "AMDMAIAMDMA");

    // swapping a symmetric level is the identity
    const auto rp_tree = tree_of("0101010");
    for (std::size_t d = 0; d < rp::height(rp_tree); ++d)
        CHECK(rp::swap_at_depth(rp_tree, d) == rp_tree);

    CHECK(rp::string_from_word(rp::inorder_word(rp::swap_at_depth(tree_of("AB"), 0))) == "BA");

    CHECK_THROWS_AS(rp::swap_at_depth(t, 4), std::out_of_range);
    CHECK_THROWS_AS(rp::swap_at_depth(tree_of(""), 0), std::out_of_range);
}

TEST_CASE("swap preserves the label multiset") {
    const std::string w = "MADAMIMADAM";
    auto swapped = rp::inorder_word(rp::swap_at_depth(tree_of(w), 1));
    std::string s = rp::string_from_word(swapped);
    std::string sorted_w(w);
    std::sort(sorted_w.begin(), sorted_w.end());
    std::sort(s.begin(), s.end());
    CHECK(s == sorted_w);
}

TEST_CASE("pairing examples") {
    CHECK(rp::pair_word("MADAMIMADAM") == "AMDMAIAMDMA");
    CHECK(rp::pair_word("0001000") == "0001000");
    CHECK(rp::pair_word("AABB") == "BBAA");
    CHECK(rp::pair_word("") == "");
}

TEST_CASE("pairing laws, exhaustive binary words") {
    for_all_binary_words(12, [](const std::string& w) {
        const std::string partner = rp::pair_word(w);
        REQUIRE(rp::pair_word(partner) == w);
        REQUIRE((partner == w) == rp::is_rp_word(w));
        std::string a(w), b(partner);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);
    });
}

TEST_CASE("operations stay total on hand-built trees") {
    // lopsided tree, not the midpoint tree of any sequence
    using Node = rp::MidpointNode<char>;
    auto leaf_b = std::make_shared<const Node>(Node{'B', nullptr, nullptr});
    auto root = std::make_shared<const Node>(Node{'A', leaf_b, nullptr});
    const MidpointTree<char> t(root);

    CHECK(rp::height(t) == 2);
    CHECK(rp::string_from_word(rp::inorder_word(t)) == "BA");
    CHECK(rp::first_asymmetric_depth(t) == 0); // nonempty vs empty child
    const auto swapped = rp::swap_at_depth(t, 0);
    CHECK(rp::string_from_word(rp::inorder_word(swapped)) == "AB");
    CHECK(rp::swap_at_depth(swapped, 0) == t);
    CHECK_THROWS_AS(rp::swap_at_depth(t, 2), std::out_of_range);
}

TEST_CASE("inorder_expand examples") {
    const std::vector<std::optional<char>> abc{'C', std::nullopt, 'B', std::nullopt, 'A'};
    CHECK(rp::string_from_word(rp::inorder_expand(abc)) == "AABAAAABAACAABAAAABAA");

    const std::vector<std::optional<char>> single{'x'};
    CHECK(rp::string_from_word(rp::inorder_expand(single)) == "x");

    // all three levels of a length-7 word carry symbols
    const std::vector<std::optional<char>> seven{'1', '0', '0'};
    CHECK(rp::string_from_word(rp::inorder_expand(seven)) == "0001000");

    CHECK(rp::inorder_expand(std::vector<std::optional<char>>{}).empty());
}

TEST_CASE("inorder_expand matches the defining recursion and length formula") {
    // every mark/symbol pattern of up to 6 levels, letters cycling a/b
    for (unsigned len = 0; len <= 6; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::vector<std::optional<char>> levels(len);
            std::uint64_t expected_len = 0;
            for (unsigned i = 0; i < len; ++i) {
                if ((mask >> i) & 1) {
                    levels[i] = (i % 2 == 0) ? 'a' : 'b';
                    expected_len += std::uint64_t{1} << i;
                }
            }
            const auto expanded = rp::inorder_expand(levels);
            REQUIRE(expanded == expand_reference(levels));
            REQUIRE(expanded.size() == expected_len);
        }
    }
}

TEST_SUITE_END();
