// Acceptance suite: one check per release criterion, each printed as a
// PASS/FAIL line with its runtime.  Takes the path to the rpcli binary as
// argv[1]; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "rp/catalan.hpp"
#include "rp/compositions.hpp"
#include "rp/core_trees.hpp"
#include "rp/formats.hpp"
#include "rp/records.hpp"
#include "rp/verify.hpp"

namespace {

std::string g_cli;

struct RunResult {
    std::string output;
    int status = -1;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out.push_back(c);
    }
    out += "'";
    return out;
}

RunResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(g_cli);
    for (const auto& arg : args)
        cmd += " " + shell_quote(arg);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

struct Criterion {
    int number;
    std::string name;
    double time_limit_seconds; // 0 = no limit
    std::function<std::optional<std::string>()> check; // failure message, or nothing
};

// --- criterion 4 helper: the label-uniformity pairing rule ---------------
//
// Rule under test: walk the levels of the midpoint tree top-down, find the
// first depth whose labels are not all equal, and swap subtrees one level
// above it.  On AABB the first non-uniform level is depth 2 (A,A,B,B), but
// the depth-1 nodes each have two equal children, so the swap does nothing
// and the non-RP word AABB comes back unchanged.  The shipped pairing uses
// the first depth containing a node with unequal subtrees instead, which
// moves AABB to BBAA.

std::string level_label_pairing(const std::string& word) {
    const auto t = rp::midpoint_tree(std::span<const char>(word.data(), word.size()));
    std::vector<const rp::MidpointNode<char>*> level;
    if (t.root())
        level.push_back(t.root().get());
    for (std::size_t depth = 0; !level.empty(); ++depth) {
        bool uniform = true;
        for (const auto* v : level)
            if (!(v->label == level.front()->label))
                uniform = false;
        if (!uniform) {
            if (depth == 0)
                return word; // no level above the root to swap
            return rp::string_from_word(rp::inorder_word(rp::swap_at_depth(t, depth - 1)));
        }
        std::vector<const rp::MidpointNode<char>*> next;
        for (const auto* v : level) {
            if (v->left)
                next.push_back(v->left.get());
            if (v->right)
                next.push_back(v->right.get());
        }
        level = std::move(next);
    }
    return word; // all levels uniform
}

// --------------------------------------------------------------------------

std::optional<std::string> suite_failure(const rp::verify::SuiteResult& suite) {
    if (suite.pass)
        return std::nullopt;
    return suite.name + ": " + suite.summary;
}

std::optional<std::string> criterion_word_list() {
    const RunResult listed = run_cli({"list-words", "--length", "7", "--alphabet", "01"});
    const std::string expected =
        "0000000\n0001000\n0100010\n0101010\n1010101\n1011101\n1110111\n1111111\n";
    if (listed.status != 0 || listed.output != expected)
        return "list-words output differs from the printed length-7 list";
    const RunResult counted = run_cli({"count-words", "--length", "7", "--alphabet-size", "2"});
    if (counted.status != 0 || counted.output != "8\n")
        return "count-words did not report 8";
    const RunResult structured = run_cli(
        {"count-words", "--length", "7", "--alphabet-size", "2", "--format", "structured"});
    if (structured.status != 0)
        return "structured count-words failed";
    const rp::OutputRecord record =
        rp::parse_record(structured.output.substr(0, structured.output.find('\n')));
    const auto* count = std::get_if<rp::CountRecord>(&record.payload);
    if (!count || count->value != "8" || count->candidates != std::optional<std::string>("128"))
        return "count-words record does not report 8 of 128 candidates";
    return std::nullopt;
}

std::optional<std::string> criterion_word_counts() {
    rp::verify::Bounds bounds; // defaults: n <= 16 for K=2, n <= 9 for K=3
    return suite_failure(rp::verify::word_count_suite(bounds));
}

std::optional<std::string> criterion_pairing() {
    if (rp::pair_word("MADAMIMADAM") != "AMDMAIAMDMA")
        return "MADAMIMADAM did not pair with AMDMAIAMDMA";
    rp::verify::Bounds bounds; // pairing sweep over all binary words n <= 14
    return suite_failure(rp::verify::word_pairing_suite(bounds));
}

std::optional<std::string> criterion_aabb_regression() {
    if (rp::is_rp_word("AABB"))
        return "AABB misclassified as RP";
    const std::string partner = rp::pair_word("AABB");
    if (partner == "AABB")
        return "AABB must not be a fixed point of the pairing";
    if (partner != "BBAA")
        return "AABB paired with " + partner + " instead of BBAA";
    if (rp::pair_word(partner) != "AABB")
        return "pairing is not an involution on AABB";
    // the label-uniformity rule wrongly fixes AABB; this is why the shipped
    // pairing compares subtrees instead
    if (level_label_pairing("AABB") != "AABB")
        return "expected the label-uniformity rule to fix AABB";
    // on the showcase word both rules agree
    if (level_label_pairing("MADAMIMADAM") != "AMDMAIAMDMA")
        return "label-uniformity rule disagrees on MADAMIMADAM";
    return std::nullopt;
}

std::optional<std::string> criterion_composition_counts() {
    rp::verify::Bounds bounds; // f = b to 40, brute force to 20
    return suite_failure(rp::verify::composition_count_suite(bounds));
}

std::optional<std::string> criterion_partition_bijection() {
    rp::verify::Bounds bounds; // the printed 37 example plus round trips to 20
    return suite_failure(rp::verify::composition_bijection_suite(bounds));
}

std::optional<std::string> criterion_code_bijection() {
    const RunResult decoded = run_cli({"decode-code", "A0B0C"});
    if (decoded.status != 0 || decoded.output != "AABAAAABAACAABAAAABAA\n")
        return "decode-code A0B0C did not print the 21-letter word";
    const RunResult encoded = run_cli({"encode-word", "AABAAAABAACAABAAAABAA"});
    if (encoded.status != 0 || encoded.output != "A0B0C\n")
        return "encode-word did not print A0B0C";
    rp::verify::Bounds bounds; // exhaustive round trips n <= 16, two letters
    return suite_failure(rp::verify::word_code_suite(bounds));
}

std::optional<std::string> criterion_catalan() {
    rp::verify::Bounds bounds; // involution to n <= 12, parity rule to 64
    const auto failure = suite_failure(rp::verify::catalan_suite(bounds));
    if (failure)
        return failure;
    for (unsigned n = 0; n <= 12; ++n) {
        const bool expect_one = (n == 0 || n == 1 || n == 3 || n == 7);
        if (rp::fixed_point_count(n) != (expect_one ? 1 : 0))
            return "fixed point count wrong at n=" + std::to_string(n);
    }
    return std::nullopt;
}

std::optional<std::string> criterion_determinism() {
    const RunResult first = run_cli({"verify"});
    const RunResult second = run_cli({"verify"});
    if (first.status != 0)
        return "verify exited with status " + std::to_string(first.status);
    if (second.status != 0)
        return "second verify exited with status " + std::to_string(second.status);
    if (first.output != second.output)
        return "verify reports differ between runs";
    if (first.output.empty())
        return "verify produced no report";
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-rpcli>\n";
        return 2;
    }
    g_cli = argv[1];

    const std::vector<Criterion> criteria{
        {1, "length-7 word list and count", 1.0, criterion_word_list},
        {2, "RP word counts match brute force (K=2 n<=16, K=3 n<=9)", 30.0, criterion_word_counts},
        {3, "pairing involution laws over binary words n<=14", 60.0, criterion_pairing},
        {4, "AABB pairs with BBAA; label-uniformity rule would fix it", 1.0,
         criterion_aabb_regression},
        {5, "f(n)=b(n) to 40 and brute-force composition counts to 20", 60.0, criterion_composition_counts},
        {6, "partition/composition bijection exact, round trips to 20", 60.0,
         criterion_partition_bijection},
        {7, "code A0B0C maps both ways; code round trips n<=16", 10.0, criterion_code_bijection},
        {8, "Catalan involution to n<=12 and parity rule to 64", 120.0, criterion_catalan},
        {9, "verify is deterministic and exits 0", 0.0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::optional<std::string> failure;
        try {
            failure = criterion.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!failure && criterion.time_limit_seconds > 0 &&
            seconds > criterion.time_limit_seconds) {
            std::ostringstream msg;
            msg << "took " << seconds << "s, limit " << criterion.time_limit_seconds << "s";
            failure = msg.str();
        }
        std::printf("%s criterion %d: %s (%.2fs)\n", failure ? "FAIL" : "PASS", criterion.number,
                    criterion.name.c_str(), seconds);
        if (failure) {
            std::printf("     %s\n", failure->c_str());
            ++failures;
        }
    }
    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
