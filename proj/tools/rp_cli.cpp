// Command-line front end for the recursively palindromic combinatorics
// library.  One subcommand per library operation, plus `verify`, which runs
// the exhaustive brute-force oracle suites.
//
// Exit status: 0 success, 1 domain error or exceeded bound, 2 usage error,
// 3 verification failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rp/catalan.hpp"
#include "rp/compositions.hpp"
#include "rp/formats.hpp"
#include "rp/records.hpp"
#include "rp/verify.hpp"

namespace {

// Candidate-space sizes (K^n, 2^(n-1)) are reported only for lengths where
// the power stays a reasonably sized number.
constexpr std::uint64_t kCandidateReportLimit = 4096;

struct Output {
    std::string format = "text";

    void emit(const rp::OutputRecord& record) const {
        if (format == "structured")
            std::cout << record.to_structured() << "\n";
        else
            std::cout << record.to_text() << "\n";
    }
};

void add_format_option(CLI::App* sub, Output& out) {
    sub->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

void require_letters_in_alphabet(const std::string& word,
                                 const std::optional<std::string>& alphabet_text) {
    // without --alphabet any characters are accepted, which matches treating
    // the distinct characters present as the alphabet
    if (!alphabet_text)
        return;
    const rp::Alphabet<char> alphabet = rp::parse_alphabet(*alphabet_text);
    const auto& letters = alphabet.letters();
    for (char c : word)
        if (std::find(letters.begin(), letters.end(), c) == letters.end())
            throw std::domain_error("letter '" + std::string(1, c) + "' is not in the alphabet");
}

std::optional<std::string> power_string(std::uint64_t base, std::uint64_t exponent) {
    if (exponent > kCandidateReportLimit)
        return std::nullopt;
    const rp::CountValue power =
        boost::multiprecision::pow(rp::CountValue(base), static_cast<unsigned>(exponent));
    return power.str();
}

rp::OutputRecord word_record(std::string w) {
    return {rp::WordRecord{std::move(w)}};
}

rp::OutputRecord composition_record(const rp::Composition& c) {
    return {rp::CompositionRecord{c.parts()}};
}

rp::OutputRecord partition_record(const rp::BinaryPartition& p) {
    return {rp::PartitionRecord{p.multiplicities()}};
}

void print_verify_report(const std::vector<rp::verify::SuiteResult>& suites, const Output& out) {
    std::size_t passed = 0;
    for (const auto& suite : suites)
        passed += suite.pass ? 1 : 0;
    const std::string tally =
        std::to_string(passed) + "/" + std::to_string(suites.size()) + " suites passed";
    if (out.format == "structured") {
        for (const auto& suite : suites)
            out.emit({rp::VerdictRecord{"suite", suite.name, suite.pass, suite.summary}});
        out.emit({rp::VerdictRecord{"verify", "all", passed == suites.size(), tally}});
        return;
    }
    for (const auto& suite : suites) {
        for (const auto& line : suite.cases)
            std::cout << "  " << line << "\n";
        std::cout << (suite.pass ? "PASS " : "FAIL ") << suite.name << " (" << suite.summary
                  << ")\n";
    }
    std::cout << "verify: " << tally << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursively palindromic words, compositions and Catalan parity"};
    app.require_subcommand(1);

    Output out;
    int exit_code = 0;

    // --- words ---

    struct {
        std::uint64_t length = 0;
        std::optional<std::uint64_t> alphabet_size;
        std::optional<std::string> alphabet;
    } count_words;
    {
        auto* sub = app.add_subcommand("count-words", "count RP words of a given length");
        sub->add_option("--length", count_words.length, "word length")->required();
        auto* size_opt =
            sub->add_option("--alphabet-size", count_words.alphabet_size, "number of letters");
        sub->add_option("--alphabet", count_words.alphabet, "alphabet letters")
            ->excludes(size_opt);
        add_format_option(sub, out);
        sub->callback([&] {
            std::uint64_t k = 0;
            if (count_words.alphabet)
                k = rp::parse_alphabet(*count_words.alphabet).size();
            else if (count_words.alphabet_size)
                k = *count_words.alphabet_size;
            else
                throw CLI::ValidationError("count-words",
                                           "either --alphabet-size or --alphabet is required");
            const rp::CountValue count = rp::count_rp_words(count_words.length, k);
            out.emit({rp::CountRecord{count.str(), power_string(k, count_words.length)}});
        });
    }

    struct {
        std::uint64_t length = 0;
        std::string alphabet;
    } list_words;
    {
        auto* sub = app.add_subcommand("list-words", "list all RP words of a given length");
        sub->add_option("--length", list_words.length, "word length")->required();
        sub->add_option("--alphabet", list_words.alphabet, "alphabet letters")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::Alphabet<char> alphabet = rp::parse_alphabet(list_words.alphabet);
            rp::for_each_rp_word(list_words.length, alphabet, [&](std::vector<char> w) {
                out.emit(word_record(rp::string_from_word(w)));
            });
        });
    }

    struct {
        std::string word;
        std::optional<std::string> alphabet;
    } check_word;
    {
        auto* sub = app.add_subcommand("check-word", "decide whether a word is RP");
        sub->add_option("word", check_word.word, "the word")->required();
        sub->add_option("--alphabet", check_word.alphabet, "restrict accepted letters");
        add_format_option(sub, out);
        sub->callback([&] {
            require_letters_in_alphabet(check_word.word, check_word.alphabet);
            out.emit({rp::VerdictRecord{"rp-word", check_word.word,
                                        rp::is_rp_word(check_word.word), ""}});
        });
    }

    struct {
        std::string word;
        std::optional<std::string> alphabet;
    } pair_word_cmd;
    {
        auto* sub = app.add_subcommand("pair-word", "partner of a word under the pairing");
        sub->add_option("word", pair_word_cmd.word, "the word")->required();
        sub->add_option("--alphabet", pair_word_cmd.alphabet, "restrict accepted letters");
        add_format_option(sub, out);
        sub->callback([&] {
            require_letters_in_alphabet(pair_word_cmd.word, pair_word_cmd.alphabet);
            rp::PairRecord pair;
            pair.elements.push_back(word_record(pair_word_cmd.word));
            pair.elements.push_back(word_record(rp::pair_word(pair_word_cmd.word)));
            out.emit({pair});
        });
    }

    struct {
        std::string word;
        std::optional<std::string> alphabet;
    } encode_word_cmd;
    {
        auto* sub = app.add_subcommand("encode-word", "level code of an RP word");
        sub->add_option("word", encode_word_cmd.word, "the word")->required();
        sub->add_option("--alphabet", encode_word_cmd.alphabet, "restrict accepted letters");
        add_format_option(sub, out);
        sub->callback([&] {
            require_letters_in_alphabet(encode_word_cmd.word, encode_word_cmd.alphabet);
            const rp::RPCode<char> code = rp::encode_word(encode_word_cmd.word);
            out.emit({rp::TreeRecord{code.levels()}});
        });
    }

    struct {
        std::string code;
    } decode_code_cmd;
    {
        auto* sub = app.add_subcommand("decode-code",
                                       "RP word of a level code (deepest level first, 0 = mark)");
        sub->add_option("code", decode_code_cmd.code, "the code")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            out.emit(word_record(rp::decode_code(rp::parse_code(decode_code_cmd.code))));
        });
    }

    // --- compositions ---

    struct {
        std::uint64_t n = 0;
    } count_comps;
    {
        auto* sub = app.add_subcommand("count-compositions", "count RP compositions of n");
        sub->add_option("n", count_comps.n, "the total")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::CountValue f = rp::count_rp_compositions(count_comps.n);
            std::optional<std::string> candidates =
                count_comps.n == 0 ? std::optional<std::string>("1")
                                   : power_string(2, count_comps.n - 1);
            out.emit({rp::CountRecord{f.str(), std::move(candidates)}});
        });
    }

    struct {
        std::uint64_t n = 0;
    } count_parts;
    {
        auto* sub = app.add_subcommand("count-binary-partitions",
                                       "count partitions of n into powers of two");
        sub->add_option("n", count_parts.n, "the total")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            out.emit({rp::CountRecord{rp::count_binary_partitions(count_parts.n).str(),
                                      std::nullopt}});
        });
    }

    struct {
        std::uint64_t n = 0;
    } list_comps;
    {
        auto* sub = app.add_subcommand("list-compositions", "list all RP compositions of n");
        sub->add_option("n", list_comps.n, "the total")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            rp::for_each_rp_composition(
                list_comps.n, [&](const rp::Composition& c) { out.emit(composition_record(c)); });
        });
    }

    struct {
        std::uint64_t n = 0;
        std::uint64_t max_n = rp::kDefaultBinaryPartitionBound;
    } list_parts;
    {
        auto* sub = app.add_subcommand("list-partitions", "list all binary partitions of n");
        sub->add_option("n", list_parts.n, "the total")->required();
        sub->add_option("--max-n", list_parts.max_n, "enumeration bound")
            ->capture_default_str();
        add_format_option(sub, out);
        sub->callback([&] {
            rp::for_each_binary_partition(
                list_parts.n, [&](const rp::BinaryPartition& p) { out.emit(partition_record(p)); },
                list_parts.max_n);
        });
    }

    struct {
        std::string text;
    } check_comp;
    {
        auto* sub = app.add_subcommand("check-composition", "decide whether a composition is RP");
        sub->add_option("composition", check_comp.text, "parts joined by +")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::Composition c = rp::parse_composition(check_comp.text);
            out.emit({rp::VerdictRecord{"rp-composition", rp::format_composition(c),
                                        rp::is_rp_composition(c), ""}});
        });
    }

    struct {
        std::string text;
    } pair_comp;
    {
        auto* sub =
            app.add_subcommand("pair-composition", "partner of a composition under the pairing");
        sub->add_option("composition", pair_comp.text, "parts joined by +")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::Composition c = rp::parse_composition(pair_comp.text);
            rp::PairRecord pair;
            pair.elements.push_back(composition_record(c));
            pair.elements.push_back(composition_record(rp::pair_composition(c)));
            out.emit({pair});
        });
    }

    struct {
        std::string text;
    } map_comp;
    {
        auto* sub = app.add_subcommand("map-composition",
                                       "binary partition matched with an RP composition");
        sub->add_option("composition", map_comp.text, "parts joined by +")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::Composition c = rp::parse_composition(map_comp.text);
            out.emit(partition_record(rp::composition_to_partition(c)));
        });
    }

    struct {
        std::string text;
    } map_part;
    {
        auto* sub = app.add_subcommand("map-partition",
                                       "RP composition matched with a binary partition");
        sub->add_option("partition", map_part.text, "parts joined by , or m=[...] form")
            ->required();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::BinaryPartition p = rp::parse_partition(map_part.text);
            out.emit(composition_record(rp::partition_to_composition(p)));
        });
    }

    // --- Catalan ---

    struct {
        std::uint64_t n = 0;
    } cat_parity;
    {
        auto* sub = app.add_subcommand("catalan-parity", "whether the n-th Catalan number is odd");
        sub->add_option("n", cat_parity.n, "index")->required();
        add_format_option(sub, out);
        sub->callback([&] {
            out.emit({rp::VerdictRecord{"catalan-odd", std::to_string(cat_parity.n),
                                        rp::parity_rule(cat_parity.n), ""}});
        });
    }

    struct {
        std::uint64_t n = 0;
    } cat_count;
    {
        auto* sub = app.add_subcommand("catalan-count", "the n-th Catalan number");
        sub->add_option("n", cat_count.n, "index")->required();
        add_format_option(sub, out);
        sub->callback(
            [&] { out.emit({rp::CountRecord{rp::catalan_number(cat_count.n).str(), std::nullopt}}); });
    }

    struct {
        unsigned n = 0;
        unsigned max_n = rp::kDefaultShapeTreeBound;
    } cat_fixed;
    {
        auto* sub = app.add_subcommand("catalan-fixed-points",
                                       "number of trees fixed by the involution");
        sub->add_option("n", cat_fixed.n, "internal nodes")->required();
        sub->add_option("--max-n", cat_fixed.max_n, "enumeration bound")->capture_default_str();
        add_format_option(sub, out);
        sub->callback([&] {
            const rp::CountValue fixed = rp::fixed_point_count(cat_fixed.n, cat_fixed.max_n);
            out.emit({rp::CountRecord{fixed.str(), rp::catalan_number(cat_fixed.n).str()}});
        });
    }

    // --- verify ---

    rp::verify::Bounds bounds;
    {
        auto* sub = app.add_subcommand("verify", "run the brute-force oracle suites");
        sub->add_option("--words-max-n", bounds.words_max_n, "word-count sweep bound, two letters")
            ->check(CLI::Range(0u, 24u))
            ->capture_default_str();
        sub->add_option("--words-k3-max-n", bounds.words_k3_max_n,
                        "word-count sweep bound, three letters")
            ->check(CLI::Range(0u, 15u))
            ->capture_default_str();
        sub->add_option("--pairing-max-n", bounds.pairing_max_n, "word pairing sweep bound")
            ->check(CLI::Range(0u, 20u))
            ->capture_default_str();
        sub->add_option("--code-max-n", bounds.code_max_n, "code bijection sweep bound")
            ->check(CLI::Range(0u, 20u))
            ->capture_default_str();
        sub->add_option("--counts-max-n", bounds.counts_max_n, "f(n)=b(n) range")
            ->check(CLI::Range(0u, 100000u))
            ->capture_default_str();
        sub->add_option("--comp-brute-max-n", bounds.comp_brute_max_n,
                        "brute-force composition sweep bound")
            ->check(CLI::Range(0u, 24u))
            ->capture_default_str();
        sub->add_option("--comp-pairing-max-n", bounds.comp_pairing_max_n,
                        "composition pairing sweep bound")
            ->check(CLI::Range(0u, 24u))
            ->capture_default_str();
        sub->add_option("--catalan-max-n", bounds.catalan_max_n, "tree involution sweep bound")
            ->check(CLI::Range(0u, 14u))
            ->capture_default_str();
        sub->add_option("--parity-max-n", bounds.parity_max_n, "Catalan parity range")
            ->check(CLI::Range(0u, 4096u))
            ->capture_default_str();
        sub->add_option("--max-candidates", bounds.max_candidates,
                        "brute-force oracle candidate bound")
            ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32))
            ->capture_default_str();
        add_format_option(sub, out);
        sub->callback([&] {
            const auto suites = rp::verify::run_all(bounds);
            print_verify_report(suites, out);
            for (const auto& suite : suites)
                if (!suite.pass)
                    exit_code = 3;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rp::BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
