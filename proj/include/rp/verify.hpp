#ifndef RP_VERIFY_HPP
#define RP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rp/words.hpp"

// Self-verification suites.  Each suite sweeps an exhaustive range, checks
// the claimed identities against independent brute-force oracles, and stops
// at the first failure with a minimal counterexample.  All output is
// deterministic for fixed bounds.

namespace rp::verify {

struct Bounds {
    unsigned words_max_n = 16;        // word-count sweep, two letters
    unsigned words_k3_max_n = 9;      // word-count sweep, three letters
    unsigned pairing_max_n = 14;      // word pairing sweep over binary words
    unsigned code_max_n = 16;         // code bijection sweep over binary words
    unsigned counts_max_n = 40;       // f(n) == b(n) range
    unsigned comp_brute_max_n = 20;   // brute-force composition sweep
    unsigned comp_pairing_max_n = 14; // composition pairing sweep
    unsigned catalan_max_n = 12;      // tree involution sweep
    unsigned parity_max_n = 64;       // parity rule vs exact Catalan numbers
    std::uint64_t max_candidates = kDefaultOracleBound;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> cases; // one line per checked case or range
    std::string summary;            // short tally, or the counterexample on failure
};

SuiteResult word_count_suite(const Bounds& bounds);
SuiteResult word_pairing_suite(const Bounds& bounds);
SuiteResult word_code_suite(const Bounds& bounds);
SuiteResult composition_count_suite(const Bounds& bounds);
SuiteResult composition_bijection_suite(const Bounds& bounds);
SuiteResult composition_pairing_suite(const Bounds& bounds);
SuiteResult catalan_suite(const Bounds& bounds);

// Runs every suite in a fixed order.
std::vector<SuiteResult> run_all(const Bounds& bounds);

} // namespace rp::verify

#endif
