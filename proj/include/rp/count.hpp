#ifndef RP_COUNT_HPP
#define RP_COUNT_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rp {

// Exact nonnegative counts.  Several of the counting functions overflow 64
// bits at modest arguments (K^alpha(n), Catalan numbers past C_33), so all
// counts are arbitrary precision.
using CountValue = boost::multiprecision::cpp_int;

// Thrown by the exhaustive enumerators and oracles when a requested sweep
// exceeds its configured guard.  Callers may retry with a larger bound.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rp

#endif
