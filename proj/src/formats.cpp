#include "rp/formats.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rp {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint64_t parse_number(std::string_view token, const char* what) {
    if (token.empty())
        throw std::invalid_argument(std::string(what) + ": empty number");
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string(what) + ": invalid number '" +
                                        std::string(token) + "'");
        const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
            throw std::invalid_argument(std::string(what) + ": number out of range '" +
                                        std::string(token) + "'");
        value = value * 10 + digit;
    }
    return value;
}

template <typename Int>
std::string join(const std::vector<Int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out.push_back(sep);
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::vector<char> word_from_string(std::string_view s) {
    return std::vector<char>(s.begin(), s.end());
}

std::string string_from_word(const std::vector<char>& w) {
    return std::string(w.begin(), w.end());
}

bool is_rp_word(std::string_view w) {
    return is_rp(std::span<const char>(w.data(), w.size()));
}

std::string pair_word(std::string_view w) {
    return string_from_word(pair_sequence(std::span<const char>(w.data(), w.size())));
}

RPCode<char> encode_word(std::string_view w) {
    return encode_rp_word(std::span<const char>(w.data(), w.size()));
}

std::string decode_code(const RPCode<char>& code) {
    return string_from_word(decode_rp_code(code));
}

Alphabet<char> parse_alphabet(std::string_view s) {
    return Alphabet<char>(std::vector<char>(s.begin(), s.end()));
}

RPCode<char> parse_code(std::string_view display) {
    // the display runs deepest level first; levels are stored root first
    std::vector<std::optional<char>> levels(display.size());
    for (std::size_t pos = 0; pos < display.size(); ++pos) {
        const char c = display[pos];
        if (c != '0')
            levels[display.size() - 1 - pos] = c;
    }
    return RPCode<char>(std::move(levels));
}

std::string format_code(const RPCode<char>& code) {
    std::string out;
    const auto& levels = code.levels();
    for (std::size_t i = levels.size(); i-- > 0;)
        out.push_back(levels[i] ? *levels[i] : '0');
    return out;
}

Composition parse_composition(std::string_view s) {
    if (s.empty())
        return Composition{};
    std::vector<Part> parts;
    for (std::string_view token : split(s, '+'))
        parts.push_back(parse_number(token, "composition"));
    return Composition(std::move(parts));
}

std::string format_composition(const Composition& c) {
    return join(c.parts(), '+');
}

BinaryPartition parse_partition(std::string_view s) {
    if (s.empty())
        return BinaryPartition{};
    if (s.rfind("m=[", 0) == 0) {
        if (s.back() != ']')
            throw std::invalid_argument("partition: multiplicity form must end with ]");
        const std::string_view inner = s.substr(3, s.size() - 4);
        if (inner.empty())
            return BinaryPartition{};
        std::vector<std::uint64_t> ms;
        for (std::string_view token : split(inner, ','))
            ms.push_back(parse_number(token, "partition"));
        return BinaryPartition(std::move(ms));
    }
    std::vector<std::uint64_t> parts;
    for (std::string_view token : split(s, ','))
        parts.push_back(parse_number(token, "partition"));
    return BinaryPartition::from_parts(parts);
}

std::string format_partition(const BinaryPartition& p) {
    return join(p.parts_descending(), ',');
}

} // namespace rp
