#ifndef RP_FORMATS_HPP
#define RP_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rp/compositions.hpp"
#include "rp/words.hpp"

// Text syntax shared by the command-line tool and the tests.
//
//   word         contiguous characters, e.g. MADAMIMADAM; may be empty
//   code         level labels deepest level first with 0 as the empty mark,
//                e.g. A0B0C; may be empty (the code of the empty word)
//   composition  decimal parts joined by +, e.g. 2+1+2+6+2+1+2; empty string
//                for the empty composition
//   partition    decimal parts joined by , descending, e.g. 16,4,4,4,4,1,1,1,1,1,
//                or multiplicity form m=[5,0,4,0,1] (m_0 first); empty string
//                for the empty partition
//
// Codes are displayed deepest level first to match the binary digits of the
// encoded length read most significant first; internally levels are stored
// root first.  Since 0 denotes the empty mark, a text code over an alphabet
// that itself contains the letter 0 is ambiguous; the structured output
// format carries explicit marks and has no such collision.

namespace rp {

std::vector<char> word_from_string(std::string_view s);
std::string string_from_word(const std::vector<char>& w);

bool is_rp_word(std::string_view w);
std::string pair_word(std::string_view w);
RPCode<char> encode_word(std::string_view w);
std::string decode_code(const RPCode<char>& code);

Alphabet<char> parse_alphabet(std::string_view s);

RPCode<char> parse_code(std::string_view display);
std::string format_code(const RPCode<char>& code);

Composition parse_composition(std::string_view s);
std::string format_composition(const Composition& c);

BinaryPartition parse_partition(std::string_view s);
std::string format_partition(const BinaryPartition& p);

} // namespace rp

#endif
