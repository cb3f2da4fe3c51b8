#ifndef RP_RECORDS_HPP
#define RP_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Output records of the command-line tool.  Every record renders as
// human-readable text and as one self-delimiting JSON object per line; the
// JSON form parses back to an equal record.
//
// Record kinds and fields:
//   word        {"kind":"word","value":"MADAMIMADAM"}
//   composition {"kind":"composition","parts":[2,1,2,6,2,1,2]}
//   partition   {"kind":"partition","multiplicities":[5,0,4,0,1]}   (m_0 first)
//   count       {"kind":"count","value":"8"} with optional "candidates":"128"
//   tree        {"kind":"tree","levels":["C",null,"B",null,"A"]}    (root first,
//               null = empty mark; letters as one-character strings)
//   pair        {"kind":"pair","elements":[<record>,<record>]}
//   verdict     {"kind":"verdict","property":"rp-word","subject":"MADAM",
//                "value":false} with optional "detail"

namespace rp {

struct OutputRecord;

struct WordRecord {
    std::string value;
    friend bool operator==(const WordRecord&, const WordRecord&) = default;
};

struct CompositionRecord {
    std::vector<std::uint64_t> parts;
    friend bool operator==(const CompositionRecord&, const CompositionRecord&) = default;
};

struct PartitionRecord {
    std::vector<std::uint64_t> multiplicities;
    friend bool operator==(const PartitionRecord&, const PartitionRecord&) = default;
};

struct CountRecord {
    std::string value;                      // decimal; counts may exceed 64 bits
    std::optional<std::string> candidates;  // size of the candidate space, when meaningful
    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct TreeRecord {
    std::vector<std::optional<char>> levels; // root first; nullopt = empty mark
    friend bool operator==(const TreeRecord&, const TreeRecord&) = default;
};

struct PairRecord {
    std::vector<OutputRecord> elements; // exactly two: the input and its partner
    friend bool operator==(const PairRecord&, const PairRecord&);
};

struct VerdictRecord {
    std::string property; // what was decided, e.g. rp-word, catalan-odd, suite
    std::string subject;
    bool value = false;
    std::string detail;
    friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

struct OutputRecord {
    std::variant<WordRecord, CompositionRecord, PartitionRecord, CountRecord, TreeRecord,
                 PairRecord, VerdictRecord>
        payload;

    std::string to_text() const;
    std::string to_structured() const; // one JSON object, no trailing newline

    friend bool operator==(const OutputRecord&, const OutputRecord&);
};

OutputRecord parse_record(const std::string& line);

} // namespace rp

#endif
