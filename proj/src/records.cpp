#include "rp/records.hpp"

#include <stdexcept>

#include "json.hpp"

#include "rp/compositions.hpp"
#include "rp/formats.hpp"
#include "rp/words.hpp"

namespace rp {

using nlohmann::json;

bool operator==(const PairRecord& a, const PairRecord& b) {
    return a.elements == b.elements;
}

bool operator==(const OutputRecord& a, const OutputRecord& b) {
    return a.payload == b.payload;
}

namespace {

json to_json(const OutputRecord& record);

json levels_to_json(const std::vector<std::optional<char>>& levels) {
    json arr = json::array();
    for (const auto& level : levels) {
        if (level)
            arr.push_back(std::string(1, *level));
        else
            arr.push_back(nullptr);
    }
    return arr;
}

std::vector<std::optional<char>> levels_from_json(const json& arr) {
    std::vector<std::optional<char>> levels;
    for (const auto& entry : arr) {
        if (entry.is_null()) {
            levels.emplace_back(std::nullopt);
        } else {
            const std::string s = entry.get<std::string>();
            if (s.size() != 1)
                throw std::invalid_argument("record: tree levels must be single characters");
            levels.emplace_back(s[0]);
        }
    }
    return levels;
}

struct JsonBuilder {
    json operator()(const WordRecord& r) const {
        return json{{"kind", "word"}, {"value", r.value}};
    }
    json operator()(const CompositionRecord& r) const {
        return json{{"kind", "composition"}, {"parts", r.parts}};
    }
    json operator()(const PartitionRecord& r) const {
        return json{{"kind", "partition"}, {"multiplicities", r.multiplicities}};
    }
    json operator()(const CountRecord& r) const {
        json out{{"kind", "count"}, {"value", r.value}};
        if (r.candidates)
            out["candidates"] = *r.candidates;
        return out;
    }
    json operator()(const TreeRecord& r) const {
        return json{{"kind", "tree"}, {"levels", levels_to_json(r.levels)}};
    }
    json operator()(const PairRecord& r) const {
        json elements = json::array();
        for (const OutputRecord& element : r.elements)
            elements.push_back(to_json(element));
        return json{{"kind", "pair"}, {"elements", elements}};
    }
    json operator()(const VerdictRecord& r) const {
        json out{{"kind", "verdict"}, {"property", r.property}, {"value", r.value}};
        if (!r.subject.empty())
            out["subject"] = r.subject;
        if (!r.detail.empty())
            out["detail"] = r.detail;
        return out;
    }
};

json to_json(const OutputRecord& record) {
    return std::visit(JsonBuilder{}, record.payload);
}

OutputRecord from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "word")
        return {WordRecord{j.at("value").get<std::string>()}};
    if (kind == "composition")
        return {CompositionRecord{j.at("parts").get<std::vector<std::uint64_t>>()}};
    if (kind == "partition")
        return {PartitionRecord{j.at("multiplicities").get<std::vector<std::uint64_t>>()}};
    if (kind == "count") {
        CountRecord r{j.at("value").get<std::string>(), std::nullopt};
        if (j.contains("candidates"))
            r.candidates = j.at("candidates").get<std::string>();
        return {r};
    }
    if (kind == "tree")
        return {TreeRecord{levels_from_json(j.at("levels"))}};
    if (kind == "pair") {
        PairRecord r;
        for (const auto& element : j.at("elements"))
            r.elements.push_back(from_json(element));
        return {r};
    }
    if (kind == "verdict") {
        VerdictRecord r;
        r.property = j.at("property").get<std::string>();
        r.value = j.at("value").get<bool>();
        if (j.contains("subject"))
            r.subject = j.at("subject").get<std::string>();
        if (j.contains("detail"))
            r.detail = j.at("detail").get<std::string>();
        return {r};
    }
    throw std::invalid_argument("record: unknown kind '" + kind + "'");
}

struct TextBuilder {
    std::string operator()(const WordRecord& r) const { return r.value; }
    std::string operator()(const CompositionRecord& r) const {
        return format_composition(Composition(r.parts));
    }
    std::string operator()(const PartitionRecord& r) const {
        return format_partition(BinaryPartition(r.multiplicities));
    }
    std::string operator()(const CountRecord& r) const { return r.value; }
    std::string operator()(const TreeRecord& r) const {
        return format_code(RPCode<char>(r.levels));
    }
    std::string operator()(const PairRecord& r) const {
        // text output shows the partner only
        return r.elements.empty() ? std::string{} : r.elements.back().to_text();
    }
    std::string operator()(const VerdictRecord& r) const {
        if (r.property == "catalan-odd")
            return r.value ? "odd" : "even";
        if (r.property == "suite" || r.property == "verify") {
            std::string line = (r.value ? "PASS " : "FAIL ") + r.subject;
            if (!r.detail.empty())
                line += ": " + r.detail;
            return line;
        }
        return r.value ? "true" : "false";
    }
};

} // namespace

std::string OutputRecord::to_text() const {
    return std::visit(TextBuilder{}, payload);
}

std::string OutputRecord::to_structured() const {
    return to_json(*this).dump();
}

OutputRecord parse_record(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record: not valid JSON: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record: malformed fields: ") + e.what());
    }
}

} // namespace rp
