#include "chimap/serialize.hpp"

#include <charconv>
#include <fstream>

#include "chimap/errors.hpp"

namespace chimap {

namespace {

std::string to_hex(Word w, int digits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i, w >>= 4) s[static_cast<std::size_t>(i)] = kDigits[w & 0xf];
    return s;
}

Word from_hex(const std::string& s) {
    Word w = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), w, 16);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("malformed hex entry '" + s + "'");
    return w;
}

}  // namespace

nlohmann::ordered_json table_to_json(const TruthTable& table, const std::string& family) {
    const int digits = (table.n() + 3) / 4;
    auto entries = nlohmann::ordered_json::array();
    for (Word e : table.entries()) entries.push_back(to_hex(e, digits));
    nlohmann::ordered_json doc;
    doc["n"] = table.n();
    doc["family"] = family;
    doc["entries"] = std::move(entries);
    return doc;
}

TableDocument table_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("truth table document must be an object");
    for (const char* key : {"n", "family", "entries"})
        if (!doc.contains(key)) throw ParseError(std::string("truth table document lacks field '") + key + "'");
    if (!doc["n"].is_number_integer()) throw ParseError("field 'n' must be an integer");
    if (!doc["family"].is_string()) throw ParseError("field 'family' must be a string");
    if (!doc["entries"].is_array()) throw ParseError("field 'entries' must be an array");

    const int n = doc["n"].get<int>();
    check_dimension(n);
    std::vector<Word> entries;
    entries.reserve(doc["entries"].size());
    for (const auto& e : doc["entries"]) {
        if (!e.is_string()) throw ParseError("truth table entries must be hex strings");
        entries.push_back(from_hex(e.get<std::string>()));
    }
    return {doc["family"].get<std::string>(), TruthTable(n, std::move(entries))};
}

void write_table(const std::filesystem::path& path, const TruthTable& table, const std::string& family) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    out << table_to_json(table, family).dump(1) << '\n';
    if (!out) throw std::ios_base::failure("write to '" + path.string() + "' failed");
}

TableDocument read_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return table_from_json(doc);
}

nlohmann::ordered_json report_to_json(const SpectrumReport& report) {
    auto spectrum = nlohmann::ordered_json::array();
    for (const auto& [value, count] : report.multiset) spectrum.push_back({value, count});
    nlohmann::ordered_json doc;
    doc["metric"] = metric_name(report.metric);
    doc["n"] = report.n;
    doc["headline"] = report.headline;
    doc["spectrum"] = std::move(spectrum);
    doc["domain"] = metric_domain(report.metric);
    return doc;
}

}  // namespace chimap
