#include "chimap/cost.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <charconv>
#include <sstream>

#include "chimap/errors.hpp"

namespace chimap {

namespace {

constexpr std::array<std::pair<Gate, std::string_view>, 10> kGateNames{{
    {Gate::NOT, "NOT"},
    {Gate::AND, "AND"},
    {Gate::OR, "OR"},
    {Gate::NAND, "NAND"},
    {Gate::NOR, "NOR"},
    {Gate::XOR, "XOR"},
    {Gate::XNOR, "XNOR"},
    {Gate::AND3, "AND3"},
    {Gate::NAND3, "NAND3"},
    {Gate::XOR3, "XOR3"},
}};

// Cell areas per technology, in gate equivalents.
constexpr std::string_view kDefaultCsv =
    "gate,technology,ge\n"
    "NOT,umc180,0.67\nAND,umc180,1.33\nOR,umc180,1.33\nNAND,umc180,1.00\nNOR,umc180,1.00\n"
    "XOR,umc180,2.67\nXNOR,umc180,2.00\nAND3,umc180,2.33\nNAND3,umc180,1.33\nXOR3,umc180,4.67\n"
    "NOT,tsmc65,0.50\nAND,tsmc65,1.50\nOR,tsmc65,1.50\nNAND,tsmc65,1.00\nNOR,tsmc65,1.00\n"
    "XOR,tsmc65,2.50\nXNOR,tsmc65,2.50\nAND3,tsmc65,2.00\nNAND3,tsmc65,1.50\nXOR3,tsmc65,5.50\n"
    "NOT,tsmc28,0.67\nAND,tsmc28,1.33\nOR,tsmc28,1.33\nNAND,tsmc28,1.00\nNOR,tsmc28,1.00\n"
    "XOR,tsmc28,3.00\nXNOR,tsmc28,3.00\nAND3,tsmc28,1.67\nNAND3,tsmc28,1.33\nXOR3,tsmc28,4.33\n"
    "NOT,smic130,0.67\nAND,smic130,1.33\nOR,smic130,1.33\nNAND,smic130,1.00\nNOR,smic130,1.00\n"
    "XOR,smic130,2.33\nXNOR,smic130,2.33\nAND3,smic130,1.67\nNAND3,smic130,1.33\nXOR3,smic130,5.67\n"
    "NOT,smic65,0.75\nAND,smic65,1.50\nOR,smic65,1.50\nNAND,smic65,1.00\nNOR,smic65,1.00\n"
    "XOR,smic65,2.25\nXNOR,smic65,2.25\nAND3,smic65,1.75\nNAND3,smic65,1.25\nXOR3,smic65,4.75\n"
    "NOT,nangate45,0.67\nAND,nangate45,1.33\nOR,nangate45,1.33\nNAND,nangate45,1.00\nNOR,nangate45,1.00\n"
    "XOR,nangate45,2.00\nXNOR,nangate45,2.00\nAND3,nangate45,1.67\nNAND3,nangate45,1.33\nXOR3,nangate45,N/A\n"
    "NOT,nangate15,0.75\nAND,nangate15,1.50\nOR,nangate15,1.50\nNAND,nangate15,1.00\nNOR,nangate15,1.00\n"
    "XOR,nangate15,2.25\nXNOR,nangate15,2.25\nAND3,nangate15,2.00\nNAND3,nangate15,1.50\nXOR3,nangate15,N/A\n"
    "NOT,std350,0.67\nAND,std350,1.33\nOR,std350,1.33\nNAND,std350,1.00\nNOR,std350,1.00\n"
    "XOR,std350,2.33\nXNOR,std350,2.33\nAND3,std350,1.67\nNAND3,std350,1.33\nXOR3,std350,4.00\n"
    "NOT,stm65,0.50\nAND,stm65,1.50\nOR,stm65,1.50\nNAND,stm65,1.00\nNOR,stm65,1.00\n"
    "XOR,stm65,2.00\nXNOR,stm65,2.00\nAND3,stm65,2.00\nNAND3,stm65,1.50\nXOR3,stm65,N/A\n";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view gate_name(Gate g) {
    for (const auto& [gate, name] : kGateNames)
        if (gate == g) return name;
    return "?";
}

Gate parse_gate(std::string_view name) {
    for (const auto& [gate, gname] : kGateNames)
        if (gname == name) return gate;
    throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

GateEquivalents GateEquivalents::parse(std::string_view text) {
    text = trim(text);
    const auto bad = [&] { return ParseError("malformed GE value '" + std::string(text) + "'"); };
    const std::size_t dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() || frac.size() > 2) throw bad();

    std::int64_t w = 0;
    if (auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), w);
        ec != std::errc{} || p != whole.data() + whole.size() || whole.front() == '-' || whole.front() == '+')
        throw bad();
    std::int64_t f = 0;
    for (char c : frac) {
        if (c < '0' || c > '9') throw bad();
        f = f * 10 + (c - '0');
    }
    if (frac.size() == 1) f *= 10;
    return {w * 100 + f};
}

std::string GateEquivalents::to_string() const {
    const std::int64_t abs = hundredths < 0 ? -hundredths : hundredths;
    std::string frac = std::to_string(abs % 100);
    if (frac.size() < 2) frac.insert(0, "0");
    return (hundredths < 0 ? "-" : "") + std::to_string(abs / 100) + "." + frac;
}

std::optional<GateEquivalents> GateLibrary::area(Gate g) const {
    auto it = ge.find(g);
    if (it == ge.end()) return std::nullopt;
    return it->second;
}

std::vector<GateLibrary> load_gate_libraries(std::string_view csv) {
    std::vector<GateLibrary> libs;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!csv.empty()) {
        const std::size_t nl = csv.find('\n');
        std::string_view line = trim(csv.substr(0, nl));
        csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;

        const auto where = [&] { return "gate library line " + std::to_string(line_no) + ": "; };
        if (!header_seen) {
            if (line != "gate,technology,ge") throw ParseError(where() + "expected header 'gate,technology,ge'");
            header_seen = true;
            continue;
        }

        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
            throw ParseError(where() + "expected three comma-separated fields");
        const std::string_view gate_text = trim(line.substr(0, c1));
        const std::string_view tech = trim(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string_view ge_text = trim(line.substr(c2 + 1));
        if (tech.empty()) throw ParseError(where() + "empty technology name");

        const Gate gate = parse_gate(gate_text);
        std::optional<GateEquivalents> value;
        if (!ge_text.empty() && ge_text != "N/A") {
            value = GateEquivalents::parse(ge_text);
            if (value->hundredths <= 0) throw ParseError(where() + "GE value must be positive");
        }

        auto it = std::find_if(libs.begin(), libs.end(), [&](const GateLibrary& l) { return l.name == tech; });
        if (it == libs.end()) {
            libs.push_back({std::string(tech), {}});
            it = std::prev(libs.end());
        }
        if (!it->ge.emplace(gate, value).second)
            throw ParseError(where() + "duplicate entry for " + std::string(gate_text) + " in " + std::string(tech));
    }
    if (!header_seen) throw ParseError("gate library: empty input");
    return libs;
}

GateLibrary load_gate_library(std::string_view csv, std::string_view technology) {
    for (auto& lib : load_gate_libraries(csv))
        if (lib.name == technology) return lib;
    throw DomainError("unknown gate library '" + std::string(technology) + "'");
}

std::string to_csv(const std::vector<GateLibrary>& libraries) {
    std::ostringstream out;
    out << "gate,technology,ge\n";
    for (const auto& lib : libraries)
        for (const auto& [gate, value] : lib.ge)
            out << gate_name(gate) << ',' << lib.name << ',' << (value ? value->to_string() : "N/A") << '\n';
    return out.str();
}

std::string_view default_gate_library_csv() { return kDefaultCsv; }

const std::vector<GateLibrary>& shipped_gate_libraries() {
    static const std::vector<GateLibrary> libs = load_gate_libraries(kDefaultCsv);
    return libs;
}

const GateLibrary& shipped_gate_library(std::string_view name) {
    for (const auto& lib : shipped_gate_libraries())
        if (lib.name == name) return lib;
    throw DomainError("unknown gate library '" + std::string(name) + "'");
}

CircuitTemplate shipped_template(std::string_view name, int n) {
    if (n < 1) throw DomainError("bit count must be positive");
    if (name == "chi") {
        if (n < 3) throw DomainError("chi template requires n >= 3");
        return {"chi", {{Gate::XOR, 1}, {Gate::AND, 1}, {Gate::NOT, 1}}, {}, n, 3};
    }
    if (name == "chi_prime3") {
        if (n < 4) throw DomainError("chi_prime3 template requires n >= 4");
        return {"chi_prime3", {{Gate::XOR, 1}, {Gate::NAND3, 1}, {Gate::NOT, 1}}, {}, n, 4};
    }
    if (name == "cchi") {
        if (n % 4 != 0 || n < 8) throw DomainError("cchi template requires n = 2k, k even, k >= 4");
        // Every output is x + (complemented literal) * literal; the i = k-1
        // output also complements its linear term, which costs one more NOT.
        return {"cchi", {{Gate::XOR, 1}, {Gate::AND, 1}, {Gate::NOT, 1}}, {{Gate::NOT, 1}}, n, 3};
    }
    throw DomainError("unknown circuit template '" + std::string(name) + "'");
}

GateEquivalents area_estimate(const CircuitTemplate& t, const GateLibrary& lib) {
    const auto cell = [&](Gate g) {
        auto a = lib.area(g);
        if (!a)
            throw DomainError("gate " + std::string(gate_name(g)) + " unavailable in library '" + lib.name + "'");
        return *a;
    };
    GateEquivalents total;
    for (const auto& [gate, count] : t.per_bit_gates) total += cell(gate) * (static_cast<std::int64_t>(count) * t.bit_count);
    for (const auto& [gate, count] : t.fixed_gates) total += cell(gate) * count;
    return total;
}

int latency_stages(const CircuitTemplate& t) {
    if (!t.latency_stages) throw DomainError("template '" + t.name + "' carries no stage count");
    if (*t.latency_stages < 1) throw DomainError("stage count must be at least 1");
    return *t.latency_stages;
}

}  // namespace chimap
