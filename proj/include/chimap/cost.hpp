#pragma once

// Gate-equivalent area and NAND/NOR-stage latency estimates for the
// shift-invariant S-box circuits, driven by per-technology cell areas.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chimap {

enum class Gate { NOT, AND, OR, NAND, NOR, XOR, XNOR, AND3, NAND3, XOR3 };

std::string_view gate_name(Gate g);
// Throws ParseError for names outside the supported gate set.
Gate parse_gate(std::string_view name);

// Exact decimal area in hundredths of a gate equivalent.
struct GateEquivalents {
    std::int64_t hundredths = 0;

    static GateEquivalents parse(std::string_view text);
    std::string to_string() const;  // always two fraction digits

    GateEquivalents& operator+=(GateEquivalents o) {
        hundredths += o.hundredths;
        return *this;
    }
    friend GateEquivalents operator*(GateEquivalents g, std::int64_t k) { return {g.hundredths * k}; }
    friend auto operator<=>(const GateEquivalents&, const GateEquivalents&) = default;
};

struct GateLibrary {
    std::string name;
    // std::nullopt marks a cell the technology does not provide.
    std::map<Gate, std::optional<GateEquivalents>> ge;

    std::optional<GateEquivalents> area(Gate g) const;
};

// Rows "gate,technology,ge" under that exact header. "N/A" or an empty ge
// field loads as unavailable. Libraries keep the order of first appearance.
// Throws ParseError on malformed rows, unknown gates or non-positive areas.
std::vector<GateLibrary> load_gate_libraries(std::string_view csv);
// Same, restricted to one technology; throws DomainError if it is absent.
GateLibrary load_gate_library(std::string_view csv, std::string_view technology);

std::string to_csv(const std::vector<GateLibrary>& libraries);

// The nine CMOS libraries shipped with the tool, as CSV text and parsed.
std::string_view default_gate_library_csv();
const std::vector<GateLibrary>& shipped_gate_libraries();
// Throws DomainError for unknown names.
const GateLibrary& shipped_gate_library(std::string_view name);

struct GateCount {
    Gate gate;
    int count;
};

struct CircuitTemplate {
    std::string name;
    std::vector<GateCount> per_bit_gates;  // replicated bit_count times
    std::vector<GateCount> fixed_gates;    // added once
    int bit_count = 0;
    std::optional<int> latency_stages;
};

// Shipped templates: "chi", "chi_prime3", "cchi". Throws DomainError for
// unknown names or a dimension the family does not admit.
CircuitTemplate shipped_template(std::string_view name, int n);

// Throws DomainError when a gate is missing or unavailable in the library.
GateEquivalents area_estimate(const CircuitTemplate& t, const GateLibrary& lib);

// Throws DomainError for templates without a stage count.
int latency_stages(const CircuitTemplate& t);

}  // namespace chimap
