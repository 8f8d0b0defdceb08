#pragma once

// Exhaustive differential, Walsh, boomerang and differential-linear profiles
// of a mapping F_2^n -> F_2^n.
//
// Enumeration domains of the reported multisets:
//   differential  a != 0, all b      (2^n - 1) * 2^n values
//   walsh         all a, all b       2^{2n} values, a is the output mask
//   boomerang     a != 0, b != 0     (2^n - 1)^2 values
//   dlct          a != 0, all b      (2^n - 1) * 2^n values, b is the output mask
// Headlines: max delta over a != 0; NL = 2^{n-1} - max_{a != 0, b} |W| / 2;
// max beta over a, b != 0; max DLCT over a, b != 0.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chimap/boolmap.hpp"

namespace chimap {

enum class Metric { differential, walsh, boomerang, dlct };

std::string_view metric_name(Metric m);
std::string_view metric_domain(Metric m);

struct SpectrumReport {
    Metric metric = Metric::differential;
    int n = 0;
    std::int64_t headline = 0;
    // value -> number of (a, b) positions carrying it
    std::map<std::int64_t, std::uint64_t> multiset;

    std::uint64_t total_count() const;
    // Compact rendering "{0^676,2^176,4^120,8^20}"; a count of 1 is
    // written without exponent.
    std::string compact() const;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

// Row-major 2^n x 2^n tables indexed [a * 2^n + b].
std::vector<std::int64_t> ddt_table(const TruthTable& f);
std::vector<std::int64_t> walsh_table(const TruthTable& f);  // [a = output mask][b = input mask]
std::vector<std::int64_t> bct_table(const TruthTable& f);    // throws NotAPermutation
std::vector<std::int64_t> dlct_table(const TruthTable& f);

SpectrumReport differential_spectrum(const TruthTable& f);
SpectrumReport walsh_spectrum(const TruthTable& f);
SpectrumReport boomerang_spectrum(const TruthTable& f);
SpectrumReport dlct_spectrum(const TruthTable& f);
SpectrumReport spectrum(const TruthTable& f, Metric metric);

// Unnormalized in-place Walsh-Hadamard transform; size must be a power of two.
void fast_walsh_hadamard(std::span<std::int64_t> values);

// Parses "{0^676,2^176,32}" into a multiset. Throws ParseError.
std::map<std::int64_t, std::uint64_t> parse_compact_multiset(std::string_view text);

}  // namespace chimap
