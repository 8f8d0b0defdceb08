#include "chimap/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "chimap/errors.hpp"

namespace chimap {

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::differential: return "differential";
        case Metric::walsh: return "walsh";
        case Metric::boomerang: return "boomerang";
        case Metric::dlct: return "dlct";
    }
    return "unknown";
}

std::string_view metric_domain(Metric m) {
    switch (m) {
        case Metric::differential: return "a!=0,all b";
        case Metric::walsh: return "all a,all b";
        case Metric::boomerang: return "a!=0,b!=0";
        case Metric::dlct: return "a!=0,all b";
    }
    return "unknown";
}

std::uint64_t SpectrumReport::total_count() const {
    std::uint64_t total = 0;
    for (const auto& [value, count] : multiset) total += count;
    return total;
}

std::string SpectrumReport::compact() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [value, count] : multiset) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(value);
        if (count != 1) out += '^' + std::to_string(count);
    }
    return out + "}";
}

void fast_walsh_hadamard(std::span<std::int64_t> v) {
    if (!std::has_single_bit(v.size())) throw DomainError("Walsh-Hadamard transform size must be a power of two");
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = v[j];
                const std::int64_t y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

std::vector<std::int64_t> ddt_table(const TruthTable& f) {
    const std::size_t size = f.size();
    std::vector<std::int64_t> t(size * size, 0);
    for (Word a = 0; a < size; ++a) {
        std::int64_t* row = t.data() + a * size;
        for (Word x = 0; x < size; ++x) ++row[f[x] ^ f[x ^ a]];
    }
    return t;
}

std::vector<std::int64_t> walsh_table(const TruthTable& f) {
    const std::size_t size = f.size();
    std::vector<std::int64_t> t(size * size);
    for (Word a = 0; a < size; ++a) {
        std::span<std::int64_t> row(t.data() + a * size, size);
        for (Word x = 0; x < size; ++x) row[x] = (std::popcount(a & f[x]) & 1) ? -1 : 1;
        fast_walsh_hadamard(row);
    }
    return t;
}

std::vector<std::int64_t> bct_table(const TruthTable& f) {
    const TruthTable inv = invert(f);
    const std::size_t size = f.size();
    std::vector<std::int64_t> t(size * size, 0);
    for (Word a = 0; a < size; ++a) {
        for (Word b = 0; b < size; ++b) {
            std::int64_t count = 0;
            for (Word x = 0; x < size; ++x)
                count += (inv[f[x] ^ b] ^ inv[f[x ^ a] ^ b]) == a;
            t[a * size + b] = count;
        }
    }
    return t;
}

std::vector<std::int64_t> dlct_table(const TruthTable& f) {
    const std::size_t size = f.size();
    std::vector<std::int64_t> t(size * size, 0);
    for (Word a = 0; a < size; ++a) {
        std::span<std::int64_t> row(t.data() + a * size, size);
        for (Word x = 0; x < size; ++x) ++row[f[x] ^ f[x ^ a]];
        // row[b] becomes #{b.d = 0} - #{b.d = 1} = 2 * DLCT(a, b)
        fast_walsh_hadamard(row);
        for (auto& v : row) v /= 2;
    }
    return t;
}

namespace {

enum class Domain { skip_zero_a, all, skip_zero_ab };

SpectrumReport collect(Metric metric, int n, const std::vector<std::int64_t>& table, Domain domain) {
    SpectrumReport r;
    r.metric = metric;
    r.n = n;
    const std::size_t size = std::size_t{1} << n;
    const Word a0 = domain == Domain::all ? 0 : 1;
    const Word b0 = domain == Domain::skip_zero_ab ? 1 : 0;
    for (Word a = a0; a < size; ++a)
        for (Word b = b0; b < size; ++b) ++r.multiset[table[a * size + b]];
    return r;
}

std::int64_t max_over(const std::vector<std::int64_t>& table, std::size_t size, Word a0, Word b0, bool absolute) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (Word a = a0; a < size; ++a)
        for (Word b = b0; b < size; ++b) {
            const std::int64_t v = absolute ? std::llabs(table[a * size + b]) : table[a * size + b];
            best = std::max(best, v);
        }
    return best;
}

}  // namespace

SpectrumReport differential_spectrum(const TruthTable& f) {
    const auto t = ddt_table(f);
    auto r = collect(Metric::differential, f.n(), t, Domain::skip_zero_a);
    r.headline = max_over(t, f.size(), 1, 0, false);
    return r;
}

SpectrumReport walsh_spectrum(const TruthTable& f) {
    const auto t = walsh_table(f);
    auto r = collect(Metric::walsh, f.n(), t, Domain::all);
    const std::int64_t max_abs = max_over(t, f.size(), 1, 0, true);
    r.headline = static_cast<std::int64_t>(f.size() / 2) - max_abs / 2;
    return r;
}

SpectrumReport boomerang_spectrum(const TruthTable& f) {
    const auto t = bct_table(f);
    auto r = collect(Metric::boomerang, f.n(), t, Domain::skip_zero_ab);
    r.headline = max_over(t, f.size(), 1, 1, false);
    return r;
}

SpectrumReport dlct_spectrum(const TruthTable& f) {
    const auto t = dlct_table(f);
    auto r = collect(Metric::dlct, f.n(), t, Domain::skip_zero_a);
    r.headline = max_over(t, f.size(), 1, 1, false);
    return r;
}

SpectrumReport spectrum(const TruthTable& f, Metric metric) {
    switch (metric) {
        case Metric::differential: return differential_spectrum(f);
        case Metric::walsh: return walsh_spectrum(f);
        case Metric::boomerang: return boomerang_spectrum(f);
        case Metric::dlct: return dlct_spectrum(f);
    }
    throw DomainError("unknown metric");
}

std::map<std::int64_t, std::uint64_t> parse_compact_multiset(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("multiset must be enclosed in braces");
    s = s.substr(1, s.size() - 2);

    std::map<std::int64_t, std::uint64_t> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t end = std::min(s.find(',', pos), s.size());
        const std::string_view item(s.data() + pos, end - pos);
        const std::size_t caret = item.find('^');
        std::int64_t value = 0;
        std::uint64_t count = 1;
        const auto value_text = item.substr(0, caret);
        if (auto [p, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
            ec != std::errc{} || p != value_text.data() + value_text.size())
            throw ParseError("bad multiset value '" + std::string(item) + "'");
        if (caret != std::string_view::npos) {
            const auto count_text = item.substr(caret + 1);
            if (auto [p, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
                ec != std::errc{} || p != count_text.data() + count_text.size())
                throw ParseError("bad multiset count '" + std::string(item) + "'");
        }
        out[value] += count;
        pos = end + 1;
    }
    return out;
}

}  // namespace chimap
