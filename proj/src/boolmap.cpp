#include "chimap/boolmap.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "chimap/errors.hpp"

namespace chimap {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension) {
        throw DomainError("dimension " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxDimension) + "]");
    }
}

namespace {

void require_same_dimension(const TruthTable& f, const TruthTable& g) {
    if (f.n() != g.n()) throw DimensionMismatch(f.n(), g.n());
}

template <typename Op>
TruthTable zip_entries(const TruthTable& f, const TruthTable& g, Op op) {
    require_same_dimension(f, g);
    std::vector<Word> out(f.size());
    for (std::size_t u = 0; u < out.size(); ++u) out[u] = op(f[Word(u)], g[Word(u)]);
    return {f.n(), std::move(out)};
}

}  // namespace

BitVector::BitVector(int dim, Word w) : n(dim), word(w) {
    check_dimension(dim);
    if (w & ~dimension_mask(dim)) throw DomainError("word does not fit in " + std::to_string(dim) + " bits");
}

bool BitVector::operator[](int i) const noexcept {
    i %= n;
    if (i < 0) i += n;
    return (word >> i) & 1u;
}

BitVector BitVector::from_coordinates(std::string_view bits) {
    Word w = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') w |= Word{1} << i;
        else if (bits[i] != '0') throw ParseError("bit string may only contain 0 and 1");
    }
    return {static_cast<int>(bits.size()), w};
}

std::string BitVector::to_coordinates() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((word >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

TruthTable::TruthTable(int n, std::vector<Word> entries) : n_(n), entries_(std::move(entries)) {
    check_dimension(n);
    if (entries_.size() != (std::size_t{1} << n))
        throw DomainError("truth table for n=" + std::to_string(n) + " needs " +
                          std::to_string(std::size_t{1} << n) + " entries, got " +
                          std::to_string(entries_.size()));
    const Word m = mask();
    for (Word e : entries_)
        if (e & ~m) throw DomainError("truth table entry exceeds " + std::to_string(n) + " bits");
}

TruthTable TruthTable::identity(int n) {
    check_dimension(n);
    std::vector<Word> e(std::size_t{1} << n);
    std::iota(e.begin(), e.end(), Word{0});
    return {n, std::move(e)};
}

TruthTable TruthTable::zero(int n) { return constant(n, 0); }

TruthTable TruthTable::constant(int n, Word value) {
    check_dimension(n);
    return {n, std::vector<Word>(std::size_t{1} << n, value)};
}

bool TruthTable::is_identity() const noexcept {
    for (std::size_t u = 0; u < entries_.size(); ++u)
        if (entries_[u] != u) return false;
    return true;
}

TruthTable shift(int n, long long t) {
    check_dimension(n);
    const int r = static_cast<int>(((t % n) + n) % n);
    std::vector<Word> e(std::size_t{1} << n);
    for (std::size_t u = 0; u < e.size(); ++u) e[u] = rotate_coords(Word(u), r, n);
    return {n, std::move(e)};
}

TruthTable pointwise_add(const TruthTable& f, const TruthTable& g) {
    return zip_entries(f, g, [](Word a, Word b) { return a ^ b; });
}

TruthTable hadamard(const TruthTable& f, const TruthTable& g) {
    return zip_entries(f, g, [](Word a, Word b) { return a & b; });
}

TruthTable compose(const TruthTable& f, const TruthTable& g) {
    return zip_entries(f, g, [&f](Word, Word gu) { return f[gu]; });
}

PermutationCheck check_permutation(const TruthTable& f) {
    constexpr Word kUnseen = ~Word{0};
    std::vector<Word> preimage(f.size(), kUnseen);
    for (Word u = 0; u < f.size(); ++u) {
        Word& slot = preimage[f[u]];
        if (slot != kUnseen) return {false, std::pair{slot, u}};
        slot = u;
    }
    return {true, std::nullopt};
}

TruthTable invert(const TruthTable& f) {
    auto check = check_permutation(f);
    if (!check) throw NotAPermutation(check.collision->first, check.collision->second);
    std::vector<Word> inv(f.size());
    for (Word u = 0; u < f.size(); ++u) inv[f[u]] = u;
    return {f.n(), std::move(inv)};
}

TruthTable iterate(const TruthTable& f, std::uint64_t k) {
    TruthTable result = TruthTable::identity(f.n());
    TruthTable base = f;
    while (k != 0) {
        if (k & 1u) result = compose(base, result);
        k >>= 1;
        if (k != 0) base = compose(base, base);
    }
    return result;
}

CycleReport cycle_structure(const TruthTable& f) {
    if (auto check = check_permutation(f); !check)
        throw NotAPermutation(check.collision->first, check.collision->second);

    CycleReport report;
    std::vector<bool> visited(f.size(), false);
    for (Word start = 0; start < f.size(); ++start) {
        if (visited[start]) continue;
        std::uint64_t length = 0;
        Word u = start;
        do {
            visited[u] = true;
            u = f[u];
            ++length;
        } while (u != start);
        ++report.cycle_lengths[length];
    }

    for (const auto& [length, count] : report.cycle_lengths) {
        const std::uint64_t g = std::gcd(report.order, length);
        const std::uint64_t factor = length / g;
        if (report.order > UINT64_MAX / factor) throw std::overflow_error("permutation order exceeds 64 bits");
        report.order *= factor;
    }
    if (auto it = report.cycle_lengths.find(1); it != report.cycle_lengths.end())
        report.fixed_point_count = it->second;
    return report;
}

std::vector<BitVector> fixed_points(const TruthTable& f) {
    std::vector<BitVector> out;
    for (Word u = 0; u < f.size(); ++u)
        if (f[u] == u) out.emplace_back(f.n(), u);
    return out;
}

AnfTable::AnfTable(int n, std::vector<Word> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    check_dimension(n);
    if (coeffs_.size() != (std::size_t{1} << n)) throw DomainError("ANF table has wrong size");
}

namespace {

// In-place binary Moebius transform over all output bits at once. It is an
// involution, so the same routine maps values to coefficients and back.
void moebius(std::vector<Word>& v) {
    for (std::size_t step = 1; step < v.size(); step <<= 1)
        for (std::size_t block = 0; block < v.size(); block += 2 * step)
            for (std::size_t i = block; i < block + step; ++i) v[i + step] ^= v[i];
}

}  // namespace

AnfTable anf(const TruthTable& f) {
    std::vector<Word> c(f.entries().begin(), f.entries().end());
    moebius(c);
    return {f.n(), std::move(c)};
}

TruthTable from_anf(const AnfTable& a) {
    std::vector<Word> v(a.coeffs().begin(), a.coeffs().end());
    moebius(v);
    return {a.n(), std::move(v)};
}

std::optional<int> component_degree(const AnfTable& a, Word mask) {
    if (mask & ~dimension_mask(a.n())) throw DomainError("mask does not fit the dimension");
    std::optional<int> deg;
    for (Word u = 0; u < a.coeffs().size(); ++u) {
        if (std::popcount(a[u] & mask) & 1) {
            const int d = std::popcount(u);
            if (!deg || d > *deg) deg = d;
        }
    }
    return deg;
}

std::optional<int> component_degree(const AnfTable& a, const BitVector& mask) {
    if (mask.n != a.n()) throw DimensionMismatch(mask.n, a.n());
    return component_degree(a, mask.word);
}

std::optional<int> algebraic_degree(const AnfTable& a) {
    std::optional<int> deg;
    for (Word u = 0; u < a.coeffs().size(); ++u) {
        if (a[u] != 0) {
            const int d = std::popcount(u);
            if (!deg || d > *deg) deg = d;
        }
    }
    return deg;
}

std::optional<int> algebraic_degree(const TruthTable& f) { return algebraic_degree(anf(f)); }

}  // namespace chimap
