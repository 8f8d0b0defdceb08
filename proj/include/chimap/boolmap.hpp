#pragma once

// Mappings F_2^n -> F_2^n stored as full truth tables, together with the
// three pointwise operations (+, composition, Hadamard product), permutation
// machinery and the algebraic normal form.
//
// Bit convention: coordinate x_i lives in bit i of a word (x_0 is the LSB),
// for both inputs and outputs. Coordinate indices are taken modulo n.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chimap {

using Word = std::uint32_t;

inline constexpr int kMaxDimension = 24;

// Throws DomainError unless 1 <= n <= kMaxDimension.
void check_dimension(int n);

constexpr Word dimension_mask(int n) noexcept {
    return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}

// Cyclic rotation so that bit i of the result is x_{(i + t) mod n}.
constexpr Word rotate_coords(Word x, int t, int n) noexcept {
    t %= n;
    if (t < 0) t += n;
    if (t == 0) return x;
    return ((x >> t) | (x << (n - t))) & dimension_mask(n);
}

struct BitVector {
    int n = 0;
    Word word = 0;

    BitVector() = default;
    BitVector(int dim, Word w);

    // Coordinate x_i; i is reduced modulo n.
    bool operator[](int i) const noexcept;

    static BitVector zeros(int n) { return {n, 0}; }
    static BitVector ones(int n) { return {n, dimension_mask(n)}; }
    // Parses "10010" with x_0 first.
    static BitVector from_coordinates(std::string_view bits);
    std::string to_coordinates() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
};

class TruthTable {
public:
    TruthTable() = default;
    // Validates size 2^n and that every entry fits in n bits.
    TruthTable(int n, std::vector<Word> entries);

    static TruthTable identity(int n);
    static TruthTable zero(int n);
    static TruthTable constant(int n, Word value);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return entries_.size(); }
    Word mask() const noexcept { return dimension_mask(n_); }
    Word operator[](Word u) const noexcept { return entries_[u]; }
    Word at(Word u) const { return entries_.at(u); }
    std::span<const Word> entries() const noexcept { return entries_; }

    bool is_identity() const noexcept;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    int n_ = 0;
    std::vector<Word> entries_;
};

TruthTable shift(int n, long long t);

TruthTable pointwise_add(const TruthTable& f, const TruthTable& g);
TruthTable hadamard(const TruthTable& f, const TruthTable& g);
// (f o g)(u) = f(g(u)).
TruthTable compose(const TruthTable& f, const TruthTable& g);

struct PermutationCheck {
    bool bijective = false;
    // Two distinct inputs with the same image, smallest first, when not bijective.
    std::optional<std::pair<Word, Word>> collision;

    explicit operator bool() const noexcept { return bijective; }
};

PermutationCheck check_permutation(const TruthTable& f);
inline bool is_permutation(const TruthTable& f) { return check_permutation(f).bijective; }

// Throws NotAPermutation on collisions.
TruthTable invert(const TruthTable& f);

// k-fold composition by square-and-multiply; iterate(f, 0) is the identity.
TruthTable iterate(const TruthTable& f, std::uint64_t k);

struct CycleReport {
    // cycle length -> multiplicity
    std::map<std::uint64_t, std::uint64_t> cycle_lengths;
    // lcm of the lengths; throws std::overflow_error if it exceeds 64 bits.
    std::uint64_t order = 1;
    std::uint64_t fixed_point_count = 0;
};

CycleReport cycle_structure(const TruthTable& f);

// All u with f(u) = u, ascending.
std::vector<BitVector> fixed_points(const TruthTable& f);

// Bit i of coeffs[u] is the coefficient of the monomial prod_{j in u} x_j in
// output coordinate i.
class AnfTable {
public:
    AnfTable(int n, std::vector<Word> coeffs);

    int n() const noexcept { return n_; }
    std::span<const Word> coeffs() const noexcept { return coeffs_; }
    Word operator[](Word u) const noexcept { return coeffs_[u]; }

    friend bool operator==(const AnfTable&, const AnfTable&) = default;

private:
    int n_;
    std::vector<Word> coeffs_;
};

AnfTable anf(const TruthTable& f);
TruthTable from_anf(const AnfTable& a);

// Degree of the Boolean function mask . F. std::nullopt for the zero function.
std::optional<int> component_degree(const AnfTable& a, Word mask);
std::optional<int> component_degree(const AnfTable& a, const BitVector& mask);

// Maximum degree over the coordinate functions; std::nullopt for the zero map.
std::optional<int> algebraic_degree(const AnfTable& a);
std::optional<int> algebraic_degree(const TruthTable& f);

}  // namespace chimap
