#include "chimap/theta_group.hpp"

#include <bit>

#include "chimap/errors.hpp"
#include "chimap/family.hpp"

namespace chimap {

namespace {

std::uint32_t low_bits(int count) { return count >= 32 ? ~0u : (1u << count) - 1u; }

void require_group_params(int n, int m) {
    if (n % m == 0)
        throw DomainError("m=" + std::to_string(m) + " divides n=" + std::to_string(n) +
                          "; theta combinations do not form a group");
}

void require_unit(const ThetaComb& f) {
    require_group_params(f.n(), f.m());
    if (!f.is_unit()) throw NonUnitError("coefficient a_0 is 0: " + f.to_bitstring() + " is not a unit");
}

}  // namespace

ThetaComb::ThetaComb(int n, int m, std::uint32_t coeffs) : n_(n), m_(m), coeffs_(coeffs) {
    check_dimension(n);
    if (m < 2) throw DomainError("step m must be at least 2");
    if (coeffs & ~low_bits(ell() + 1))
        throw DomainError("coefficient vector longer than ell + 1 = " + std::to_string(ell() + 1));
}

ThetaComb ThetaComb::identity(int n, int m) { return {n, m, 1u}; }

ThetaComb ThetaComb::chi(int n, int m) {
    if (n / m < 1) throw DomainError("chi_{n,m} requires m <= n");
    return {n, m, 0b11u};
}

ThetaComb ThetaComb::from_bitstring(int n, int m, std::string_view bits) {
    if (m < 2) throw DomainError("step m must be at least 2");
    check_dimension(n);
    const auto expected = static_cast<std::size_t>(n / m + 1);
    if (bits.size() != expected)
        throw ParseError("coefficient string '" + std::string(bits) + "' must have ell + 1 = " +
                         std::to_string(expected) + " digits");
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') c |= 1u << k;
        else if (bits[k] != '0') throw ParseError("coefficient string may only contain 0 and 1");
    }
    return {n, m, c};
}

std::string ThetaComb::to_bitstring() const {
    std::string s;
    for (int k = 0; k <= ell(); ++k) s += coeff(k) ? '1' : '0';
    return s;
}

TruthTable comb_to_table(const ThetaComb& c) {
    TruthTable acc = TruthTable::zero(c.n());
    for (int k = 0; k <= c.ell(); ++k)
        if (c.coeff(k)) acc = pointwise_add(acc, make_theta(c.n(), c.m(), k));
    return acc;
}

ThetaComb group_mul(const ThetaComb& f, const ThetaComb& g) {
    if (f.n() != g.n() || f.m() != g.m())
        throw DomainError("operands belong to different groups (n, m)");
    require_unit(f);
    require_unit(g);
    const int ell = f.ell();
    std::uint32_t product = 0;
    for (int i = 0; i <= ell; ++i)
        if (f.coeff(i)) product ^= g.coeffs() << i;
    return {f.n(), f.m(), product & low_bits(ell + 1)};
}

ThetaComb group_pow(const ThetaComb& f, std::uint64_t k) {
    require_unit(f);
    ThetaComb result = ThetaComb::identity(f.n(), f.m());
    ThetaComb base = f;
    while (k != 0) {
        if (k & 1u) result = group_mul(result, base);
        k >>= 1;
        if (k != 0) base = group_mul(base, base);
    }
    return result;
}

ThetaComb group_inverse(const ThetaComb& f) {
    require_unit(f);
    const int ell = f.ell();
    std::uint32_t b = 1u;
    for (int j = 1; j <= ell; ++j) {
        bool bj = f.coeff(j);
        for (int u = 1; u < j; ++u) bj ^= f.coeff(u) && ((b >> (j - u)) & 1u);
        if (bj) b |= 1u << j;
    }
    return {f.n(), f.m(), b};
}

std::uint64_t element_order(const ThetaComb& f) {
    require_unit(f);
    const std::uint32_t tail = f.coeffs() & ~1u;
    if (tail == 0) return 1;
    const int j = std::countr_zero(tail);
    // smallest r with 2^r * j >= ell + 1
    std::uint64_t order = 1;
    while (order * static_cast<std::uint64_t>(j) < static_cast<std::uint64_t>(f.ell() + 1)) order <<= 1;
    return order;
}

ThetaComb iterate_coeffs(int n, int m, std::uint64_t k) {
    check_dimension(n);
    if (m < 2) throw DomainError("step m must be at least 2");
    require_group_params(n, m);
    const int ell = n / m;
    std::uint32_t c = 0;
    for (int j = 0; j <= ell; ++j)
        if ((static_cast<std::uint64_t>(j) & ~k) == 0) c |= 1u << j;
    return {n, m, c};
}

bool is_involution(const ThetaComb& f) {
    require_unit(f);
    for (int i = 1; i <= f.ell() / 2; ++i)
        if (f.coeff(i)) return false;
    return true;
}

bool fixed_point_predicate(const BitVector& x, int m, int j) {
    const int n = x.n;
    if (m < 2) throw DomainError("step m must be at least 2");
    if (j < 0 || j > 30) throw DomainError("exponent j out of range");
    require_group_params(n, m);
    const long long window = (1LL << j) * m;
    if (window > n) return true;
    const int len = static_cast<int>(window);
    for (int i = 0; i < n; ++i) {
        bool match = x[i + len];
        for (int t = 1; match && t < len; ++t)
            if (t % m != 0 && x[i + t]) match = false;
        if (match) return false;
    }
    return true;
}

int log2_chi_order(int n, int m) {
    const int ell = n / m;
    int r = 0;
    while ((1 << r) < ell + 1) ++r;
    return r;
}

std::vector<ThetaComb> unit_group(int n, int m) {
    require_group_params(n, m);
    const int ell = n / m;
    std::vector<ThetaComb> units;
    units.reserve(std::size_t{1} << ell);
    for (std::uint32_t tail = 0; tail < (1u << ell); ++tail) units.emplace_back(n, m, (tail << 1) | 1u);
    return units;
}

}  // namespace chimap
