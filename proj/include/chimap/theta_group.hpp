#pragma once

// Symbolic arithmetic on combinations sum_k a_k theta_{m,k}, 0 <= k <= ell,
// ell = floor(n / m). A combination with a_0 = 1 is a unit of
// F_2[z]/(z^{ell+1}); composition of the corresponding maps is polynomial
// multiplication of the coefficient vectors, so the coefficient vector is used
// directly as the ring element.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chimap/boolmap.hpp"

namespace chimap {

class ThetaComb {
public:
    // Bit k of coeffs is a_k. Requires m >= 2 and coeffs < 2^{ell+1}.
    ThetaComb(int n, int m, std::uint32_t coeffs);

    static ThetaComb identity(int n, int m);
    // theta_0 + theta_{m,1}, i.e. chi_{n,m}.
    static ThetaComb chi(int n, int m);
    // "a_0 a_1 ... a_ell", lowest index first; length must be ell + 1.
    static ThetaComb from_bitstring(int n, int m, std::string_view bits);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int ell() const noexcept { return n_ / m_; }
    std::uint32_t coeffs() const noexcept { return coeffs_; }
    bool coeff(int k) const noexcept { return (coeffs_ >> k) & 1u; }
    bool is_unit() const noexcept { return coeffs_ & 1u; }
    std::string to_bitstring() const;

    friend bool operator==(const ThetaComb&, const ThetaComb&) = default;

private:
    int n_;
    int m_;
    std::uint32_t coeffs_;
};

// XOR of theta_{m,k} tables over the set coefficients.
TruthTable comb_to_table(const ThetaComb& c);

// Product modulo z^{ell+1}. Both operands must share (n, m), be units, and
// have m not dividing n.
ThetaComb group_mul(const ThetaComb& f, const ThetaComb& g);

// f^k by square-and-multiply; group_pow(f, 0) is the identity.
ThetaComb group_pow(const ThetaComb& f, std::uint64_t k);

// b_1 = a_1, b_j = a_j + sum_{u+v=j, u,v>=1} a_u b_v.
ThetaComb group_inverse(const ThetaComb& f);

// 2^ceil(log2((ell+1)/j)) with j the lowest non-constant exponent; 1 for the
// identity.
std::uint64_t element_order(const ThetaComb& f);

// Coefficients of chi_{n,m}^k: a_j = 1 iff the binary digits of j are
// dominated by those of k (Lucas), truncated at ell.
ThetaComb iterate_coeffs(int n, int m, std::uint64_t k);

// a_1 .. a_{floor(ell/2)} all zero.
bool is_involution(const ThetaComb& f);

// True iff x, read cyclically, contains no window (x_{i+1}, ..., x_{i+2^j m})
// of the shape (0_{m-1}, *, 0_{m-1}, *, ..., 0_{m-1}, 1). For 1 <= j <= r-1,
// r = ceil(log2(ell + 1)), this characterizes the fixed points of
// chi_{n,m}^{2^j}.
bool fixed_point_predicate(const BitVector& x, int m, int j);

// r = ceil(log2(ell + 1)); ord(chi_{n,m}) = 2^r.
int log2_chi_order(int n, int m);

// All 2^ell units of the group for (n, m).
std::vector<ThetaComb> unit_group(int n, int m);

}  // namespace chimap
