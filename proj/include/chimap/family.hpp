#pragma once

// Constructors for the shift-invariant families: chi_n, chi_{n,m},
// theta_{m,k}, the complemented-input chi'_{n,3}, CHICHI_{2k}, and block
// concatenation of arbitrary tables.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chimap/boolmap.hpp"

namespace chimap {

// y_i = x_i + (x_{i+1} + 1) x_{i+2}; requires n >= 3.
TruthTable make_chi(int n);

// y_i = x_i + x_{i+m} prod_{j=1}^{m-1} (x_{i+j} + 1); requires n > m >= 2.
// Built even when m | n, in which case the result is not a bijection.
TruthTable make_chi_nm(int n, int m);

// y_i = x_{i+mk} prod_{1 <= j < mk, m does not divide j} (x_{i+j} + 1).
// k = 0 gives the identity.
TruthTable make_theta(int n, int m, int k);

// y_i = x_i + x_{i+1} x_{i+2} (x_{i+3} + 1); requires n >= 4.
TruthTable make_chi_prime3(int n);

// CHICHI_{2k}, k even and k >= 4.
TruthTable make_cchi(int n);

// Parts act on consecutive coordinate blocks, first part lowest.
TruthTable make_concat(std::span<const TruthTable> parts);

enum class Family { chi, chi_nm, theta, chi_prime3, cchi, concat };

struct FamilySpec {
    Family family = Family::chi;
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<FamilySpec> parts;

    // Checks parameter constraints, throws DomainError.
    void validate() const;
    TruthTable build() const;
    // Canonical text form, e.g. "chi_nm:8:3" or "concat(chi:3,chi:3)".
    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Grammar: chi:<n> | chi_nm:<n>:<m> | theta:<n>:<m>:<k> | chi_prime3:<n>
//        | cchi:<n> | concat(<spec>,<spec>,...)
// Throws ParseError on syntax errors; parameter ranges are checked by validate().
FamilySpec parse_family_spec(std::string_view text);

}  // namespace chimap
