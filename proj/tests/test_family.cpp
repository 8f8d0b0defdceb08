#include <doctest.h>

#include <set>

#include "chimap/boolmap.hpp"
#include "chimap/errors.hpp"
#include "chimap/family.hpp"
#include "chimap/metrics.hpp"
#include "oracles.hpp"

using namespace chimap;

namespace {

Word bits(std::string_view s) { return BitVector::from_coordinates(s).word; }

// Branch-by-branch evaluation of CHICHI_{2k}, written independently of the
// library from the seven-case definition.
TruthTable cchi_oracle(int n) {
    const int k = n / 2;
    return oracle::per_coordinate(n, [k](Word x, int i) {
        auto b = [x](int j) { return static_cast<int>((x >> j) & 1u); };
        auto nb = [&b](int j) { return b(j) ^ 1; };
        if (i == k - 3) return b(k) ^ (nb(k - 2) & b(0));
        if (i == k - 2) return b(k - 1) ^ (nb(0) & b(1));
        if (i == k - 1) return nb(k - 3) ^ (nb(k) & nb(k + 1));
        if (i == k) return b(k - 2) ^ (nb(k + 1) & b(k + 2));
        if (i == 2 * k - 2) return b(2 * k - 2) ^ (nb(2 * k - 1) & b(k - 1));
        if (i == 2 * k - 1) return b(2 * k - 1) ^ (nb(k - 1) & b(k));
        return b(i) ^ (nb(i + 1) & b(i + 2));
    });
}

}  // namespace

TEST_CASE("chi_n") {
    CHECK(make_chi(5)[0] == 0u);
    CHECK(make_chi(5)[bits("11000")] == bits("11010"));
    CHECK(compose(make_chi(3), make_chi(3)).is_identity());
    for (int n = 3; n <= 12; ++n) CHECK(make_chi(n) == oracle::chi(n));
    CHECK_THROWS_AS(make_chi(2), DomainError);
}

TEST_CASE("chi_{n,m}") {
    CHECK(make_chi_nm(5, 3)[bits("00010")] == bits("10010"));
    for (int n : {5, 7, 9}) CHECK(make_chi_nm(n, 2) == make_chi(n));
    for (int n = 3; n <= 12; ++n)
        for (int m = 2; m < n; ++m) {
            const auto t = make_chi_nm(n, m);
            CHECK(t == oracle::chi_nm(n, m));
            CHECK(t[dimension_mask(n)] == dimension_mask(n));
        }
    CHECK_THROWS_AS(make_chi_nm(5, 1), DomainError);
    CHECK_THROWS_AS(make_chi_nm(5, 5), DomainError);
}

TEST_CASE("permutation iff m does not divide n") {
    for (int n = 4; n <= 12; ++n)
        for (int m = 2; m < n && m <= 8; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(is_permutation(make_chi_nm(n, m)) == (n % m != 0));
        }
}

TEST_CASE("involution iff n <= 2m - 1") {
    for (int n = 3; n <= 12; ++n)
        for (int m = 2; m < n; ++m) {
            if (n % m == 0) continue;
            const auto t = make_chi_nm(n, m);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(compose(t, t).is_identity() == (n <= 2 * m - 1));
        }
}

TEST_CASE("theta_{m,k}") {
    CHECK(make_theta(8, 3, 0).is_identity());
    CHECK(make_theta(8, 3, 3) == TruthTable::zero(8));
    CHECK(make_theta(4, 2, 3) != TruthTable::zero(4));
    CHECK(algebraic_degree(make_theta(8, 3, 2)) == 5);
    CHECK_THROWS_AS(make_theta(8, 1, 1), DomainError);
    CHECK_THROWS_AS(make_theta(8, 3, -1), DomainError);

    for (int n = 1; n <= 12; ++n)
        for (int m = 2; m <= n + 1; ++m)
            for (int k = 0; m * k <= n + m; ++k) {
                const auto t = make_theta(n, m, k);
                CHECK(t == oracle::theta(n, m, k));
                // vanishing needs m not dividing n; theta:4:2:3 is nonzero
                if (n % m != 0) CHECK((t == TruthTable::zero(n)) == (m * k > n));
            }
}

TEST_CASE("theta degree law") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= n; ++m)
            for (int k = 1; k <= n / m; ++k) CHECK(algebraic_degree(make_theta(n, m, k)) == (m - 1) * k + 1);
}

TEST_CASE("theta combinations are linearly independent") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= n; ++m) {
            const int ell = n / m;
            std::vector<TruthTable> basis;
            for (int k = 0; k <= ell; ++k) basis.push_back(make_theta(n, m, k));
            std::set<std::vector<Word>> seen;
            for (Word c = 0; c < (Word{1} << (ell + 1)); ++c) {
                TruthTable acc = TruthTable::zero(n);
                for (int k = 0; k <= ell; ++k)
                    if ((c >> k) & 1u) acc = pointwise_add(acc, basis[static_cast<std::size_t>(k)]);
                seen.insert(std::vector<Word>(acc.entries().begin(), acc.entries().end()));
            }
            CHECK(seen.size() == (std::size_t{1} << (ell + 1)));
        }
}

TEST_CASE("chi'_{n,3}") {
    CHECK(make_chi_prime3(5)[0] == 0u);
    CHECK(make_chi_prime3(5)[31] == 31u);
    for (int n = 4; n <= 12; ++n) {
        CHECK(make_chi_prime3(n) == oracle::chi_prime3(n));
        // chi_{n,3}(x + 1) differs from the coordinate formula by an output complement
        const auto shifted = compose(make_chi_nm(n, 3), pointwise_add(TruthTable::identity(n), TruthTable::constant(n, dimension_mask(n))));
        CHECK(pointwise_add(shifted, TruthTable::constant(n, dimension_mask(n))) == make_chi_prime3(n));
    }
    CHECK(differential_spectrum(make_chi_prime3(5)) == differential_spectrum(make_chi_nm(5, 3)));
    CHECK_THROWS_AS(make_chi_prime3(3), DomainError);
}

TEST_CASE("CHICHI") {
    const auto c = make_cchi(8);
    CHECK(c[0] == 0u);
    CHECK(is_permutation(c));
    CHECK(algebraic_degree(c) == 2);
    for (int n : {8, 16}) CHECK(make_cchi(n) == cchi_oracle(n));
    CHECK(is_permutation(make_cchi(16)));
    CHECK_THROWS_AS(make_cchi(6), DomainError);
    CHECK_THROWS_AS(make_cchi(10), DomainError);
    CHECK_THROWS_AS(make_cchi(4), DomainError);
}

TEST_CASE("concatenation") {
    const std::vector<TruthTable> ids{TruthTable::identity(2), TruthTable::identity(3)};
    CHECK(make_concat(ids).is_identity());

    const std::vector<TruthTable> parts{make_chi(3), make_chi(5)};
    const auto t = make_concat(parts);
    REQUIRE(t.n() == 8);
    for (Word x = 0; x < 256; ++x) {
        const Word lo = x & 7u, hi = x >> 3;
        CHECK(t[x] == (make_chi(3)[lo] | (make_chi(5)[hi] << 3)));
    }
    CHECK(algebraic_degree(make_concat(std::vector<TruthTable>{make_chi(3), make_chi_nm(5, 3)})) == 3);
    CHECK(differential_spectrum(make_concat(std::vector<TruthTable>{make_chi(3), make_chi(3)})).multiset ==
          parse_compact_multiset("{0^3192,4^784,16^56}"));

    CHECK_THROWS_AS(make_concat(std::vector<TruthTable>{}), DomainError);
    CHECK_THROWS_AS(make_concat(std::vector<TruthTable>{TruthTable::identity(20), TruthTable::identity(5)}), DomainError);
}

TEST_CASE("family spec grammar") {
    const auto s = parse_family_spec("chi_nm:8:3");
    CHECK(s.family == Family::chi_nm);
    CHECK(s.n == 8);
    CHECK(s.m == 3);
    CHECK(s.build() == make_chi_nm(8, 3));

    CHECK(parse_family_spec("chi:5").build() == make_chi(5));
    CHECK(parse_family_spec("theta:8:3:2").build() == make_theta(8, 3, 2));
    CHECK(parse_family_spec("chi_prime3:7").build() == make_chi_prime3(7));
    CHECK(parse_family_spec("cchi:8").build() == make_cchi(8));

    const auto cc = parse_family_spec("concat(chi:3,concat(chi_nm:5:3,theta:2:2:0))");
    CHECK(cc.family == Family::concat);
    CHECK(cc.n == 10);
    REQUIRE(cc.parts.size() == 2);
    CHECK(cc.to_string() == "concat(chi:3,concat(chi_nm:5:3,theta:2:2:0))");
    CHECK(cc.build().n() == 10);

    for (std::string_view text : {"chi:5", "chi_nm:6:4", "theta:8:3:3", "cchi:8", "concat(chi:3,chi:3)"})
        CHECK(parse_family_spec(parse_family_spec(text).to_string()) == parse_family_spec(text));

    for (std::string_view bad : {"", "chi", "chi:", "chi:x", "chi:5:", "bogus:5", "concat(", "concat()", "concat(chi:3",
                                 "chi:5 extra", "theta:8:3"})
        CHECK_THROWS_AS(parse_family_spec(bad), ParseError);

    CHECK_THROWS_AS(parse_family_spec("chi_nm:5:1").validate(), DomainError);
    CHECK_THROWS_AS(parse_family_spec("cchi:10").build(), DomainError);
    CHECK_THROWS_AS(parse_family_spec("chi:2").build(), DomainError);
}
