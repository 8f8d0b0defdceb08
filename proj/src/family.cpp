#include "chimap/family.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "chimap/errors.hpp"

namespace chimap {

namespace {

template <typename Rule>
TruthTable tabulate(int n, Rule rule) {
    check_dimension(n);
    std::vector<Word> e(std::size_t{1} << n);
    for (std::size_t u = 0; u < e.size(); ++u) e[u] = rule(Word(u)) & dimension_mask(n);
    return {n, std::move(e)};
}

}  // namespace

TruthTable make_chi(int n) {
    if (n < 3) throw DomainError("chi_n requires n >= 3");
    return make_chi_nm(n, 2);
}

TruthTable make_chi_nm(int n, int m) {
    check_dimension(n);
    if (m < 2 || m >= n) throw DomainError("chi_{n,m} requires n > m >= 2");
    return tabulate(n, [n, m](Word x) {
        Word term = rotate_coords(x, m, n);
        for (int j = 1; j < m; ++j) term &= ~rotate_coords(x, j, n);
        return x ^ term;
    });
}

TruthTable make_theta(int n, int m, int k) {
    check_dimension(n);
    if (m < 2) throw DomainError("theta_{m,k} requires m >= 2");
    if (k < 0) throw DomainError("theta_{m,k} requires k >= 0");
    const long long span = static_cast<long long>(m) * k;
    if (span > 64LL * kMaxDimension) throw DomainError("theta_{m,k}: m*k too large");
    const int reach = static_cast<int>(span);
    return tabulate(n, [n, m, reach](Word x) {
        Word y = rotate_coords(x, reach % n, n);
        for (int j = 1; j < reach; ++j)
            if (j % m != 0) y &= ~rotate_coords(x, j % n, n);
        return y;
    });
}

TruthTable make_chi_prime3(int n) {
    check_dimension(n);
    if (n < 4) throw DomainError("chi'_{n,3} requires n >= 4");
    return tabulate(n, [n](Word x) {
        return x ^ (rotate_coords(x, 1, n) & rotate_coords(x, 2, n) & ~rotate_coords(x, 3, n));
    });
}

TruthTable make_cchi(int n) {
    check_dimension(n);
    if (n % 2 != 0 || (n / 2) % 2 != 0 || n / 2 < 4)
        throw DomainError("CHICHI_n requires n = 2k with k even and k >= 4");
    const int k = n / 2;
    return tabulate(n, [n, k](Word x) {
        auto v = [x](int i) -> Word { return (x >> i) & 1u; };
        auto nv = [x](int i) -> Word { return ((x >> i) & 1u) ^ 1u; };
        Word y = 0;
        for (int i = 0; i < n; ++i) {
            Word bit;
            if (i < k - 3 || (k < i && i < 2 * k - 2)) bit = v(i) ^ (nv(i + 1) & v(i + 2));
            else if (i == k - 3) bit = v(k) ^ (nv(k - 2) & v(0));
            else if (i == k - 2) bit = v(k - 1) ^ (nv(0) & v(1));
            else if (i == k - 1) bit = nv(k - 3) ^ (nv(k) & nv(k + 1));
            else if (i == k) bit = v(k - 2) ^ (nv(k + 1) & v(k + 2));
            else if (i == 2 * k - 2) bit = v(2 * k - 2) ^ (nv(2 * k - 1) & v(k - 1));
            else bit = v(2 * k - 1) ^ (nv(k - 1) & v(k));  // i == 2k - 1
            y |= bit << i;
        }
        return y;
    });
}

TruthTable make_concat(std::span<const TruthTable> parts) {
    if (parts.empty()) throw DomainError("concatenation needs at least one part");
    int total = 0;
    for (const auto& p : parts) total += p.n();
    if (total > kMaxDimension)
        throw DomainError("concatenated dimension " + std::to_string(total) + " exceeds " +
                          std::to_string(kMaxDimension));
    return tabulate(total, [&parts](Word x) {
        Word y = 0;
        int offset = 0;
        for (const auto& p : parts) {
            y |= p[(x >> offset) & p.mask()] << offset;
            offset += p.n();
        }
        return y;
    });
}

void FamilySpec::validate() const {
    switch (family) {
        case Family::chi:
            check_dimension(n);
            if (n < 3) throw DomainError("chi:<n> requires n >= 3");
            break;
        case Family::chi_nm:
            check_dimension(n);
            if (m < 2 || m >= n) throw DomainError("chi_nm:<n>:<m> requires n > m >= 2");
            break;
        case Family::theta:
            check_dimension(n);
            if (m < 2 || k < 0) throw DomainError("theta:<n>:<m>:<k> requires m >= 2, k >= 0");
            break;
        case Family::chi_prime3:
            check_dimension(n);
            if (n < 4) throw DomainError("chi_prime3:<n> requires n >= 4");
            break;
        case Family::cchi:
            check_dimension(n);
            if (n % 4 != 0 || n < 8) throw DomainError("cchi:<n> requires n = 2k, k even, k >= 4");
            break;
        case Family::concat: {
            if (parts.empty()) throw DomainError("concat() needs at least one part");
            int total = 0;
            for (const auto& p : parts) {
                p.validate();
                total += p.n;
            }
            if (total != n) throw DomainError("concat parts do not sum to n");
            check_dimension(total);
            break;
        }
    }
}

TruthTable FamilySpec::build() const {
    validate();
    switch (family) {
        case Family::chi: return make_chi(n);
        case Family::chi_nm: return make_chi_nm(n, m);
        case Family::theta: return make_theta(n, m, k);
        case Family::chi_prime3: return make_chi_prime3(n);
        case Family::cchi: return make_cchi(n);
        case Family::concat: {
            std::vector<TruthTable> built;
            built.reserve(parts.size());
            for (const auto& p : parts) built.push_back(p.build());
            return make_concat(built);
        }
    }
    throw DomainError("unknown family");
}

std::string FamilySpec::to_string() const {
    const auto s = [](int v) { return std::to_string(v); };
    switch (family) {
        case Family::chi: return "chi:" + s(n);
        case Family::chi_nm: return "chi_nm:" + s(n) + ":" + s(m);
        case Family::theta: return "theta:" + s(n) + ":" + s(m) + ":" + s(k);
        case Family::chi_prime3: return "chi_prime3:" + s(n);
        case Family::cchi: return "cchi:" + s(n);
        case Family::concat: {
            std::string out = "concat(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += ',';
                out += parts[i].to_string();
            }
            return out + ")";
        }
    }
    return {};
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = parse_spec();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

private:
    FamilySpec parse_spec() {
        skip_space();
        const std::string_view name = parse_identifier();
        FamilySpec spec;
        if (name == "concat") {
            spec.family = Family::concat;
            expect('(');
            do {
                spec.parts.push_back(parse_spec());
                skip_space();
            } while (accept(','));
            expect(')');
            spec.n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0,
                                     [](int acc, const FamilySpec& p) { return acc + p.n; });
            return spec;
        }

        int arity = 0;
        if (name == "chi") spec.family = Family::chi, arity = 1;
        else if (name == "chi_nm") spec.family = Family::chi_nm, arity = 2;
        else if (name == "theta") spec.family = Family::theta, arity = 3;
        else if (name == "chi_prime3") spec.family = Family::chi_prime3, arity = 1;
        else if (name == "cchi") spec.family = Family::cchi, arity = 1;
        else fail("unknown family '" + std::string(name) + "'");

        int* fields[] = {&spec.n, &spec.m, &spec.k};
        for (int i = 0; i < arity; ++i) {
            expect(':');
            *fields[i] = parse_int();
        }
        return spec;
    }

    std::string_view parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a family name");
        return text_.substr(start, pos_ - start);
    }

    int parse_int() {
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("family spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse_all(); }

}  // namespace chimap
