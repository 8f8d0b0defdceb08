#include "chimap/cli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chimap/boolmap.hpp"
#include "chimap/cost.hpp"
#include "chimap/errors.hpp"
#include "chimap/family.hpp"
#include "chimap/metrics.hpp"
#include "chimap/serialize.hpp"
#include "chimap/theta_group.hpp"

namespace chimap::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The command failed an internal consistency check.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, structured };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"structured", Format::structured}};

std::string degree_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "undefined"; }

ojson degree_json(const std::optional<int>& d) { return d ? ojson(*d) : ojson("undefined"); }

struct Target {
    std::string label;
    TruthTable table;
};

Target resolve_target(const std::string& target) {
    if (std::filesystem::is_regular_file(target)) {
        auto doc = read_table(target);
        return {doc.family.empty() ? target : doc.family, std::move(doc.table)};
    }
    const FamilySpec spec = parse_family_spec(target);
    return {spec.to_string(), spec.build()};
}

void emit(std::ostream& out, const ojson& doc) { out << doc.dump(2) << '\n'; }

// construct ---------------------------------------------------------------

struct ConstructArgs {
    std::string spec;
    std::string output;
    Format format = Format::text;
};

void cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(a.spec);
    const TruthTable table = spec.build();
    const std::string family = spec.to_string();
    if (!a.output.empty()) write_table(a.output, table, family);

    const auto perm = check_permutation(table);
    const auto deg = algebraic_degree(table);
    if (a.format == Format::structured) {
        ojson doc;
        doc["family"] = family;
        doc["n"] = table.n();
        doc["permutation"] = perm.bijective;
        if (perm.collision) {
            doc["collision"] = {BitVector(table.n(), perm.collision->first).to_coordinates(),
                                BitVector(table.n(), perm.collision->second).to_coordinates()};
        }
        doc["degree"] = degree_json(deg);
        if (!a.output.empty()) doc["output"] = a.output;
        emit(out, doc);
        return;
    }
    out << "family: " << family << '\n' << "n: " << table.n() << '\n';
    out << "permutation: " << (perm.bijective ? "true" : "false") << '\n';
    if (perm.collision) {
        const auto [u, v] = *perm.collision;
        out << "collision: " << BitVector(table.n(), u).to_coordinates() << " and "
            << BitVector(table.n(), v).to_coordinates() << " both map to "
            << BitVector(table.n(), table[u]).to_coordinates() << '\n';
    }
    out << "degree: " << degree_text(deg) << '\n';
    if (!a.output.empty()) out << "written: " << a.output << '\n';
}

// analyze -----------------------------------------------------------------

struct AnalyzeArgs {
    std::string target;
    std::vector<std::string> metrics;
    Format format = Format::text;
};

const std::map<std::string, Metric> kSpectrumMetrics{
    {"ddt", Metric::differential}, {"walsh", Metric::walsh}, {"bct", Metric::boomerang}, {"dlct", Metric::dlct}};

std::string_view headline_label(Metric m) {
    switch (m) {
        case Metric::differential: return "Delta_F";
        case Metric::walsh: return "NL_F";
        case Metric::boomerang: return "B_F";
        case Metric::dlct: return "DL_F";
    }
    return "?";
}

void cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    if (a.metrics.empty()) throw UsageError("select at least one metric");
    const Target target = resolve_target(a.target);
    const TruthTable& f = target.table;

    ojson doc;
    doc["target"] = target.label;
    doc["n"] = f.n();
    auto reports = ojson::array();
    std::ostringstream text;
    text << "target: " << target.label << " (n=" << f.n() << ")\n";

    for (const auto& name : a.metrics) {
        if (auto it = kSpectrumMetrics.find(name); it != kSpectrumMetrics.end()) {
            const SpectrumReport r = spectrum(f, it->second);
            reports.push_back(report_to_json(r));
            text << name << ": " << headline_label(r.metric) << " = " << r.headline << ", spectrum "
                 << r.compact() << '\n';
        } else if (name == "degree") {
            const auto deg = algebraic_degree(f);
            doc["degree"] = degree_json(deg);
            text << "degree: " << degree_text(deg) << '\n';
        } else if (name == "cycles") {
            const CycleReport c = cycle_structure(f);
            auto lengths = ojson::array();
            std::string rendered = "{";
            for (const auto& [len, count] : c.cycle_lengths) {
                lengths.push_back({len, count});
                if (rendered.size() > 1) rendered += ',';
                rendered += std::to_string(len) + (count != 1 ? "^" + std::to_string(count) : "");
            }
            rendered += '}';
            doc["cycles"] = {{"order", c.order}, {"fixed_points", c.fixed_point_count}, {"lengths", lengths}};
            text << "cycles: order " << c.order << ", fixed points " << c.fixed_point_count << ", lengths "
                 << rendered << '\n';
        } else {
            throw UsageError("unknown metric '" + name + "' (expected ddt, walsh, bct, dlct, degree, cycles)");
        }
    }
    doc["reports"] = std::move(reports);

    if (a.format == Format::structured) emit(out, doc);
    else out << text.str();
}

// group -------------------------------------------------------------------

struct GroupArgs {
    int n = 0;
    int m = 0;
    std::string coeffs;
    std::string query;
    std::string output;
    Format format = Format::text;
};

void cmd_group(const GroupArgs& a, std::ostream& out) {
    if (a.m < 2) throw UsageError("--m must be at least 2");
    if (a.n % a.m == 0)
        throw DomainError("m=" + std::to_string(a.m) + " divides n=" + std::to_string(a.n) +
                          "; G_{n,m} is only defined when m does not divide n");
    const ThetaComb f = ThetaComb::from_bitstring(a.n, a.m, a.coeffs);

    ojson doc;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["coeffs"] = f.to_bitstring();
    doc["query"] = a.query;
    std::ostringstream text;

    if (a.query == "inverse") {
        const ThetaComb inv = group_inverse(f);
        const auto deg = algebraic_degree(comb_to_table(inv));
        doc["result"] = inv.to_bitstring();
        doc["degree"] = degree_json(deg);
        text << inv.to_bitstring() << "\ndegree: " << degree_text(deg) << '\n';
    } else if (a.query == "order") {
        const std::uint64_t ord = element_order(f);
        doc["result"] = ord;
        text << ord << '\n';
    } else if (a.query.starts_with("iterate:")) {
        const std::string k_text = a.query.substr(8);
        std::uint64_t k = 0;
        auto [p, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
        if (k_text.empty() || ec != std::errc{} || p != k_text.data() + k_text.size())
            throw UsageError("iterate:<k> needs a non-negative integer");
        const ThetaComb power = group_pow(f, k);
        doc["result"] = power.to_bitstring();
        text << power.to_bitstring() << '\n';
    } else if (a.query == "involution") {
        const bool inv = is_involution(f);
        doc["result"] = inv;
        text << (inv ? "true" : "false") << '\n';
    } else if (a.query == "materialize") {
        const TruthTable t = comb_to_table(f);
        const bool perm = is_permutation(t);
        const auto deg = algebraic_degree(t);
        const std::string family = "theta_comb:" + std::to_string(a.n) + ":" + std::to_string(a.m) + ":" + f.to_bitstring();
        if (!a.output.empty()) write_table(a.output, t, family);
        doc["result"] = {{"permutation", perm}, {"degree", degree_json(deg)}};
        if (!a.output.empty()) doc["output"] = a.output;
        text << "permutation: " << (perm ? "true" : "false") << "\ndegree: " << degree_text(deg) << '\n';
        if (!a.output.empty()) text << "written: " << a.output << '\n';
    } else {
        throw UsageError("unknown query '" + a.query + "' (expected inverse, order, iterate:<k>, involution, materialize)");
    }

    if (a.format == Format::structured) emit(out, doc);
    else out << text.str();
}

// fixed-points --------------------------------------------------------------

struct FixedPointArgs {
    int n = 0;
    int m = 0;
    std::uint64_t power = 1;
    std::size_t sample = 16;
    Format format = Format::text;
};

void cmd_fixed_points(const FixedPointArgs& a, std::ostream& out) {
    check_dimension(a.n);
    if (a.m < 2 || a.m >= a.n) throw UsageError("fixed-points requires n > m >= 2");
    if (a.n % a.m == 0) throw DomainError("m=" + std::to_string(a.m) + " divides n=" + std::to_string(a.n));

    const TruthTable power = iterate(make_chi_nm(a.n, a.m), a.power);
    const std::vector<BitVector> enumerated = fixed_points(power);

    std::optional<std::size_t> predicate_count;
    if (a.power != 0 && std::has_single_bit(a.power)) {
        const int j = std::countr_zero(a.power);
        std::size_t count = 0;
        for (Word x = 0; x < power.size(); ++x)
            if (fixed_point_predicate(BitVector(a.n, x), a.m, j)) {
                if (power[x] != x) throw InternalError("substring predicate accepts a non-fixed point");
                ++count;
            }
        if (count != enumerated.size()) throw InternalError("substring predicate and enumeration disagree");
        predicate_count = count;
    }
    const bool nontrivial = enumerated.size() > 2;

    if (a.format == Format::structured) {
        ojson doc;
        doc["n"] = a.n;
        doc["m"] = a.m;
        doc["power"] = a.power;
        doc["count"] = enumerated.size();
        doc["predicate_count"] = predicate_count ? ojson(*predicate_count) : ojson(nullptr);
        doc["agree"] = true;
        doc["nontrivial"] = nontrivial;
        auto sample = ojson::array();
        for (std::size_t i = 0; i < enumerated.size() && i < a.sample; ++i)
            sample.push_back(enumerated[i].to_coordinates());
        doc["sample"] = std::move(sample);
        emit(out, doc);
        return;
    }
    out << "fixed points of chi_{" << a.n << ',' << a.m << "}^" << a.power << ": " << enumerated.size() << '\n';
    if (predicate_count) out << "substring predicate: " << *predicate_count << " (agrees with enumeration)\n";
    else out << "substring predicate: n/a (power is not 2^j)\n";
    out << "nontrivial: " << (nontrivial ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < enumerated.size() && i < a.sample; ++i)
        out << "  " << enumerated[i].to_coordinates() << '\n';
    if (enumerated.size() > a.sample) out << "  ... " << enumerated.size() - a.sample << " more\n";
}

// cost ----------------------------------------------------------------------

struct CostArgs {
    std::string template_name;
    int n = 0;
    std::string library;
    std::string library_file;
    Format format = Format::text;
};

void cmd_cost(const CostArgs& a, std::ostream& out) {
    GateLibrary lib;
    if (!a.library_file.empty()) {
        std::ifstream in(a.library_file);
        if (!in) throw std::ios_base::failure("cannot open '" + a.library_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const auto libs = load_gate_libraries(buf.str());
        auto it = std::find_if(libs.begin(), libs.end(), [&](const GateLibrary& l) { return l.name == a.library; });
        if (it == libs.end()) throw UsageError("library '" + a.library + "' not found in " + a.library_file);
        lib = *it;
    } else {
        const auto& libs = shipped_gate_libraries();
        auto it = std::find_if(libs.begin(), libs.end(), [&](const GateLibrary& l) { return l.name == a.library; });
        if (it == libs.end()) throw UsageError("unknown gate library '" + a.library + "'");
        lib = *it;
    }
    if (a.template_name != "chi" && a.template_name != "chi_prime3" && a.template_name != "cchi")
        throw UsageError("unknown template '" + a.template_name + "' (expected chi, chi_prime3, cchi)");

    const CircuitTemplate t = shipped_template(a.template_name, a.n);
    const GateEquivalents area = area_estimate(t, lib);
    const int stages = latency_stages(t);
    if (a.format == Format::structured) {
        ojson doc;
        doc["template"] = t.name;
        doc["n"] = a.n;
        doc["library"] = lib.name;
        doc["area_ge"] = area.to_string();
        doc["latency_stages"] = stages;
        emit(out, doc);
        return;
    }
    out << "template: " << t.name << " (n=" << a.n << ")\nlibrary: " << lib.name << '\n';
    out << "area: " << area.to_string() << " GE\nlatency: " << stages << " stages\n";
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format: text or structured")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shift-invariant chi-family S-box toolkit"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "Build a truth table from a family spec");
    c->add_option("spec", construct.spec, "chi:<n> | chi_nm:<n>:<m> | theta:<n>:<m>:<k> | chi_prime3:<n> | cchi:<n> | concat(...)")
        ->required();
    c->add_option("-o,--output", construct.output, "Write the truth-table document here");
    add_format(c, construct.format);

    AnalyzeArgs analyze;
    analyze.metrics = {"ddt", "walsh", "bct", "dlct", "degree"};
    auto* an = app.add_subcommand("analyze", "Compute spectra and structural data of a mapping");
    an->add_option("target", analyze.target, "Family spec or truth-table file")->required();
    an->add_option("--metrics", analyze.metrics, "Comma-separated subset of ddt,walsh,bct,dlct,degree,cycles")
        ->delimiter(',');
    add_format(an, analyze.format);

    GroupArgs group;
    auto* g = app.add_subcommand("group", "Symbolic queries in the theta-combination group");
    g->add_option("--n", group.n, "Dimension")->required();
    g->add_option("--m", group.m, "Step")->required();
    g->add_option("--coeffs", group.coeffs, "Coefficients a_0..a_ell, lowest index first")->required();
    g->add_option("query", group.query, "inverse | order | iterate:<k> | involution | materialize")->required();
    g->add_option("-o,--output", group.output, "Truth-table output for materialize");
    add_format(g, group.format);

    FixedPointArgs fixed;
    auto* fp = app.add_subcommand("fixed-points", "Fixed points of chi_{n,m}^k by enumeration and substring test");
    fp->add_option("--n", fixed.n, "Dimension")->required();
    fp->add_option("--m", fixed.m, "Step")->required();
    fp->add_option("--power", fixed.power, "Iterate exponent k")->required();
    fp->add_option("--sample", fixed.sample, "Number of fixed points to list");
    add_format(fp, fixed.format);

    CostArgs cost;
    auto* co = app.add_subcommand("cost", "Gate-equivalent area and latency estimate");
    co->add_option("template", cost.template_name, "chi | chi_prime3 | cchi")->required();
    co->add_option("--n", cost.n, "Bit count")->required();
    co->add_option("--lib", cost.library, "Technology library name")->required();
    co->add_option("--lib-file", cost.library_file, "CSV with header gate,technology,ge");
    add_format(co, cost.format);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        if (*c) cmd_construct(construct, out);
        else if (*an) cmd_analyze(analyze, out);
        else if (*g) cmd_group(group, out);
        else if (*fp) cmd_fixed_points(fixed, out);
        else if (*co) cmd_cost(cost, out);
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace chimap::cli
