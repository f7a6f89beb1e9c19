// Command-line front end: exact crossing-count analysis, Monte Carlo
// simulation, normal-approximation bounds, family generators, and the
// self-verification oracle suite.

#include "crossings/bounds.hpp"
#include "crossings/errors.hpp"
#include "crossings/graph.hpp"
#include "crossings/matchings.hpp"
#include "crossings/moments.hpp"
#include "crossings/montecarlo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace crossings;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// exit codes: 0 ok, 1 usage, 2 parse error, 3 capacity, 4 verification failure
enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3, kVerifyFailed = 4 };

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(0, "cannot open file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

std::uint64_t default_pair_cap() {
    if (const char* env = std::getenv("CROSSINGS_PAIR_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultPairCap;
}

json rational_json(const Rational& r) { return rational_string(r); }

json census_json(const PairCensus& census) {
    json out = json::object();
    for (int c = 0; c < kPairClassCount; ++c)
        out[pair_class_name(static_cast<PairClass>(c))] = census.counts[c].str();
    return out;
}

json bound_json(const BoundReport& b) {
    json out = json::object();
    out["m"] = b.edge_count;
    out["max_degree"] = b.max_degree;
    out["m2"] = b.m2.str();
    out["m4"] = b.m4.str();
    out["sigma"] = b.sigma;
    out["coupling_bound"] = b.coupling_bound;
    out["psi_bound"] = b.psi_bound;
    out["kolmogorov_bound"] = b.kolmogorov_bound;
    return out;
}

json pmf_json(const Pmf& pmf) {
    json out = json::object();
    for (const auto& [k, p] : pmf.mass) out[std::to_string(k)] = rational_string(p);
    return out;
}

json analysis_document(const std::string& text, std::uint64_t pair_cap) {
    Graph g = parse_edge_list(text);
    MomentReport report = exact_moments(g, pair_cap);

    json doc = json::object();
    doc["schema"] = "crossings-analysis/1";
    doc["tool_version"] = kToolVersion;
    doc["input_digest"] = "fnv1a64:" + fnv1a64_hex(text);
    doc["graph"] = {{"n", g.n}, {"m", g.edge_count()}, {"max_degree", g.max_degree()},
                    {"labels", g.labels}};
    doc["matchings"] = {{"m1", std::to_string(g.edge_count())},
                        {"m2", report.m2.str()},
                        {"m3", report.m3.str()},
                        {"m4", report.m4.str()}};
    doc["census"] = census_json(report.census);
    doc["moments"] = {{"mean", rational_json(report.mean)},
                      {"mean_decimal", to_double(report.mean)},
                      {"second_moment", rational_json(report.second_moment)},
                      {"second_moment_decimal", to_double(report.second_moment)},
                      {"variance", rational_json(report.variance)},
                      {"variance_decimal", to_double(report.variance)}};
    if (report.variance > 0) {
        doc["bound"] = bound_json(kolmogorov_bound(g, report));
    } else {
        doc["bound"] = {{"degenerate", true}};
    }
    return doc;
}

void emit_csv(const json& doc, const std::string& prefix, std::ostream& out) {
    for (const auto& [key, value] : doc.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            emit_csv(value, name, out);
        } else if (value.is_array()) {
            std::ostringstream joined;
            for (std::size_t i = 0; i < value.size(); ++i)
                joined << (i ? ";" : "") << value[i].get<std::string>();
            out << name << "," << joined.str() << "\n";
        } else if (value.is_string()) {
            out << name << "," << value.get<std::string>() << "\n";
        } else {
            out << name << "," << value.dump() << "\n";
        }
    }
}

int cmd_analyze(const std::string& path, bool csv, std::uint64_t pair_cap) {
    json doc = analysis_document(read_input(path), pair_cap);
    if (csv)
        emit_csv(doc, "", std::cout);
    else
        std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_exact(const std::string& path, int limit) {
    Graph g = parse_edge_list(read_input(path));
    Pmf pmf = exact_distribution(g, limit);
    json doc = json::object();
    doc["schema"] = "crossings-exact/1";
    doc["tool_version"] = kToolVersion;
    doc["pmf"] = pmf_json(pmf);
    doc["mean"] = rational_json(pmf.mean());
    doc["variance"] = rational_json(pmf.variance());
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_simulate(const std::string& path, std::uint64_t samples, std::uint64_t seed, bool exact,
                 std::uint64_t pair_cap) {
    Graph g = parse_edge_list(read_input(path));
    json doc = json::object();
    doc["schema"] = "crossings-simulate/1";
    doc["tool_version"] = kToolVersion;

    Pmf pmf;
    if (exact) {
        pmf = exact_distribution(g);
        doc["mode"] = "exact";
    } else {
        pmf = empirical_distribution(g, samples, seed);
        doc["mode"] = "empirical";
        doc["samples"] = samples;
        doc["seed"] = seed;
    }
    doc["pmf"] = pmf_json(pmf);
    doc["mean"] = rational_json(pmf.mean());
    doc["mean_decimal"] = to_double(pmf.mean());
    doc["variance"] = rational_json(pmf.variance());
    doc["variance_decimal"] = to_double(pmf.variance());

    // standardize against exact moments when the census fits the cap,
    // otherwise against the sample's own moments
    double mean, var;
    try {
        MomentReport report = exact_moments(g, pair_cap);
        mean = to_double(report.mean);
        var = to_double(report.variance);
        doc["standardization"] = "exact";
    } catch (const CapacityError&) {
        mean = to_double(pmf.mean());
        var = to_double(pmf.variance());
        doc["standardization"] = "empirical";
    }
    if (var > 0)
        doc["ks_to_normal"] = ks_distance_to_normal(pmf, mean, std::sqrt(var));
    else
        doc["ks_to_normal"] = nullptr;
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_bound(const std::string& path, const std::string& kind, int n, std::uint64_t pair_cap) {
    json doc = json::object();
    doc["schema"] = "crossings-bound/1";
    doc["tool_version"] = kToolVersion;
    BoundReport b;
    if (!kind.empty()) {
        doc["family"] = kind;
        doc["n"] = n;
        b = kolmogorov_bound_for_family(family_kind_from_string(kind), n);
    } else {
        Graph g = parse_edge_list(read_input(path));
        MomentReport report = exact_moments(g, pair_cap);
        if (report.variance == 0) {
            doc["bound"] = {{"degenerate", true}};
            std::cout << doc.dump(2) << "\n";
            return kOk;
        }
        b = kolmogorov_bound(g, report);
    }
    doc["bound"] = bound_json(b);
    std::cout << doc.dump(2) << "\n";
    return kOk;
}

int cmd_family(const std::string& kind, int n, const std::string& output) {
    Graph g = make_family(family_kind_from_string(kind), n);
    std::string text = to_edge_list(g);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw DomainError("cannot write file: " + output);
        out << text;
    }
    return kOk;
}

// ---- verify: runs the independent oracles and prints a pass table ----

struct VerifyState {
    int failures = 0;
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

bool size_bias_identity_holds(const Graph& g) {
    Pmf base = exact_distribution(g);
    Pmf biased = size_bias_exact_law(g);
    Rational mu = base.mean();
    std::map<long long, Rational> expected;
    for (const auto& [k, p] : base.mass)
        if (k > 0) expected[k] = Rational(k) * p / mu;
    std::map<long long, Rational> actual;
    for (const auto& [k, p] : biased.mass)
        if (p != 0) actual[k] = p;
    return expected == actual;
}

int cmd_verify() {
    VerifyState v;

    for (int c = 0; c < kPairClassCount; ++c) {
        auto cls = static_cast<PairClass>(c);
        Rational table = class_probability(cls);
        Rational oracle = verify_class_probability(cls);
        v.check(std::string("class_probability ") + pair_class_name(cls), table == oracle,
                "table " + rational_string(table) + " vs oracle " + rational_string(oracle));
    }

    struct Named {
        const char* name;
        Graph g;
    };
    std::vector<Named> small = {
        {"path(4)", make_family(FamilyKind::path, 4)},
        {"path(5)", make_family(FamilyKind::path, 5)},
        {"path(6)", make_family(FamilyKind::path, 6)},
        {"cycle(5)", make_family(FamilyKind::cycle, 5)},
        {"pairing(3)", make_family(FamilyKind::pairing, 3)},
        {"triangles(2)", make_family(FamilyKind::triangles, 2)},
        {"star_with_tail(6)", make_family(FamilyKind::star_with_tail, 6)},
    };
    for (const auto& [name, g] : small) {
        MomentReport report = exact_moments(g);
        Pmf pmf = exact_distribution(g);
        bool ok = report.mean == pmf.mean() && report.variance == pmf.variance();
        v.check(std::string("moments_vs_enumeration ") + name, ok);
    }

    for (const auto* name : {"path(5)", "cycle(5)", "pairing(3)", "star_with_tail(6)"}) {
        for (const auto& [nm, g] : small)
            if (nm == std::string(name))
                v.check(std::string("size_bias_identity ") + name, size_bias_identity_holds(g));
    }

    for (int n = 5; n <= 8; ++n) {
        Pmf closed = star_tail_pmf(n);
        Pmf enumerated = exact_distribution(make_family(FamilyKind::star_with_tail, n));
        bool ok = true;
        for (const auto& [k, p] : closed.mass) {
            auto it = enumerated.mass.find(k);
            Rational q = it == enumerated.mass.end() ? Rational(0) : it->second;
            if (p != q) ok = false;
        }
        v.check("star_tail_pmf n=" + std::to_string(n), ok);
    }

    std::cout << (v.failures == 0 ? "verify: all checks passed"
                                  : "verify: " + std::to_string(v.failures) + " check(s) failed")
              << "\n";
    return v.failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moments, normal-approximation bounds, and Monte Carlo simulation of "
                 "crossing counts of graphs embedded uniformly at random in convex position"};
    app.require_subcommand(1);

    std::string path = "-", kind, output;
    bool csv = false, exact = false;
    int n = 0, limit = kDefaultExactLimit;
    std::uint64_t samples = 10000, seed = 0;
    std::uint64_t pair_cap = default_pair_cap();

    auto* analyze = app.add_subcommand("analyze", "Exact census, moments, and bound for a graph");
    analyze->add_option("path", path, "edge-list file ('-' for stdin)")->required();
    analyze->add_flag("--csv", csv, "flat key,value output");
    analyze->add_option("--pair-cap", pair_cap, "max census pair operations");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo pmf, moments, KS-to-normal");
    simulate->add_option("path", path, "edge-list file ('-' for stdin)")->required();
    simulate->add_option("--samples", samples, "number of random embeddings");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_flag("--exact", exact, "exact pmf by full enumeration instead of sampling");
    simulate->add_option("--pair-cap", pair_cap, "max census pair operations");

    auto* exact_cmd = app.add_subcommand("exact", "Exact pmf by permutation enumeration");
    exact_cmd->add_option("path", path, "edge-list file ('-' for stdin)")->required();
    exact_cmd->add_option("--limit", limit, "max vertex count for enumeration");

    auto* bound = app.add_subcommand("bound", "Kolmogorov-distance bound");
    bound->add_option("path", path, "edge-list file ('-' for stdin)");
    bound->add_option("--kind", kind, "family kind (closed-form statistics)");
    bound->add_option("--n", n, "family size parameter");
    bound->add_option("--pair-cap", pair_cap, "max census pair operations");

    auto* family = app.add_subcommand("family", "Generate a named family graph as an edge list");
    family->add_option("--kind", kind, "pairing|path|cycle|triangles|star_with_tail")->required();
    family->add_option("--n", n, "family size parameter")->required();
    family->add_option("-o,--output", output, "output file (default stdout)");

    app.add_subcommand("verify", "Run the self-verification oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand("analyze")) return cmd_analyze(path, csv, pair_cap);
        if (app.got_subcommand("simulate")) return cmd_simulate(path, samples, seed, exact, pair_cap);
        if (app.got_subcommand("exact")) return cmd_exact(path, limit);
        if (app.got_subcommand("bound")) {
            if (kind.empty() && path == "-" && !bound->count("path")) {
                std::cerr << "bound: need a path or --kind/--n\n";
                return kUsage;
            }
            if (!kind.empty() && n <= 0) {
                std::cerr << "bound: --kind requires --n\n";
                return kUsage;
            }
            return cmd_bound(path, kind, n, pair_cap);
        }
        if (app.got_subcommand("family")) return cmd_family(kind, n, output);
        if (app.got_subcommand("verify")) return cmd_verify();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
