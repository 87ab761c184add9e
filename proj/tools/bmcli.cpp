#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmweights/bmweights.hpp"

/* Command-line front end.
 *
 * Every subcommand fixes a field datum with --p/--f/--e and prints to
 * stdout in the format selected by --format (json or csv).  Output is
 * byte-identical across runs for the same arguments, including parallel
 * verify runs.
 *
 * Exit codes: 0 on success, 1 when a verification suite fails, 2 for
 * usage errors (bad flags or malformed/invalid object specs).
 */

namespace {

using namespace bmweights;

constexpr const char* kSchema = "bmweights/1";

struct Common {
    long long p = 0;
    int f = 1;
    int e = 1;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "residue characteristic (odd prime)")->required();
    cmd->add_option("--f", c.f, "residue degree");
    cmd->add_option("--e", c.e, "absolute ramification index");
    cmd->add_option("--format", c.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << csv_field(header[i]);
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "," : "") << csv_field(row[i]);
        std::cout << "\n";
    }
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

nlohmann::ordered_json envelope(const Common& c) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["p"] = c.p;
    j["f"] = c.f;
    j["e"] = c.e;
    return j;
}

const char* kind_name(TypeKind k) {
    switch (k) {
        case TypeKind::Scalar: return "scalar";
        case TypeKind::PrincipalSeries: return "ps";
        case TypeKind::Cuspidal: return "cusp";
    }
    return "?";
}

int cmd_weights(const Common& c) {
    FieldDatum fd(c.p, c.f, c.e);
    std::vector<SerreWeight> ws = enumerate_weights(fd, true);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const SerreWeight& w : ws)
            rows.push_back({format_weight_spec(w), std::to_string(weight_dim(w)),
                            is_steinberg(fd, w) ? "true" : "false"});
        print_csv({"weight", "dim", "steinberg"}, rows);
        return 0;
    }
    nlohmann::ordered_json j = envelope(c);
    j["weights"] = nlohmann::ordered_json::array();
    for (const SerreWeight& w : ws) {
        nlohmann::ordered_json e;
        e["weight"] = format_weight_spec(w);
        e["dim"] = weight_dim(w);
        e["steinberg"] = is_steinberg(fd, w);
        j["weights"].push_back(std::move(e));
    }
    print_json(j);
    return 0;
}

int cmd_types(const Common& c) {
    FieldDatum fd(c.p, c.f, c.e);
    std::vector<TameType> ts = enumerate_tame_types(fd);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const TameType& t : ts)
            rows.push_back({format_type_spec(t), kind_name(t.kind),
                            std::to_string(type_dimension(fd, t))});
        print_csv({"type", "kind", "dim"}, rows);
        return 0;
    }
    nlohmann::ordered_json j = envelope(c);
    j["types"] = nlohmann::ordered_json::array();
    for (const TameType& t : ts) {
        nlohmann::ordered_json e;
        e["type"] = format_type_spec(t);
        e["kind"] = kind_name(t.kind);
        e["dim"] = type_dimension(fd, t);
        j["types"].push_back(std::move(e));
    }
    print_json(j);
    return 0;
}

int cmd_jh(const Common& c, const std::string& type_spec) {
    FieldDatum fd(c.p, c.f, c.e);
    TameType t = parse_type_spec(fd, type_spec);
    std::vector<JHFactor> jh = jh_set(fd, t);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const JHFactor& fac : jh)
            rows.push_back({format_shape(fac.shape), format_weight_spec(fac.weight),
                            std::to_string(weight_dim(fac.weight))});
        print_csv({"shape", "weight", "dim"}, rows);
        return 0;
    }
    nlohmann::ordered_json j = envelope(c);
    j["type"] = format_type_spec(t);
    j["factors"] = nlohmann::ordered_json::array();
    for (const JHFactor& fac : jh) {
        nlohmann::ordered_json e;
        e["shape"] = format_shape(fac.shape);
        e["weight"] = format_weight_spec(fac.weight);
        e["dim"] = weight_dim(fac.weight);
        j["factors"].push_back(std::move(e));
    }
    print_json(j);
    return 0;
}

int cmd_solve_n(const Common& c, const std::string& weight_spec) {
    FieldDatum fd(c.p, c.f, c.e);
    SerreWeight w = parse_weight_spec(fd, weight_spec);
    DecompMatrix m = build_decomp_matrix(fd);
    NSolution sol = solve_n(m, w);
    Cycle z = bm_cycle(m, w, sol);  // enforces Sum n_tau Z(tau) = [w]
    (void)z;
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [j, coeff] : sol.coeffs)
            rows.push_back({format_type_spec(m.col_types[static_cast<std::size_t>(j)]),
                            coeff.str()});
        print_csv({"type", "coeff"}, rows);
        return 0;
    }
    nlohmann::ordered_json j = envelope(c);
    j["weight"] = format_weight_spec(w);
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& [idx, coeff] : sol.coeffs) {
        nlohmann::ordered_json e;
        e["type"] = format_type_spec(m.col_types[static_cast<std::size_t>(idx)]);
        e["coeff"] = static_cast<std::int64_t>(coeff);
        j["coeffs"].push_back(std::move(e));
    }
    j["kernel_dim"] = m.kernel->basis.ncols();
    print_json(j);
    return 0;
}

int cmd_match(const Common& c, const std::string& datum_spec, bool unordered) {
    FieldDatum fd(c.p, c.f, c.e);
    InertialDatum d = parse_datum_spec(fd, datum_spec);
    MatchMode mode = unordered ? MatchMode::Unordered : MatchMode::Ordered;
    std::vector<SerreWeight> ms = match_weights(fd, d, mode);
    Cycle comps = components_through(fd, d, mode);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const SerreWeight& w : ms)
            rows.push_back({format_weight_spec(w), std::to_string(weight_dim(w))});
        print_csv({"weight", "dim"}, rows);
        return 0;
    }
    nlohmann::ordered_json j = envelope(c);
    j["datum"] = format_datum_spec(d);
    j["weights"] = nlohmann::ordered_json::array();
    for (const SerreWeight& w : ms) j["weights"].push_back(format_weight_spec(w));
    j["components"] = cycle_to_json(comps);
    print_json(j);
    return 0;
}

int cmd_verify(const Common& c, const std::string& suite, int jobs) {
    FieldDatum fd(c.p, c.f, c.e);
    VerifyContext ctx(fd, jobs);
    std::vector<std::string> names;
    if (suite == "all") names = VerifyContext::suite_names();
    else names.push_back(suite);
    std::vector<SuiteReport> reports;
    for (const std::string& name : names) reports.push_back(ctx.run_suite(name));
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const SuiteReport& r : reports) {
            std::string first = r.failures.empty() ? "" : r.failures.front();
            rows.push_back({r.suite, std::to_string(r.checks),
                            std::to_string(r.failures.size()),
                            r.passed() ? "pass" : "fail", first});
        }
        print_csv({"suite", "checks", "failures", "status", "first_failure"}, rows);
    } else {
        nlohmann::ordered_json j = envelope(c);
        j["reports"] = nlohmann::ordered_json::array();
        for (const SuiteReport& r : reports) {
            nlohmann::ordered_json e;
            e["suite"] = r.suite;
            e["checks"] = r.checks;
            e["failures"] = r.failures;
            e["passed"] = r.passed();
            j["reports"].push_back(std::move(e));
        }
        j["passed"] = exit_code_for(reports) == 0;
        print_json(j);
    }
    return exit_code_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serre weight / tame type combinatorics for GL2 of a p-adic field"};
    app.require_subcommand(1);

    Common common;

    auto* weights_cmd = app.add_subcommand("weights", "list all Serre weights");
    add_common(weights_cmd, common);

    auto* types_cmd = app.add_subcommand("types", "list all tame inertial types");
    add_common(types_cmd, common);

    std::string type_spec;
    auto* jh_cmd = app.add_subcommand("jh", "Jordan-Holder factors of a type's reduction");
    add_common(jh_cmd, common);
    jh_cmd->add_option("--type", type_spec, "type spec, e.g. ps:0,1 or cusp:1")->required();

    std::string weight_spec;
    auto* solve_cmd = app.add_subcommand("solve_n", "inversion coefficients n_tau(w)");
    add_common(solve_cmd, common);
    solve_cmd->add_option("--weight", weight_spec, "weight spec, e.g. w:1;0")->required();

    std::string datum_spec;
    bool unordered = false;
    auto* match_cmd = app.add_subcommand("match", "weights through an inertial datum");
    add_common(match_cmd, common);
    match_cmd->add_option("--datum", datum_spec, "datum spec, e.g. n1:1,0,na")->required();
    match_cmd->add_flag("--unordered", unordered, "also accept the swapped sub/quot pair");

    std::string suite = "all";
    int jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember({"all", "jh", "shapes", "solve", "orth", "cycles", "xside",
                               "galois", "oracle"}));
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*weights_cmd) return cmd_weights(common);
        if (*types_cmd) return cmd_types(common);
        if (*jh_cmd) return cmd_jh(common, type_spec);
        if (*solve_cmd) return cmd_solve_n(common, weight_spec);
        if (*match_cmd) return cmd_match(common, datum_spec, unordered);
        if (*verify_cmd) return cmd_verify(common, suite, jobs);
    } catch (const bmweights::ParseError& e) {
        std::cerr << "error: " << e.what() << " (at offset " << e.position << ")\n";
        return 2;
    } catch (const bmweights::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
