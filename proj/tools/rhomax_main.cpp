#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rhomax/json_io.hpp"
#include "rhomax/verify.hpp"

using namespace rhomax;

namespace {

int g_sweep_parallelism = 1;

void apply_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("parameter", "cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos)
            throw Error("parameter", "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "milnor_degree_bound")
            milnor_defaults().degree_bound = std::stoi(value);
        else if (key == "sweep_parallelism")
            g_sweep_parallelism = std::stoi(value);
        else
            throw Error("parameter", "unknown config key '" + key + "'");
    }
}

Family parse_family_flag(const std::string& s) {
    if (s == "a" || s == "A") return Family::A;
    if (s == "b" || s == "B") return Family::B;
    throw Error("usage", "--family must be 'a' or 'b'");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ConstructionRecord build_record(const std::string& fixed_case, const std::string& family,
                                long n, long m, long k, bool have_params) {
    if (!fixed_case.empty()) {
        if (fixed_case == "m13") return construct_m13();
        if (fixed_case == "m76") return construct_m76();
        throw Error("usage", "--case must be 'm13' or 'm76'");
    }
    if (family.empty() || !have_params)
        throw Error("usage", "need either --case or --family with --n, --m, --k");
    return construct({parse_family_flag(family), n, m, k});
}

const PlaneFixture& fixture_by_name(const std::string& name) {
    static const PlaneFixture fa = instantiate_family_a();
    static const PlaneFixture fb = instantiate_family_b();
    static const PlaneFixture fm = instantiate_m13();
    if (name == "a" || name == "A") return fa;
    if (name == "b" || name == "B") return fb;
    if (name == "m13") return fm;
    throw Error("usage", "--family must be 'a', 'b' or 'm13' for the census command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and Picard-maximality certificates for bidouble covers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "key = value file (milnor_degree_bound, sweep_parallelism)")
        ->each([](const std::string& p) { apply_config(p); });

    // construct
    auto* sc_construct = app.add_subcommand("construct", "assemble a construction record");
    std::string c_family, c_case;
    long c_n = 0, c_m = 0, c_k = 0;
    bool c_have_n = false, c_have_m = false, c_have_k = false;
    sc_construct->add_option("--family", c_family, "a or b");
    sc_construct->add_option("--case", c_case, "fixed case: m13 or m76");
    sc_construct->add_option("--n", c_n)->each([&](const std::string&) { c_have_n = true; });
    sc_construct->add_option("--m", c_m)->each([&](const std::string&) { c_have_m = true; });
    sc_construct->add_option("--k", c_k)->each([&](const std::string&) { c_have_k = true; });
    sc_construct->callback([&] {
        emit(to_json(build_record(c_case, c_family, c_n, c_m, c_k, c_have_n && c_have_m && c_have_k)));
    });

    // certify
    auto* sc_certify = app.add_subcommand("certify", "emit the maximality certificate only");
    std::string y_family, y_case;
    long y_n = 0, y_m = 0, y_k = 0;
    bool y_have_n = false, y_have_m = false, y_have_k = false;
    sc_certify->add_option("--family", y_family, "a or b");
    sc_certify->add_option("--case", y_case, "fixed case: m13 or m76");
    sc_certify->add_option("--n", y_n)->each([&](const std::string&) { y_have_n = true; });
    sc_certify->add_option("--m", y_m)->each([&](const std::string&) { y_have_m = true; });
    sc_certify->add_option("--k", y_k)->each([&](const std::string&) { y_have_k = true; });
    sc_certify->callback([&] {
        emit(to_json(
            build_record(y_case, y_family, y_n, y_m, y_k, y_have_n && y_have_m && y_have_k)
                .certificate));
    });

    // solve
    auto* sc_solve = app.add_subcommand("solve", "invert (K2, chi) to family parameters");
    long s_k2 = 0, s_chi = 0;
    std::string s_family = "a";
    sc_solve->add_option("--k2", s_k2)->required();
    sc_solve->add_option("--chi", s_chi)->required();
    sc_solve->add_option("--family", s_family, "a (default) or b");
    sc_solve->callback([&] {
        const Family f = parse_family_flag(s_family);
        const FamilyParams p = f == Family::A ? solve_family_a(s_k2, s_chi) : solve_family_b(s_k2, s_chi);
        emit(Json{{"family", to_string(p.family)}, {"n", p.n}, {"m", p.m}, {"k", p.k}});
    });

    // census
    auto* sc_census = app.add_subcommand("census", "derive singular events from an arrangement");
    std::string n_family, n_input;
    long n_n = 0, n_m = 0, n_k = 0;
    bool n_have_n = false, n_have_m = false, n_have_k = false, n_dump = false;
    sc_census->add_option("--family", n_family, "a, b or m13");
    sc_census->add_option("--input", n_input, "arrangement dump (JSON) to verify and census");
    sc_census->add_option("--n", n_n)->each([&](const std::string&) { n_have_n = true; });
    sc_census->add_option("--m", n_m)->each([&](const std::string&) { n_have_m = true; });
    sc_census->add_option("--k", n_k)->each([&](const std::string&) { n_have_k = true; });
    sc_census->add_flag("--dump-arrangement", n_dump, "print the arrangement instead of the census");
    sc_census->callback([&] {
        if (!n_input.empty()) {
            std::ifstream in(n_input);
            if (!in) throw Error("parameter", "cannot open '" + n_input + "'");
            Json j = Json::parse(in);
            const ArrangementDump dump = arrangement_from_json(j);
            auto events = derive_census(dump.arrangement, dump.partition);
            Json evj = Json::array();
            for (const auto& e : events) evj.push_back(to_json(e));
            emit(Json{{"events", evj}, {"census", to_json(bidouble_census(events))}});
            return;
        }
        if (n_family.empty()) throw Error("usage", "census needs --family or --input");
        const PlaneFixture& fx = fixture_by_name(n_family);
        if (n_dump) {
            emit(to_json(fx.arrangement, fx.partition));
            return;
        }
        if (n_have_n && n_have_m && n_have_k) {
            const Family f = parse_family_flag(n_family);
            const PipelineResult r = census_pipeline({f, n_n, n_m, n_k});
            Json evj = Json::array();
            for (const auto& e : r.events) evj.push_back(to_json(e));
            emit(Json{{"events", evj}, {"census", to_json(r.census)}});
            return;
        }
        const BranchAssignment& part =
            (n_family == "m13") ? fx.partition : fx.section_partition;
        auto events = derive_census(fx.arrangement, part);
        Json evj = Json::array();
        for (const auto& e : events) evj.push_back(to_json(e));
        emit(Json{{"events", evj}, {"census", to_json(bidouble_census(events))}});
    });

    // classify-germ
    auto* sc_germ = app.add_subcommand("classify-germ", "classify a plane curve germ at the origin");
    std::string germ_text;
    sc_germ->add_option("germ", germ_text, "e.g. \"y*(x^2 - 2*y^3)\"")->required();
    sc_germ->callback([&] { emit(to_json(classify_germ(Germ::parse(germ_text)))); });

    // geography
    auto* sc_geo = app.add_subcommand("geography", "sweep the admissible (K2, chi) pairs");
    long max_chi = 49;
    std::string geo_format = "json";
    sc_geo->add_option("--max-chi", max_chi, "sweep bound (default 49)");
    sc_geo->add_option("--format", geo_format, "json or csv");
    sc_geo->callback([&] {
        const auto rows = sweep(max_chi, g_sweep_parallelism);
        if (geo_format == "csv")
            std::cout << sweep_to_csv(rows);
        else if (geo_format == "json")
            emit(sweep_to_json(rows));
        else
            throw Error("usage", "--format must be json or csv");
    });

    // density
    auto* sc_density = app.add_subcommand("density", "witness pair with K2/chi = q");
    std::string q_text;
    sc_density->add_option("--q", q_text, "rational in (2, 5/2), e.g. 9/4")->required();
    sc_density->callback([&] { emit(to_json(density_witness(parse_rational(q_text)))); });

    // coverage
    auto* sc_cov = app.add_subcommand("coverage", "Horikawa-line coverage verdict");
    long cov_chi = 0;
    std::string cov_line;
    sc_cov->add_option("--chi", cov_chi)->required();
    sc_cov->add_option("--line", cov_line, "even or odd")->required();
    sc_cov->callback([&] {
        HorikawaLine line;
        if (cov_line == "even")
            line = HorikawaLine::Even;
        else if (cov_line == "odd")
            line = HorikawaLine::Odd;
        else
            throw Error("usage", "--line must be even or odd");
        emit(to_json(horikawa_coverage(cov_chi, line)));
    });

    // verify-paper
    auto* sc_verify = app.add_subcommand("verify-paper", "run the full verification suite");
    std::string only, verify_format = "text";
    sc_verify->add_option("--only", only, "filter checks by substring");
    sc_verify->add_option("--format", verify_format, "text (default) or json");
    sc_verify->callback([&] {
        const VerifyReport report = verify_paper(only);
        if (verify_format == "json") {
            Json checks = Json::array();
            for (const auto& c : report.checks)
                checks.push_back(Json{{"name", c.name},
                                      {"pass", c.pass},
                                      {"message", c.message},
                                      {"millis", c.millis}});
            emit(Json{{"all_pass", report.all_pass}, {"checks", checks}});
        } else {
            for (const auto& c : report.checks) {
                std::ostringstream line;
                line << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
                     << (long)c.millis << " ms)";
                if (!c.pass) line << "\n      " << c.message;
                std::cout << line.str() << "\n";
            }
        }
        if (!report.all_pass) throw Error("verification", "at least one check failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", {{"kind", e.kind}, {"message", e.what()}}}}.dump() << "\n";
        return e.kind == "usage" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
