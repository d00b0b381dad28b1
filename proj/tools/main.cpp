// mzeta command-line front end: evaluate, tabulate and verify the diagonal
// multiple zeta families. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzeta/identities.hpp"
#include "mzeta/laurent.hpp"
#include "mzeta/mzv.hpp"

using json = nlohmann::ordered_json;
using namespace mzeta;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json report_to_json(const IdentityReport& r) {
    json j;
    j["id"] = r.id;
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["pass"] = r.pass;
    j["informational"] = r.informational;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void print_json(const json& j) {
    std::cout << j.dump(2) << "\n";
}

struct EvalOptions {
    std::string family = "zeta";
    unsigned depth = 1;
    std::string arg = "2";
    std::uint64_t oracle_n = 0; // 0 = no oracle
    std::string format = "text";
    double tolerance = 1e-12;
};

struct ExactOptions {
    std::string family = "zeta";
    unsigned depth = 1;
    long long arg = 2;
    std::string format = "text";
};

struct VerifyOptions {
    std::string suite = "all";
    unsigned max_depth = 6;
    unsigned max_k = 10;
    std::uint64_t oracle_n = 5000;
    double tolerance = 1e-12;
    std::string format = "text";
};

struct PolesOptions {
    unsigned depth = 1;
    std::string format = "text";
};

struct TableOptions {
    std::string family = "all";
    unsigned max_depth = 4;
    std::string arg = "2";
    std::uint64_t oracle_n = 0;
    std::string format = "csv";
};

Family parse_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw std::domain_error("unknown family '" + name + "'");
    return *f;
}

double parse_real(const std::string& text) {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v))
        throw std::domain_error("argument '" + text + "' is not a finite number");
    return v;
}

struct MethodRow {
    Method method;
    double value;
    std::optional<double> error_bound;
};

int cmd_eval(const EvalOptions& opt) {
    const Family fam = parse_family(opt.family);
    const double s = parse_real(opt.arg);

    std::vector<MethodRow> rows;
    rows.push_back({Method::ClosedForm, diagonal_closed_form(fam, opt.depth, s), std::nullopt});
    rows.push_back({Method::BellForm, diagonal_bell_form(fam, opt.depth, s), std::nullopt});
    rows.push_back({Method::Recurrence, diagonal_recurrence(fam, opt.depth, s), std::nullopt});
    if (opt.oracle_n > 0) {
        const auto o = diagonal_oracle(fam, opt.depth, s, OracleConfig{opt.oracle_n});
        rows.push_back({Method::Oracle, o.value, o.tail_bound});
    }

    const double closed = rows[0].value;
    const double scale = std::max(1.0, std::abs(closed));
    json deltas = json::object();
    bool pass = true;
    for (size_t i = 1; i < rows.size(); ++i) {
        const double delta = std::abs(closed - rows[i].value);
        deltas[std::string("closed_form_vs_") + std::string(method_name(rows[i].method))] = delta;
        double budget = opt.tolerance * scale;
        if (rows[i].error_bound) budget = std::max(budget, *rows[i].error_bound);
        if (delta > budget) pass = false;
    }

    if (opt.format == "json") {
        json j;
        j["command"] = "eval";
        j["parameters"] = {{"family", opt.family},
                           {"depth", opt.depth},
                           {"argument", s},
                           {"oracle_n", opt.oracle_n},
                           {"tolerance", opt.tolerance}};
        json results = json::array();
        for (const auto& row : rows) {
            json r;
            r["method"] = std::string(method_name(row.method));
            r["value"] = row.value;
            if (row.error_bound) r["error_bound"] = *row.error_bound;
            results.push_back(r);
        }
        j["results"] = results;
        j["deltas"] = deltas;
        j["verdict"] = pass ? "pass" : "fail";
        print_json(j);
    } else if (opt.format == "csv") {
        std::cout << "family,depth,argument,method,value,error_bound\n";
        for (const auto& row : rows) {
            std::cout << opt.family << "," << opt.depth << "," << fmt(s) << ","
                      << method_name(row.method) << "," << fmt(row.value) << ","
                      << (row.error_bound ? fmt(*row.error_bound) : "") << "\n";
        }
    } else {
        std::cout << family_name(fam) << "_" << opt.depth << "(" << fmt(s) << ")\n";
        for (const auto& row : rows) {
            std::cout << "  " << method_name(row.method) << " = " << fmt(row.value);
            if (row.error_bound) std::cout << "  (tail bound " << fmt(*row.error_bound) << ")";
            std::cout << "\n";
        }
        for (const auto& [key, value] : deltas.items())
            std::cout << "  " << key << " = " << fmt(value.get<double>()) << "\n";
        std::cout << "verdict: " << (pass ? "pass" : "fail") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_exact(const ExactOptions& opt) {
    const Family fam = parse_family(opt.family);
    const PiValue v = diagonal_closed_form_exact(fam, opt.depth, opt.arg);
    if (opt.format == "json") {
        json j;
        j["command"] = "exact";
        j["parameters"] = {{"family", opt.family}, {"depth", opt.depth}, {"argument", opt.arg}};
        json r;
        r["value"] = v.to_string();
        r["value_double"] = v.to_double();
        j["results"] = json::array({r});
        j["verdict"] = "pass";
        print_json(j);
    } else {
        std::cout << v.to_string() << "\n";
    }
    return 0;
}

void run_functional_relation(std::vector<IdentityReport>& out, const VerifyOptions& opt) {
    for (unsigned r = 1; r <= opt.max_depth; ++r) {
        for (long long s : {2LL, 4LL}) {
            out.push_back(functional_relation_exact(r, s, false));
            out.push_back(functional_relation_exact(r, s, true));
        }
        for (double s : {2.5, 3.0, 3.7}) {
            out.push_back(functional_relation_numeric(r, s, false, opt.tolerance));
            out.push_back(functional_relation_numeric(r, s, true, opt.tolerance));
        }
    }
    out.push_back(misindexed_star_relation_exact(2, 2));
}

void run_merca(std::vector<IdentityReport>& out, const VerifyOptions& opt) {
    for (unsigned k = 1; k <= opt.max_k; ++k) {
        const PiValue reference = zeta_exact_even(k);
        for (int form = 1; form <= 2; ++form) {
            IdentityReport rep;
            rep.id = form == 1 ? "merca_first_form" : "merca_second_form";
            rep.params = {{"k", std::to_string(k)}};
            const PiValue v = form == 1 ? merca_form_first(k) : merca_form_second(k);
            rep.lhs = v.to_string();
            rep.rhs = reference.to_string();
            rep.pass = v == reference;
            out.push_back(rep);
        }
    }
}

void run_harmonic(std::vector<IdentityReport>& out, const VerifyOptions& opt) {
    for (double s : {2.0, 2.7, 3.0}) {
        out.push_back(harmonic_product_check(s, false, opt.tolerance));
        out.push_back(harmonic_product_check(s, true, opt.tolerance));
    }
}

void run_three_way(std::vector<IdentityReport>& out, const VerifyOptions& opt) {
    for (Family fam : {Family::Zeta, Family::ZetaStar, Family::T, Family::TStar}) {
        for (unsigned r = 1; r <= opt.max_depth; ++r) {
            for (double s : {2.0, 2.5, 3.0, 4.0}) {
                const double closed = diagonal_closed_form(fam, r, s);
                const double rec = diagonal_recurrence(fam, r, s);
                const auto oracle = diagonal_oracle(fam, r, s, OracleConfig{opt.oracle_n});

                IdentityReport rep;
                rep.id = "three_way_agreement";
                rep.params = {{"family", std::string(family_name(fam))},
                              {"r", std::to_string(r)},
                              {"s", fmt(s)},
                              {"oracle_n", std::to_string(opt.oracle_n)}};
                rep.lhs = fmt(closed);
                rep.rhs = fmt(oracle.value);
                const double rec_delta = std::abs(closed - rec);
                const double oracle_delta = std::abs(closed - oracle.value);
                rep.residual = std::max(rec_delta, oracle_delta);
                rep.pass = rec_delta <= opt.tolerance &&
                           oracle_delta <= std::max(oracle.tail_bound, 1e-6);
                rep.note = "recurrence delta " + fmt(rec_delta) + ", oracle delta " +
                           fmt(oracle_delta) + ", oracle bound " + fmt(oracle.tail_bound);
                out.push_back(rep);
            }
        }
    }
}

void run_special_values(std::vector<IdentityReport>& out, const VerifyOptions& opt) {
    const unsigned rmax_two = std::max(opt.max_depth, 8u);
    for (Family fam : {Family::Zeta, Family::ZetaStar, Family::T, Family::TStar}) {
        for (unsigned r = 1; r <= rmax_two; ++r) {
            IdentityReport rep;
            rep.id = "value_at_two";
            rep.params = {{"family", std::string(family_name(fam))}, {"r", std::to_string(r)}};
            const PiValue formula = value_at_two(fam, r);
            const PiValue closed = diagonal_closed_form_exact(fam, r, 2);
            rep.lhs = formula.to_string();
            rep.rhs = closed.to_string();
            rep.pass = formula == closed;
            out.push_back(rep);
        }
    }
    for (Family fam : {Family::Zeta, Family::ZetaStar}) {
        for (unsigned r = 1; r <= opt.max_depth; ++r) {
            for (unsigned k = 1; k <= 3; ++k) {
                IdentityReport rep;
                rep.id = "value_at_even";
                rep.params = {{"family", std::string(family_name(fam))},
                              {"r", std::to_string(r)},
                              {"k", std::to_string(k)}};
                const PiValue formula = value_at_even(fam, r, k);
                const PiValue closed = diagonal_closed_form_exact(fam, r, 2 * k);
                rep.lhs = formula.to_string();
                rep.rhs = closed.to_string();
                rep.pass = formula == closed;
                out.push_back(rep);
            }
        }
    }
    for (Family fam : {Family::Zeta, Family::ZetaStar, Family::T, Family::TStar}) {
        for (unsigned r = 1; r <= 20; ++r) {
            IdentityReport rep;
            rep.id = "value_at_zero";
            rep.params = {{"family", std::string(family_name(fam))}, {"r", std::to_string(r)}};
            const Rational formula = value_at_zero(fam, r);
            const PiValue closed = diagonal_closed_form_exact(fam, r, 0);
            rep.lhs = formula.to_string();
            rep.rhs = closed.to_string();
            rep.pass = closed.is_rational() && closed.rational_part() == formula;
            out.push_back(rep);
        }
    }
    for (Family fam : {Family::Zeta, Family::ZetaStar, Family::T, Family::TStar})
        for (unsigned r = 1; r <= opt.max_depth; ++r)
            for (unsigned k = 1; k <= 3; ++k) out.push_back(vanishing_at_negative_even(fam, r, k));
}

int cmd_verify(const VerifyOptions& opt) {
    std::vector<IdentityReport> reports;
    bool known = false;
    if (opt.suite == "functional-relation" || opt.suite == "all") {
        run_functional_relation(reports, opt);
        known = true;
    }
    if (opt.suite == "merca" || opt.suite == "all") {
        run_merca(reports, opt);
        known = true;
    }
    if (opt.suite == "harmonic" || opt.suite == "all") {
        run_harmonic(reports, opt);
        known = true;
    }
    if (opt.suite == "three-way" || opt.suite == "all") {
        run_three_way(reports, opt);
        known = true;
    }
    if (opt.suite == "special-values" || opt.suite == "all") {
        run_special_values(reports, opt);
        known = true;
    }
    if (!known) throw std::domain_error("unknown suite '" + opt.suite + "'");

    unsigned failed = 0;
    for (const auto& r : reports)
        if (!r.pass && !r.informational) ++failed;

    if (opt.format == "json") {
        json j;
        j["command"] = "verify";
        j["parameters"] = {{"suite", opt.suite},
                           {"max_depth", opt.max_depth},
                           {"max_k", opt.max_k},
                           {"oracle_n", opt.oracle_n},
                           {"tolerance", opt.tolerance}};
        json results = json::array();
        for (const auto& r : reports) results.push_back(report_to_json(r));
        j["results"] = results;
        j["verdict"] = failed == 0 ? "pass" : "fail";
        print_json(j);
    } else if (opt.format == "csv") {
        std::cout << "id,params,lhs,rhs,residual,pass,informational\n";
        for (const auto& r : reports) {
            std::string params;
            for (const auto& [k, v] : r.params) {
                if (!params.empty()) params += " ";
                params += k + "=" + v;
            }
            std::cout << r.id << "," << params << ",\"" << r.lhs << "\",\"" << r.rhs << "\","
                      << fmt(r.residual) << "," << (r.pass ? "true" : "false") << ","
                      << (r.informational ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "[pass] " : (r.informational ? "[info] " : "[FAIL] ")) << r.id;
            for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
            if (r.residual != 0.0) std::cout << " residual=" << fmt(r.residual);
            if (!r.pass) std::cout << " lhs=" << r.lhs << " rhs=" << r.rhs;
            std::cout << "\n";
        }
        std::cout << reports.size() << " checks, " << failed << " failures\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_poles(const PolesOptions& opt) {
    if (opt.depth == 0) throw std::domain_error("poles: require depth >= 1");
    const std::vector<double> ladder(std::begin(kLaurentEpsilons), std::end(kLaurentEpsilons));

    bool all_pass = true;
    std::vector<LaurentReport> reports;
    std::vector<bool> certificates;
    for (unsigned k = 1; k <= opt.depth; ++k) {
        reports.push_back(laurent_numeric_check(opt.depth, k, ladder));
        certificates.push_back(nonvanishing_certificate(opt.depth, k));
        if (!reports.back().pass || !certificates.back()) all_pass = false;
    }

    if (opt.format == "json") {
        json j;
        j["command"] = "poles";
        j["parameters"] = {{"depth", opt.depth}};
        json results = json::array();
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            json row;
            row["k"] = rep.pole.k;
            row["location"] = 1.0 / rep.pole.k;
            row["order"] = rep.pole.order;
            row["remainder"] = rep.pole.remainder;
            row["leading_coefficient"] = rep.leading_closed_form;
            row["estimate"] = rep.estimates.back().second;
            row["relative_gap"] = rep.final_rel_gap;
            row["tolerance"] = rep.tolerance;
            row["nonvanishing"] = static_cast<bool>(certificates[i]);
            row["pass"] = rep.pass;
            results.push_back(row);
        }
        j["results"] = results;
        j["verdict"] = all_pass ? "pass" : "fail";
        print_json(j);
    } else if (opt.format == "csv") {
        std::cout << "k,location,order,remainder,leading_coefficient,estimate,relative_gap,"
                     "nonvanishing,pass\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            std::cout << rep.pole.k << "," << fmt(1.0 / rep.pole.k) << "," << rep.pole.order << ","
                      << rep.pole.remainder << "," << fmt(rep.leading_closed_form) << ","
                      << fmt(rep.estimates.back().second) << "," << fmt(rep.final_rel_gap) << ","
                      << (certificates[i] ? "true" : "false") << ","
                      << (rep.pass ? "true" : "false") << "\n";
        }
    } else {
        std::cout << "poles of zeta_" << opt.depth << " on (0, 1]\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            std::cout << "  s = 1/" << rep.pole.k << "  order " << rep.pole.order
                      << "  coefficient " << fmt(rep.leading_closed_form) << "  estimate "
                      << fmt(rep.estimates.back().second) << "  rel gap "
                      << fmt(rep.final_rel_gap) << "  nonvanishing "
                      << (certificates[i] ? "yes" : "no") << "  "
                      << (rep.pass ? "pass" : "FAIL") << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_table(const TableOptions& opt) {
    const double s = parse_real(opt.arg);
    std::vector<Family> families;
    if (opt.family == "all")
        families = {Family::Zeta, Family::ZetaStar, Family::T, Family::TStar};
    else
        families = {parse_family(opt.family)};

    struct Row {
        Family fam;
        unsigned depth;
        Method method;
        double value;
        std::optional<double> bound;
    };
    std::vector<Row> rows;
    for (Family fam : families) {
        for (unsigned r = 0; r <= opt.max_depth; ++r) {
            rows.push_back({fam, r, Method::ClosedForm, diagonal_closed_form(fam, r, s), {}});
            rows.push_back({fam, r, Method::BellForm, diagonal_bell_form(fam, r, s), {}});
            rows.push_back({fam, r, Method::Recurrence, diagonal_recurrence(fam, r, s), {}});
            if (opt.oracle_n > 0) {
                const auto o = diagonal_oracle(fam, r, s, OracleConfig{opt.oracle_n});
                rows.push_back({fam, r, Method::Oracle, o.value, o.tail_bound});
            }
        }
    }

    if (opt.format == "json") {
        json j;
        j["command"] = "table";
        j["parameters"] = {{"family", opt.family},
                           {"max_depth", opt.max_depth},
                           {"argument", s},
                           {"oracle_n", opt.oracle_n}};
        json results = json::array();
        for (const auto& row : rows) {
            json r;
            r["family"] = std::string(family_name(row.fam));
            r["depth"] = row.depth;
            r["argument"] = s;
            r["method"] = std::string(method_name(row.method));
            r["value"] = row.value;
            if (row.bound) r["error_bound"] = *row.bound;
            results.push_back(r);
        }
        j["results"] = results;
        j["verdict"] = "pass";
        print_json(j);
    } else { // csv (and text falls back to csv for the tabulation)
        std::cout << "family,depth,argument,method,value,error_bound\n";
        for (const auto& row : rows) {
            std::cout << family_name(row.fam) << "," << row.depth << "," << fmt(s) << ","
                      << method_name(row.method) << "," << fmt(row.value) << ","
                      << (row.bound ? fmt(*row.bound) : "") << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal multiple zeta functions: evaluation and identity checks"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "numeric evaluation by every method");
    eval->add_option("--family", eval_opt.family, "zeta | zetastar | t | tstar");
    eval->add_option("--depth", eval_opt.depth, "depth r >= 0");
    eval->add_option("--arg", eval_opt.arg, "real argument s");
    eval->add_option("--oracle-n", eval_opt.oracle_n, "truncated-series oracle cutoff");
    eval->add_option("--tolerance", eval_opt.tolerance, "method-agreement tolerance");
    eval->add_option("--format", eval_opt.format, "text | json | csv");

    ExactOptions exact_opt;
    auto* exact = app.add_subcommand("exact", "exact value at an even, zero or negative integer");
    exact->add_option("--family", exact_opt.family, "zeta | zetastar | t | tstar");
    exact->add_option("--depth", exact_opt.depth, "depth r >= 0");
    exact->add_option("--arg", exact_opt.arg, "integer argument");
    exact->add_option("--format", exact_opt.format, "text | json");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", verify_opt.suite,
                       "functional-relation | merca | harmonic | three-way | special-values | all");
    verify->add_option("--max-depth", verify_opt.max_depth, "depth grid bound");
    verify->add_option("--max-k", verify_opt.max_k, "k grid bound (merca)");
    verify->add_option("--oracle-n", verify_opt.oracle_n, "oracle cutoff for three-way");
    verify->add_option("--tolerance", verify_opt.tolerance, "numeric tolerance");
    verify->add_option("--format", verify_opt.format, "text | json | csv");

    PolesOptions poles_opt;
    auto* poles = app.add_subcommand("poles", "pole table with numeric Laurent checks");
    poles->add_option("--depth", poles_opt.depth, "depth r >= 1");
    poles->add_option("--format", poles_opt.format, "text | json | csv");

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "tabulate values across depths and methods");
    table->add_option("--family", table_opt.family, "family or 'all'");
    table->add_option("--max-depth", table_opt.max_depth, "largest depth");
    table->add_option("--arg", table_opt.arg, "real argument s");
    table->add_option("--oracle-n", table_opt.oracle_n, "oracle cutoff (0 = skip)");
    table->add_option("--format", table_opt.format, "csv | json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_opt);
        if (exact->parsed()) return cmd_exact(exact_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (poles->parsed()) return cmd_poles(poles_opt);
        if (table->parsed()) return cmd_table(table_opt);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
