// tamecalc: prints universal-polynomial tables, evaluates the explicit
// constants, computes composition bounds from scenario files, and runs the
// inequality verification battery.
//
// Exit codes: 0 success / all checks pass, 1 failed certification,
// 2 usage or parse error, 3 ball-condition violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tamecalc/combinatorics.hpp"
#include "tamecalc/constants.hpp"
#include "tamecalc/errors.hpp"
#include "tamecalc/estimates.hpp"
#include "tamecalc/scenario.hpp"

namespace {

namespace comb = tamecalc::combinatorics;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string poly_text(const comb::PmPolynomial& poly) {
    // Highest rho power first, grouping variables per power:
    // "nu30 rho^3 + (3 nu20 + 3 nu21) rho^2 + ..."
    const int m = poly.order();
    std::string out;
    for (int j = m; j >= 1; --j) {
        std::vector<std::string> terms;
        for (int l = 0; l <= m - j; ++l) {
            const auto& c = poly.coeff(j, l);
            std::string t;
            if (c != 1) t += c.str() + " ";
            t += "nu" + std::to_string(j) + std::to_string(l);
            terms.push_back(t);
        }
        if (!out.empty()) out += " + ";
        std::string group;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) group += " + ";
            group += terms[i];
        }
        if (terms.size() > 1) group = "(" + group + ")";
        out += group;
        out += (j == 1) ? " rho" : " rho^" + std::to_string(j);
    }
    return out;
}

std::string poly_latex(const comb::PmPolynomial& poly) {
    const int m = poly.order();
    std::string out = "P_{" + std::to_string(m) + "} = ";
    bool first = true;
    for (int j = m; j >= 1; --j) {
        std::vector<std::string> terms;
        for (int l = 0; l <= m - j; ++l) {
            const auto& c = poly.coeff(j, l);
            std::string t;
            if (c != 1) t += c.str() + " ";
            t += "\\nu_{" + std::to_string(j) + " " + std::to_string(l) + "}";
            terms.push_back(t);
        }
        if (!first) out += " + ";
        first = false;
        std::string group;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) group += " + ";
            group += terms[i];
        }
        if (terms.size() > 1) group = "(" + group + ")";
        out += group + " \\rho";
        if (j > 1) out += "^{" + std::to_string(j) + "}";
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantitative composition-operator bounds in Sobolev spaces"};
    app.require_subcommand(1);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "print a universal polynomial table");
    int poly_m = 1;
    std::string poly_format = "text";
    std::string poly_output;
    poly_cmd->add_option("m", poly_m, "polynomial order (1..12)")->required();
    poly_cmd->add_option("--format", poly_format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    poly_cmd->add_option("--output", poly_output, "write to file instead of stdout");

    // constants
    auto* const_cmd = app.add_subcommand("constants", "evaluate an explicit constant");
    std::string which;
    std::vector<std::string> const_args;
    std::string const_format = "json";
    const_cmd->add_option("which", which, "S|E|U|C")->required();
    const_cmd->add_option("params", const_args, "S a d | E s | U m j d | C r|inf d");
    const_cmd->add_option("--format", const_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "composition bound report from a scenario");
    std::string bound_scenario;
    std::string bound_output;
    bool bound_weak = false, bound_freeze_u = false;
    bound_cmd->add_option("scenario", bound_scenario, "scenario JSON file")->required();
    bound_cmd->add_flag("--weak", bound_weak, "report the single-coefficient form");
    bound_cmd->add_flag("--freeze-u", bound_freeze_u, "replace every U constant by 1");
    bound_cmd->add_option("--output", bound_output, "write to file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the scenario's verification checks");
    std::string verify_scenario;
    std::string verify_output;
    double verify_tolerance = -1.0;
    verify_cmd->add_option("scenario", verify_scenario, "scenario JSON file")->required();
    verify_cmd->add_option("--tolerance", verify_tolerance, "override the scenario tolerance");
    verify_cmd->add_option("--output", verify_output,
                           "output prefix; writes <prefix>.json and <prefix>.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (poly_cmd->parsed()) {
            if (poly_m < 1 || poly_m > 12) {
                std::cerr << "poly: m must be in 1..12\n";
                return 2;
            }
            const auto poly = comb::PmPolynomial::build(poly_m);
            if (poly_format == "json") write_output(poly.to_json().dump(2), poly_output);
            else if (poly_format == "latex") write_output(poly_latex(poly), poly_output);
            else write_output(poly_text(poly), poly_output);
            return 0;
        }

        if (const_cmd->parsed()) {
            namespace constants = tamecalc::constants;
            double value = 0.0;
            nlohmann::ordered_json out;
            if (which == "S") {
                if (const_args.size() != 2) throw tamecalc::ParseError("constants S needs: a d");
                const int a = std::stoi(const_args[0]);
                const int d = std::stoi(const_args[1]);
                value = constants::embedding_constant({a, d});
                out = {{"constant", "S"}, {"a", a}, {"d", d}};
            } else if (which == "E") {
                if (const_args.size() != 1) throw tamecalc::ParseError("constants E needs: s");
                const double s = std::stod(const_args[0]);
                value = constants::func_E(s);
                out = {{"constant", "E"}, {"s", s}};
            } else if (which == "U") {
                if (const_args.size() != 3)
                    throw tamecalc::ParseError("constants U needs: m j d");
                const int m = std::stoi(const_args[0]);
                const int j = std::stoi(const_args[1]);
                const int d = std::stoi(const_args[2]);
                value = constants::adams_frazier_U(m, j, d);
                out = {{"constant", "U"}, {"m", m}, {"j", j}, {"d", d}};
            } else if (which == "C") {
                if (const_args.size() != 2)
                    throw tamecalc::ParseError("constants C needs: r|inf d");
                const auto r = (const_args[0] == "inf")
                                   ? tamecalc::Exponent::infinity()
                                   : tamecalc::Exponent::finite(std::stod(const_args[0]));
                const int d = std::stoi(const_args[1]);
                value = constants::hausdorff_young_C(r, d);
                out = {{"constant", "C"}, {"r", const_args[0]}, {"d", d}};
            } else {
                std::cerr << "constants: unknown constant \"" << which << "\" (use S|E|U|C)\n";
                return 2;
            }
            if (const_format == "text") {
                std::cout << fmt17(value) << "\n";
            } else {
                out["value"] = value;
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }

        if (bound_cmd->parsed()) {
            auto scenario = tamecalc::scenario::Scenario::from_file(bound_scenario);
            scenario.freeze_u = scenario.freeze_u || bound_freeze_u;
            scenario.weak = scenario.weak || bound_weak;
            const auto report = tamecalc::scenario::run_bound(scenario);
            nlohmann::ordered_json out = report.to_json();
            if (scenario.weak) {
                out["form"] = "weak";
                out["coefficient"] = report.upsilon;
            }
            write_output(out.dump(2), bound_output);
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto scenario = tamecalc::scenario::Scenario::from_file(verify_scenario);
            if (verify_tolerance > 0.0) scenario.tolerance = verify_tolerance;
            const auto run = tamecalc::scenario::run_checks(scenario);
            if (verify_output.empty()) {
                std::cout << run.to_json().dump(2) << "\n";
                std::cout << run.to_csv();
            } else {
                write_output(run.to_json().dump(2), verify_output + ".json");
                write_output(run.to_csv(), verify_output + ".csv");
            }
            if (!run.all_pass) {
                for (const auto& rec : run.records)
                    if (!rec.all_pass())
                        std::cerr << "FAILED: " << rec.name << " (ratio " << fmt17(rec.ratio)
                                  << ")\n";
                return 1;
            }
            return 0;
        }
    } catch (const tamecalc::BallViolation& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const tamecalc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
