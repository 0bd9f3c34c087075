#include "tamecalc/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>

#include "tamecalc/errors.hpp"

namespace tamecalc::scenario {

namespace {

using nlohmann::json;

FieldSpec parse_field(const json& doc, int d) {
    FieldSpec field;
    if (!doc.is_object()) throw ParseError("field: expected an object");
    field.family = doc.value("family", std::string("gaussian"));
    if (field.family != "gaussian" && field.family != "bessel_kernel" && field.family != "zero")
        throw ParseError("field: unknown family \"" + field.family + "\"");
    field.amplitude = doc.value("amplitude", 1.0);
    field.width = doc.value("width", 1.0);
    if (!(field.width > 0.0)) throw ParseError("field: width must be positive");
    field.center = doc.value("center", std::vector<double>(d, 0.0));
    field.phase = doc.value("phase", std::vector<double>(d, 0.0));
    if (static_cast<int>(field.center.size()) != d || static_cast<int>(field.phase.size()) != d)
        throw ParseError("field: center/phase must have d entries");
    field.bessel_order = doc.value("bessel_order", 1.0);
    return field;
}

void append_csv_rows(std::string& out, const spectral::CheckRecord& rec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g,%s\n", rec.name.c_str(), rec.lhs,
                  rec.rhs, rec.ratio, rec.pass ? "true" : "false");
    out += buf;
    for (const auto& sub : rec.details) append_csv_rows(out, sub);
}

void scale_lhs(spectral::CheckRecord& rec, double factor, double tol) {
    rec.lhs *= factor;
    rec.ratio = rec.rhs > 0.0 ? rec.lhs / rec.rhs
                              : (rec.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    rec.pass = rec.lhs <= rec.rhs * (1.0 + tol);
    for (auto& sub : rec.details) scale_lhs(sub, factor, tol);
}

}  // namespace

Scenario Scenario::from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("scenario: expected a JSON object");
    if (!doc.contains("model")) throw ParseError("scenario: missing \"model\" block");
    if (!doc.contains("grid")) throw ParseError("scenario: missing \"grid\" block");

    const json& grid_doc = doc.at("grid");
    int d, n_axis;
    double length;
    try {
        d = grid_doc.at("d").get<int>();
        n_axis = grid_doc.at("N").get<int>();
        length = grid_doc.at("L").get<double>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }

    try {
        Scenario s{.model = gmodel::GModel::from_json(doc.at("model")),
                   .grid = spectral::GridSpec(d, n_axis, length)};
        if (doc.contains("field")) {
            s.field = parse_field(doc.at("field"), d);
        } else {
            s.field.center.assign(d, 0.0);
            s.field.phase.assign(d, 0.0);
        }

        if (doc.contains("bound")) {
            s.n = doc.at("bound").value("n", 1);
            s.a = doc.at("bound").value("a", 1);
        }
        if (2 * s.a <= d) throw ParseError("scenario: requires a > d/2");
        if (s.n < 0) throw ParseError("scenario: n must be >= 0");

        s.checks = doc.value("checks", std::vector<std::string>{});
        s.tolerance = doc.value("tolerance", 1e-6);
        if (!(s.tolerance > 0.0)) throw ParseError("scenario: tolerance must be positive");
        s.freeze_u = doc.value("freeze_u", false);
        s.weak = doc.value("weak", false);
        s.lhs_scale = doc.value("lhs_scale", 1.0);

        if (doc.contains("norms")) {
            const json& norms = doc.at("norms");
            s.explicit_norm_a = norms.at("a").get<double>();
            s.explicit_norm_n = norms.at("n").get<double>();
            s.explicit_norm_l2 = norms.at("l2").get<double>();
        }

        if (const auto* sl = std::get_if<gmodel::SeparableLinear>(&s.model.kind());
            sl && sl->dim != d)
            throw ParseError("scenario: separable_linear model dimension must match the grid");
        return s;
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("scenario: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario: invalid JSON: ") + e.what());
    }
    return from_json(doc);
}

spectral::GridField build_field(const FieldSpec& field, const spectral::GridSpec& grid) {
    using spectral::Complex;
    using spectral::GridField;
    if (field.family == "zero") return GridField::zero(grid);
    if (field.family == "gaussian") {
        const double amp = field.amplitude;
        const double inv2w2 = 1.0 / (2.0 * field.width * field.width);
        return GridField::from_function(grid, [&](std::span<const double> x) -> Complex {
            double r2 = 0.0, ph = 0.0;
            for (int i = 0; i < grid.d; ++i) {
                const double dx = x[i] - field.center[i];
                r2 += dx * dx;
                ph += field.phase[i] * x[i];
            }
            return amp * std::exp(-r2 * inv2w2) * Complex{std::cos(ph), std::sin(ph)};
        });
    }
    // bessel_kernel
    const double amp = field.amplitude;
    const double order = field.bessel_order;
    return GridField::from_spectrum(grid, [&](std::span<const double> k) -> Complex {
        double k2 = 0.0;
        for (int i = 0; i < grid.d; ++i) k2 += k[i] * k[i];
        return {amp * std::pow(1.0 + k2, -order), 0.0};
    });
}

VerifyRun run_checks(const Scenario& scenario) {
    using spectral::CheckRecord;
    const spectral::GridField f = build_field(scenario.field, scenario.grid);
    const double tol = scenario.tolerance;
    const int max_order = 4;

    VerifyRun run;
    for (const std::string& name : scenario.checks) {
        if (name == "tame") {
            run.records.push_back(
                spectral::verify_tame(scenario.model, f, scenario.n, scenario.a, tol,
                                      scenario.freeze_u));
        } else if (name == "embedding") {
            run.records.push_back(spectral::verify_embedding(f, scenario.a, tol));
        } else if (name == "interpolation") {
            for (int m = 1; m <= max_order; ++m)
                for (int l = 0; l <= m; ++l)
                    run.records.push_back(spectral::verify_interpolation(f, l, m, tol));
        } else if (name == "gagliardo") {
            for (int m = 1; m <= max_order; ++m)
                for (int l = 0; l <= m; ++l)
                    run.records.push_back(spectral::verify_gagliardo(f, l, m, scenario.a, tol));
        } else if (name == "adams_frazier") {
            const std::vector<std::pair<std::vector<int>, std::vector<int>>> tuples = {
                {{1}, {}},     {{1, 1}, {}},    {{1}, {1}},  {{2, 1}, {}},
                {{1}, {2}},    {{1, 1}, {1}},   {{2}, {2}},  {{2, 1, 1}, {}},
                {{1, 1}, {2}},
            };
            for (const auto& [orders, conj_orders] : tuples)
                run.records.push_back(
                    spectral::verify_adams_frazier(f, orders, conj_orders, scenario.a, tol));
        } else if (name == "faadibruno") {
            for (int m = 1; m <= std::min(max_order, 4); ++m)
                run.records.push_back(spectral::verify_faadibruno(scenario.model, f, m));
        } else {
            throw ParseError("verify: unknown check name \"" + name + "\"");
        }
    }
    if (scenario.lhs_scale != 1.0)
        for (auto& rec : run.records) scale_lhs(rec, scenario.lhs_scale, tol);

    run.all_pass = true;
    for (const auto& rec : run.records)
        if (!rec.all_pass()) run.all_pass = false;
    return run;
}

estimates::BoundReport run_bound(const Scenario& scenario) {
    double norm_a, norm_n, norm_l2;
    if (scenario.explicit_norm_a) {
        norm_a = *scenario.explicit_norm_a;
        norm_n = *scenario.explicit_norm_n;
        norm_l2 = *scenario.explicit_norm_l2;
    } else {
        const spectral::GridField f = build_field(scenario.field, scenario.grid);
        norm_a = spectral::sobolev_norm(f, scenario.a);
        norm_n = spectral::sobolev_norm(f, scenario.n);
        norm_l2 = spectral::lp_norm(f, Exponent::finite(2.0));
    }
    return estimates::tame_bound(scenario.model, scenario.n, scenario.a, scenario.grid.d,
                                 norm_a, norm_n, norm_l2, scenario.freeze_u);
}

nlohmann::ordered_json VerifyRun::to_json() const {
    nlohmann::ordered_json out;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) arr.push_back(rec.to_json());
    out["checks"] = std::move(arr);
    out["all_pass"] = all_pass;
    return out;
}

std::string VerifyRun::to_csv() const {
    std::string out = "name,lhs,rhs,ratio,pass\n";
    for (const auto& rec : records) append_csv_rows(out, rec);
    return out;
}

}  // namespace tamecalc::scenario
