#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamecalc/estimates.hpp"
#include "tamecalc/verify.hpp"

namespace tamecalc::scenario {

// Field families with analytically known norms:
//   gaussian      amplitude * exp(-|x - center|^2 / (2 width^2)) * e^{i phase.x}
//   bessel_kernel spectrum (1 + |k|^2)^{-order}, the near-extremal trial field
//   zero
struct FieldSpec {
    std::string family = "gaussian";
    double amplitude = 1.0;
    double width = 1.0;
    std::vector<double> center;  // defaults to the origin
    std::vector<double> phase;   // modulation wavevector, defaults to zero
    double bessel_order = 1.0;
};

struct Scenario {
    gmodel::GModel model;
    spectral::GridSpec grid;
    FieldSpec field;
    int n = 1;
    int a = 1;
    std::vector<std::string> checks;
    double tolerance = 1e-6;
    bool freeze_u = false;
    bool weak = false;
    // Multiplies every certified LHS; a negative-control fixture for testing
    // the failure path, 1.0 in normal use.
    double lhs_scale = 1.0;
    std::optional<double> explicit_norm_a, explicit_norm_n, explicit_norm_l2;

    static Scenario from_json(const nlohmann::json& doc);
    static Scenario from_file(const std::string& path);
};

spectral::GridField build_field(const FieldSpec& field, const spectral::GridSpec& grid);

// Runs the scenario's selected checks against its field.
struct VerifyRun {
    std::vector<spectral::CheckRecord> records;
    bool all_pass = false;
    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;  // name,lhs,rhs,ratio,pass with sub-checks flattened
};
VerifyRun run_checks(const Scenario& scenario);

// Bound report from explicit norms when given, else from the field.
estimates::BoundReport run_bound(const Scenario& scenario);

}  // namespace tamecalc::scenario
