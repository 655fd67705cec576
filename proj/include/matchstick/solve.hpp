#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchstick/construct.hpp"
#include "matchstick/graphcheck.hpp"

namespace matchstick::solve {

class SolveError : public std::runtime_error {
public:
    enum class Kind { NoSignChange, MaxIterations, NoSolveDirective, NoClosingEdge, NoAssignmentFound };

    SolveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline constexpr double kResidualTol = 1e-12;
inline constexpr double kMinBracketWidth = 1e-13;
inline constexpr int kMaxIterations = 200;

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct RootResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    Bracket bracket;
    std::vector<Bracket> history;
};

/// Brent's method: bisection safeguarding inverse quadratic and secant
/// steps. Stops when |f| <= tol or the bracket is narrower than
/// kMinBracketWidth.
RootResult find_root(const std::function<double(double)>& f, Bracket bracket, double tol = kResidualTol,
                     int max_iterations = kMaxIterations);

struct SolveResult {
    std::string param_name;
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<Bracket> history;
    /// Sign changes seen when scanning the bracket before solving.
    int sign_changes = 0;
};

struct SweepSample {
    double param_value = 0.0;
    double closing_length = 0.0;
    double min_clearance = 0.0;
    bool crossings_found = false;
};

/// Closing length minus target with `param` set to `value` and every other
/// parameter at `base` (or its default).
double residual(const Construction& c, const std::string& param, double value, double target = 1.0,
                const ParamValues& base = {});
/// Residual for the construction's solve directive.
double residual(const Construction& c, double value);

SolveResult solve_param(const Construction& c, const std::string& param, Bracket bracket,
                        double target = 1.0, double tol = kResidualTol, const ParamValues& base = {});
/// Uses the construction's solve directive (parameter, target, bracket).
SolveResult solve_param(const Construction& c, std::optional<Bracket> bracket = std::nullopt,
                        double tol = kResidualTol);

/// Number of sign changes of the residual over `samples` uniform points.
int count_sign_changes(const Construction& c, const std::string& param, Bracket range, double target = 1.0,
                       const ParamValues& base = {}, int samples = 201);
int count_sign_changes(const Construction& c, Bracket range, int samples = 201);

std::vector<SweepSample> sweep(const Construction& c, const std::string& param, Bracket range, int steps,
                               const ParamValues& base = {});
std::vector<SweepSample> sweep(const Construction& c, Bracket range, int steps);

/// Solves the directive parameter and executes at the root.
Embedding execute_at_solved(const Construction& c, SolveResult* result = nullptr);

// ---------------------------------------------------------------------------
// Orientation calibration
// ---------------------------------------------------------------------------

struct CalibrationOptions {
    /// Minimum allowed distance between a new vertex and any other vertex.
    double coincidence_floor = 1e-3;
    /// When set, a full assignment must pass verify at the solved parameter.
    bool require_verify = true;
    graphcheck::VerifyConfig verify_config;
    /// When set, the solved parameter must match this value.
    std::optional<double> expected_value;
    double expected_tol = 1e-6;
};

/// One sign per AngleEdge/Apex step, in step order.
using SignVector = std::vector<Turn>;

/// Depth-first search over the unresolved orientation signs of
/// `skeleton`. Steps that already carry a sign are kept as given. A
/// prefix is pruned as soon as its partial drawing has a crossing or
/// contact, a vertex closer than coincidence_floor to another, or an
/// infeasible apex. Returns every accepted assignment; throws
/// NoAssignmentFound when there is none.
std::vector<SignVector> calibrate_orientations(const Construction& skeleton, const CalibrationOptions& opts = {});

/// Copy of `c` with the given signs written into its oriented steps.
Construction with_signs(const Construction& c, const SignVector& signs);

}  // namespace matchstick::solve
