#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "matchstick/solve.hpp"

namespace matchstick::solve {

RootResult find_root(const std::function<double(double)>& f, Bracket bracket, double tol, int max_iterations) {
    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);

    RootResult r;
    r.history.push_back({a, b});
    if (fa == 0.0 || fb == 0.0) {
        const bool at_a = fa == 0.0;
        r.value = at_a ? a : b;
        r.residual = 0.0;
        r.bracket = {a, b};
        return r;
    }
    if ((fa > 0.0) == (fb > 0.0)) {
        throw SolveError(SolveError::Kind::NoSignChange,
                         fmt::format("no sign change on [{}, {}]: f = {:.6g}, {:.6g}", a, b, fa, fb));
    }

    // b is the best estimate, a the previous one, c the counterpoint.
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    bool bisected = true;

    for (int it = 1; it <= max_iterations; ++it) {
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }

        const double lo = std::min((3.0 * a + b) / 4.0, b);
        const double hi = std::max((3.0 * a + b) / 4.0, b);
        const bool reject = s < lo || s > hi || (bisected && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                            (!bisected && std::abs(s - b) >= std::abs(c - d) / 2.0) ||
                            (bisected && std::abs(b - c) < kMinBracketWidth) ||
                            (!bisected && std::abs(c - d) < kMinBracketWidth);
        if (reject) {
            s = 0.5 * (a + b);
            bisected = true;
        } else {
            bisected = false;
        }

        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if ((fa > 0.0) != (fs > 0.0)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
        r.history.push_back({std::min(a, b), std::max(a, b)});

        if (std::abs(fb) <= tol || std::abs(b - a) <= kMinBracketWidth || fb == 0.0) {
            r.value = b;
            r.residual = fb;
            r.iterations = it;
            r.bracket = {std::min(a, b), std::max(a, b)};
            return r;
        }
    }
    throw SolveError(SolveError::Kind::MaxIterations,
                     fmt::format("root finder did not converge in {} iterations (|f| = {:.3e})", max_iterations,
                                 std::abs(fb)));
}

namespace {

const SolveDirective& directive(const Construction& c) {
    const SolveDirective* d = c.solve_directive();
    if (d == nullptr) throw SolveError(SolveError::Kind::NoSolveDirective, "construction has no solve directive");
    return *d;
}

double closing_length(const Embedding& e) {
    const Edge* edge = e.closing_edge();
    if (edge == nullptr) throw SolveError(SolveError::Kind::NoClosingEdge, "construction has no closing edge");
    return geom::distance(e.at(edge->a), e.at(edge->b));
}

ParamValues with_value(ParamValues base, const std::string& param, double value) {
    base[param] = value;
    return base;
}

}  // namespace

double residual(const Construction& c, const std::string& param, double value, double target,
                const ParamValues& base) {
    return closing_length(execute(c, with_value(base, param, value))) - target;
}

double residual(const Construction& c, double value) {
    const SolveDirective& d = directive(c);
    return residual(c, d.parameter, value, d.target);
}

SolveResult solve_param(const Construction& c, const std::string& param, Bracket bracket, double target,
                        double tol, const ParamValues& base) {
    auto f = [&](double v) { return residual(c, param, v, target, base); };
    const RootResult root = find_root(f, bracket, tol);
    SolveResult out;
    out.param_name = param;
    out.value = root.value;
    out.residual = root.residual;
    out.iterations = root.iterations;
    out.bracket_lo = root.bracket.lo;
    out.bracket_hi = root.bracket.hi;
    out.history = root.history;
    out.sign_changes = count_sign_changes(c, param, bracket, target, base);
    return out;
}

SolveResult solve_param(const Construction& c, std::optional<Bracket> bracket, double tol) {
    const SolveDirective& d = directive(c);
    const Bracket b = bracket.value_or(Bracket{d.lo, d.hi});
    return solve_param(c, d.parameter, b, d.target, tol);
}

int count_sign_changes(const Construction& c, const std::string& param, Bracket range, double target,
                       const ParamValues& base, int samples) {
    int changes = 0;
    double prev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = i == samples - 1 ? range.hi : range.lo + (range.hi - range.lo) * i / (samples - 1);
        const double r = residual(c, param, t, target, base);
        if (i > 0 && ((prev > 0.0) != (r > 0.0))) ++changes;
        prev = r;
    }
    return changes;
}

int count_sign_changes(const Construction& c, Bracket range, int samples) {
    const SolveDirective& d = directive(c);
    return count_sign_changes(c, d.parameter, range, d.target, {}, samples);
}

std::vector<SweepSample> sweep(const Construction& c, const std::string& param, Bracket range, int steps,
                               const ParamValues& base) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    std::vector<SweepSample> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        // Endpoints are hit exactly.
        const double t = i == steps - 1 ? range.hi : range.lo + (range.hi - range.lo) * i / (steps - 1);
        const Embedding e = execute(c, with_value(base, param, t));
        const auto crossings = graphcheck::crossing_report(e);
        out.push_back({t, closing_length(e), crossings.min_clearance, !crossings.crossings.empty()});
    }
    return out;
}

std::vector<SweepSample> sweep(const Construction& c, Bracket range, int steps) {
    return sweep(c, directive(c).parameter, range, steps);
}

Embedding execute_at_solved(const Construction& c, SolveResult* result) {
    SolveResult r = solve_param(c);
    Embedding e = execute(c, {{r.param_name, r.value}});
    if (result != nullptr) *result = std::move(r);
    return e;
}

}  // namespace matchstick::solve
