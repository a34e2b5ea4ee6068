#pragma once

#include <algorithm>
#include <cmath>

namespace roap {

// Tolerance-aware comparisons. The case analysis branches on strict
// inequalities, so every sweep and filter goes through one Cmp so that
// float mode and exact-integer mode behave consistently.
struct Cmp {
    double rel = 1e-9;
    double abs = 1e-12;
    bool exact = false;

    static Cmp standard() { return Cmp{}; }
    static Cmp exact_int() { return Cmp{0.0, 0.0, true}; }
    static Cmp with_epsilon(double eps) { return Cmp{eps, eps * 1e-3, false}; }

    double tol(double a, double b) const {
        if (exact) return 0.0;
        return std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
    }
    bool eq(double a, double b) const { return std::fabs(a - b) <= tol(a, b); }
    bool lt(double a, double b) const { return a < b - tol(a, b); }
    bool gt(double a, double b) const { return a > b + tol(a, b); }
    bool le(double a, double b) const { return !gt(a, b); }
    bool ge(double a, double b) const { return !lt(a, b); }
};

} // namespace roap
