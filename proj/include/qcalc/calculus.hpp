#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "qcalc/context.hpp"

namespace qcalc {

/// Opaque integrand. Must be evaluable at every lattice point the integral
/// visits ({a q^n} or {q^n / A}) and side-effect-free.
using RealFunction = std::function<Value(const Value&)>;

struct IntegralResult {
    Value value;
    int terms_used = 0;
    /// Magnitude of the first discarded term on the x -> 0 side.
    double lower_tail_est = 0.0;
    /// Magnitude of the first discarded term on the x -> infinity side
    /// (improper integrals only).
    double upper_tail_est = 0.0;
    /// The scale the improper lattice was built on; the value may depend on it.
    std::optional<double> A;
    /// Set when retained terms failed the decay heuristic.
    bool diverged = false;
    /// Set when a geometric tail completion was folded into the value.
    bool tail_corrected = false;
};

/// (D_q f)(x) = (f(qx) - f(x)) / ((q - 1) x). DomainError at x = 0.
Value q_derivative(const QContext& ctx, const RealFunction& f, const Value& x);

/// Jackson definite integral: (1-q) sum_{n>=0} q^n a f(q^n a), a > 0.
/// Caller asserts |f| < C x^alpha (alpha > -1) near 0; non-decaying terms set
/// the diverged flag.
IntegralResult jackson_integral(const QContext& ctx, const RealFunction& f, const Value& a);

/// Jackson integral over [a, b]: integral to b minus integral to a.
Value jackson_interval(const QContext& ctx, const RealFunction& f, const Value& a,
                       const Value& b);

/// Improper integral on the bilateral lattice {q^n / A, n in Z}, window
/// |n| <= W from the policy. In Float mode each tail is completed with the
/// exact sum of its trailing geometric series (on the q-lattice the term
/// ratios are constant up to O(x_edge), so the completion is accurate to
/// machine precision); ExactRational mode keeps the bare windowed sum.
IntegralResult jackson_improper(const QContext& ctx, const RealFunction& f, const Value& A);

/// Integral from 1/A to infinity/A: the n < 0 half of the bilateral lattice,
/// with the same upper tail completion.
IntegralResult jackson_improper_above(const QContext& ctx, const RealFunction& f,
                                      const Value& A);

/// Both sides of the reciprocity relation
///   int_0^{infty/A} f(x) d_qx = int_0^{infty A} x^{-2} f(1/x) d_qx ;
/// equal up to truncation tails (term-by-term under n -> -n).
struct ReciprocityPair {
    IntegralResult direct;
    IntegralResult transformed;
};
ReciprocityPair reciprocity_transform(const QContext& ctx, const RealFunction& f,
                                      const Value& A);

/// Both sides of the substitution formula for u(x) = alpha x^beta:
///   int_{u(a)}^{u(b)} f(u) d_qu = int_a^b f(u(x)) D_{q^{1/beta}} u(x) d_{q^{1/beta}} x .
/// The right side runs on base q^{1/beta}; beta must be positive (negative
/// powers go through the reciprocity route instead). a = 0 is allowed.
struct ChangeOfVariablePair {
    Value lhs;
    Value rhs;
};
ChangeOfVariablePair change_of_variable(const QContext& ctx, const RealFunction& f,
                                        double u_alpha, double u_beta, const Value& a,
                                        const Value& b);

/// Verify int_0^a g D_qf = [fg]_0^a - int_0^a f(qx) D_qg within tol.
bool q_integration_by_parts_check(const QContext& ctx, const RealFunction& f,
                                  const RealFunction& g, const Value& a,
                                  double tol = 1e-10);

} // namespace qcalc
