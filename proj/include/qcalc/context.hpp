#pragma once

#include <optional>

#include "qcalc/value.hpp"

namespace qcalc {

enum class Mode { Float, ExactRational };

/// Truncation caps shared by every evaluation. Explicit rather than global so
/// a report can record exactly how its numbers were produced.
struct TruncationPolicy {
    int product_terms = 4000;       ///< max factors of an infinite product
    int series_terms = 2000;        ///< max terms of a one-sided Jackson sum
    int bilateral_window = 200;     ///< improper sums run n = -W..W
    double tail_tol = 1e-17;        ///< early stop once |q^j a| (or |term|) drops below;
                                    ///< ignored in ExactRational mode, caps alone govern
};

/// The fixed base q in (0,1), the arithmetic mode, and the truncation policy.
/// Immutable after construction; every operation takes it as first argument
/// and is a pure function, safe for concurrent use.
class QContext {
public:
    Mode mode() const { return mode_; }
    const TruncationPolicy& trunc() const { return trunc_; }
    bool exact() const { return mode_ == Mode::ExactRational; }

    double q() const { return q_d_; }
    double one_minus_q() const { return 1.0 - q_d_; }

    /// The exact base; only available in ExactRational mode.
    const Rational& q_rational() const;

    /// q as a mode-matching scalar.
    Value q_value() const;
    /// 1 - q as a mode-matching scalar.
    Value one_minus_q_value() const;
    /// q^n, exact in ExactRational mode for any integer n.
    Value q_pow(long n) const;
    /// q^t; falls back to double pow for non-integral t (inexact by nature).
    Value q_pow(double t) const;
    /// A constant in the context's arithmetic (exact in ExactRational mode).
    Value constant(long n) const;

    friend QContext make_context(double q, Mode mode, const TruncationPolicy& trunc);
    friend QContext make_context(const Rational& q, Mode mode, const TruncationPolicy& trunc);

private:
    QContext(double qd, std::optional<Rational> qr, Mode mode, const TruncationPolicy& trunc);

    Mode mode_;
    TruncationPolicy trunc_;
    double q_d_;
    std::optional<Rational> q_r_;
};

/// Validated construction. DomainError unless 0 < q < 1 strictly and the
/// policy caps are positive; ModeError if ExactRational is requested with a
/// plain double (supply a Rational instead).
QContext make_context(double q, Mode mode = Mode::Float, const TruncationPolicy& trunc = {});
QContext make_context(const Rational& q, Mode mode = Mode::ExactRational,
                      const TruncationPolicy& trunc = {});

/// The q-bracket [t] = (1 - q^t)/(1 - q); for a positive integer n this is
/// 1 + q + ... + q^{n-1}.
Value q_number(const QContext& ctx, double t);
Value q_number(const QContext& ctx, long n);

/// [n]! = [n][n-1]...[1], with [0]! = 1. Exact in ExactRational mode.
Value q_factorial(const QContext& ctx, long n);

} // namespace qcalc
