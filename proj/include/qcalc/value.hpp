#pragma once

#include <cmath>
#include <variant>

#include "qcalc/errors.hpp"
#include "qcalc/rational.hpp"

namespace qcalc {

/// Mode-polymorphic scalar: an exact rational or a double. Arithmetic keeps
/// exactness as long as every operand is exact; any inexact operand demotes
/// the result to double. Operations that cannot stay rational (non-integer
/// powers) always produce an inexact value, so "is_exact() == true" certifies
/// that no rounding happened anywhere in the expression tree.
class Value {
public:
    Value() : v_(Rational(0)) {}
    Value(double d) : v_(d) {}
    Value(const Rational& r) : v_(r) {}
    Value(Rational&& r) : v_(std::move(r)) {}
    Value(int n) : v_(Rational(n)) {}
    Value(long n) : v_(Rational(static_cast<signed long>(n))) {}

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }

    double to_double() const {
        return is_exact() ? std::get<Rational>(v_).get_d() : std::get<double>(v_);
    }

    /// The exact payload; logic error to call on an inexact value.
    const Rational& rational() const {
        if (!is_exact()) throw std::logic_error("Value::rational: value is inexact");
        return std::get<Rational>(v_);
    }

    bool is_zero() const {
        return is_exact() ? sgn(std::get<Rational>(v_)) == 0 : std::get<double>(v_) == 0.0;
    }

    int sign() const {
        if (is_exact()) return sgn(std::get<Rational>(v_));
        double d = std::get<double>(v_);
        return d > 0 ? 1 : (d < 0 ? -1 : 0);
    }

    friend Value operator+(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rational(a.rational() + b.rational()));
        return Value(a.to_double() + b.to_double());
    }
    friend Value operator-(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rational(a.rational() - b.rational()));
        return Value(a.to_double() - b.to_double());
    }
    friend Value operator*(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rational(a.rational() * b.rational()));
        return Value(a.to_double() * b.to_double());
    }
    friend Value operator/(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) {
            if (sgn(b.rational()) == 0) throw DomainError("Value: exact division by zero");
            return Value(Rational(a.rational() / b.rational()));
        }
        return Value(a.to_double() / b.to_double());
    }
    Value operator-() const {
        if (is_exact()) return Value(Rational(-rational()));
        return Value(-to_double());
    }
    Value& operator+=(const Value& o) { *this = *this + o; return *this; }
    Value& operator-=(const Value& o) { *this = *this - o; return *this; }
    Value& operator*=(const Value& o) { *this = *this * o; return *this; }
    Value& operator/=(const Value& o) { *this = *this / o; return *this; }

    /// Exact equality when both operands are exact, double comparison otherwise.
    friend bool operator==(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
        return a.to_double() == b.to_double();
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
    std::variant<double, Rational> v_;
};

inline Value abs(const Value& v) { return v.sign() < 0 ? -v : v; }

/// v^n with integer exponent; stays exact for exact v.
Value pow_int(const Value& base, long n);

/// v^t with real exponent; exact only when t is integral and v is exact.
/// Requires v > 0 for non-integral t.
Value pow_real(const Value& base, double t);

/// |a - b| / max(|a|, |b|); 0 when both vanish. Double-precision metric used
/// by every tolerance check.
double rel_error(const Value& a, const Value& b);
double rel_error(double a, double b);

} // namespace qcalc
