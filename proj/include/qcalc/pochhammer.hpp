#pragma once

#include "qcalc/context.hpp"

namespace qcalc {

struct PochResult {
    Value value;
    int factors_used = 0;
    bool truncated = false;   ///< false whenever the product is finite by construction
};

/// (a + b)_q^n = prod_{j=0}^{n-1} (a + q^j b) for n >= 0; for n < 0 the
/// product is defined through consistency with the infinite-product form,
/// i.e. (a + b)_q^{-m} = 1 / prod_{k=1}^{m} (a + q^{-k} b).
/// PoleError when a factor of a negative-exponent denominator vanishes.
Value poch_finite(const QContext& ctx, const Value& a, const Value& b, long n);

/// (1 + a)_q^infty, truncated per the context policy.
PochResult poch_inf(const QContext& ctx, const Value& a);

/// (1 + a)_q^t = (1 + a)_q^infty / (1 + q^t a)_q^infty. Computed as a product
/// of paired factor ratios so the two tails cancel term by term. Integral t
/// in ExactRational mode takes the telescoped finite form and stays exact.
/// PoleError if a denominator factor vanishes.
Value poch_real(const QContext& ctx, const Value& a, double t);

/// Two-sided checks of the product-identity lemma, items (7)-(10):
///   (7) (1+x)_q^{s+t} = (1+x)_q^s (1+q^s x)_q^t
///   (8) (1+x)_q^{-t}  = 1 / (1+q^{-t} x)_q^t
///   (9) (1+q^s x)_q^t = (1+x)_q^{s+t} / (1+x)_q^s
///                     = [(1+q^t x)_q^s / (1+x)_q^s] (1+x)_q^t
///  (10) (1+q^{-n} x)_q^t = [(x+q)_q^n / (q^t x+q)_q^n] (1+x)_q^t
struct PochIdentityChecks {
    bool splitting = false;        // (7)
    bool inversion = false;        // (8)
    bool shift = false;            // (9), both equalities
    bool negative_shift = false;   // (10)
    double worst_rel_error = 0.0;
    bool all() const { return splitting && inversion && shift && negative_shift; }
};

PochIdentityChecks poch_identities_check(const QContext& ctx, const Value& x, double t,
                                         double s, long n, double tol = 1e-12);

} // namespace qcalc
