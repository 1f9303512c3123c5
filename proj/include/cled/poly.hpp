#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cled/ring.hpp"

namespace cled {

/// Polynomial in the backward-shift operator q^{-1}.
/// coeffs[i] multiplies q^{-i}; storage is dense, lowest shift power first.
/// Degree is explicit (coeffs.size() - 1); trailing zeros are never trimmed
/// implicitly because downstream recursions index coefficients by position.
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() : coeffs{1.0} {}
    Polynomial(std::initializer_list<double> c) : coeffs(c) {}
    explicit Polynomial(std::vector<double> c);

    std::size_t degree() const { return coeffs.size() - 1; }

    /// Coefficient of q^{-i}; 0 beyond the stored degree.
    double at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0.0; }

    bool monic() const { return coeffs[0] == 1.0; }
    bool strictly_delayed() const { return coeffs[0] == 0.0; }

    static Polynomial one() { return Polynomial{1.0}; }
};

bool operator==(const Polynomial& a, const Polynomial& b);

/// Cauchy product: result_i = sum_j p_j * r_{i-j}; degree = deg p + deg r.
Polynomial convolve(const Polynomial& p, const Polynomial& r);

/// Coefficient-wise sum after zero-padding to the common length.
Polynomial add(const Polynomial& p, const Polynomial& r);

/// Largest root modulus of the characteristic polynomial
/// z^n + c_1 z^{n-1} + ... + c_n, via companion-matrix eigenvalues.
/// Requires a monic polynomial; degree 0 returns 0.
double max_root_modulus(const Polynomial& p);

/// True iff all characteristic roots lie strictly inside the unit circle,
/// with a 1e-9 margin so e.g. an exact integrator pole is never "stable"
/// through rounding. Degree 0 is stable by convention.
bool is_stable(const Polynomial& p);

/// One step of the direct-form recursion for the operator b(q)/a(q):
///   y_t = sum_i b_i * u_{t-i} - sum_{i>=1} a_i * y_{t-i}.
/// inputs[lag] must hold u_{t-lag} (the current input at lag 0);
/// outputs[lag] must hold y_{t-1-lag}. a must be monic.
double filter_step(const Polynomial& b, const Polynomial& a,
                   const RingHistory& inputs, const RingHistory& outputs);

} // namespace cled
