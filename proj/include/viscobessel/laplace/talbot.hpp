#pragma once

// Fixed-Talbot numerical inversion of the Laplace transform.
//
// Contour  s(theta) = r theta (cot theta + i),  -pi < theta < pi,  r = 2M/(5t),
// trapezoidal rule on theta_k = k pi / M:
//
//   f(t) ~ (r/M) [ F(r) e^{rt} / 2
//                + sum_{k=1}^{M-1} Re( e^{t s_k} F(s_k) (1 + i sigma_k) ) ]
//   sigma(theta) = theta + (theta cot theta - 1) cot theta
//
// About 0.6 M significant digits are attainable when the arithmetic carries
// at least M digits; in double precision M ~ 24 is the practical optimum,
// in oracle_real (float128) M = 64 is fine.

#include <cmath>
#include <complex>
#include <sstream>

#include "viscobessel/error.hpp"
#include "viscobessel/laplace/laplace_function.hpp"

namespace viscobessel::laplace {

inline constexpr int talbot_default_nodes = 64;

template <class Real>
Real invert_talbot(const LaplaceFunction<Real>& transform, Real t, int nodes = talbot_default_nodes) {
    using std::acos;
    using std::cos;
    using std::exp;
    using std::isfinite;
    using std::sin;
    if (!(t > Real(0))) {
        throw domain_error("invert_talbot: t must be positive");
    }
    if (nodes < 8) {
        throw domain_error("invert_talbot: need at least 8 nodes");
    }
    const Real pi = acos(Real(-1));
    const Real m = Real(nodes);
    const Real r = Real(2) * m / (Real(5) * t);

    auto checked = [&](const std::complex<Real>& s, const std::complex<Real>& value) {
        if (!isfinite(value.real()) || !isfinite(value.imag())) {
            std::ostringstream message;
            message << "invert_talbot: non-finite contour value for " << transform.label << " at s = ("
                    << static_cast<double>(s.real()) << ", " << static_cast<double>(s.imag()) << ")";
            throw computation_error(message.str());
        }
        return value;
    };

    const std::complex<Real> s0(r, Real(0));
    Real sum = Real(0.5) * exp(r * t) * checked(s0, transform(s0)).real();
    for (int k = 1; k < nodes; ++k) {
        const Real theta = Real(k) * pi / m;
        const Real cot = cos(theta) / sin(theta);
        const std::complex<Real> s(r * theta * cot, r * theta);
        const Real sigma = theta + (theta * cot - Real(1)) * cot;
        const std::complex<Real> value = checked(s, transform(s));
        const std::complex<Real> term = std::exp(t * s) * value * std::complex<Real>(Real(1), sigma);
        sum += term.real();
    }
    return r / m * sum;
}

}  // namespace viscobessel::laplace
