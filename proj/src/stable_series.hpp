#pragma once

// Internal helpers shared by the special-function and model kernels.
//
// The integral representations used here subtract a 1/x^2 counterterm at the
// origin.  Evaluating the main term and the counterterm separately loses all
// precision as x -> 0, so near the origin the integrands are rewritten
// through log(sinh(y)/y) series and expm1, which keeps every step
// cancellation-free.  Far out, the counterterm-subtracted integrand decays
// like c/x^2; the cutoff tail is added back in closed form.

#include <cmath>
#include <functional>
#include <vector>

#include "ybe/numerics.hpp"
#include "ybe/types.hpp"

namespace ybe {
namespace detail {

// zeta(2j) for j = 1..48, used by the log(sinh(y)/y) and log(cosh(y))
// expansions below.
inline constexpr double kZetaEven[48] = {
    1.644934066848226436, 1.082323233711138192, 1.01734306198444914,
    1.004077356197944339, 1.000994575127818085, 1.000246086553308048,
    1.000061248135058705, 1.000015282259408652, 1.000003817293265,
    1.000000953962033873, 1.000000238450502728, 1.000000059608189051,
    1.000000014901554828, 1.000000003725334025, 1.000000000931327432,
    1.000000000232831183, 1.000000000058207721, 1.000000000014551922,
    1.00000000000363798,  1.000000000000909495, 1.000000000000227374,
    1.000000000000056843, 1.000000000000014211, 1.000000000000003553,
    1.000000000000000888, 1.000000000000000222, 1.000000000000000056,
    1.000000000000000014, 1.000000000000000003, 1.000000000000000001,
    1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0,
    1.0, 1.0, 1.0, 1.0};

// log(sinh(y)/y) via sum_j (-1)^{j+1} zeta(2j)/(j pi^{2j}) y^{2j}.
// Converges for |y| < pi; callers stay inside |y| <= 1.8.
inline complex log_sinhc(complex y) {
    const double pi2 = M_PI * M_PI;
    const complex y2 = y * y / pi2;
    complex s = 0.0;
    complex t = y2;
    for (int j = 1; j <= 48; ++j) {
        const double sgn = (j % 2 == 1) ? 1.0 : -1.0;
        const complex term = sgn * kZetaEven[j - 1] / (j * 1.0) * t;
        s += term;
        if (std::abs(term) < 1e-19 * std::max(1.0, std::abs(s))) break;
        t *= y2;
    }
    return s;
}

// log(cosh(y)) via sum_j (-1)^{j+1} zeta(2j)/j [(2y/pi)^{2j} - (y/pi)^{2j}].
// Converges for |y| < pi/2; callers stay inside |y| <= 1.4.
inline complex log_coshc(complex y) {
    const double pi2 = M_PI * M_PI;
    const complex v = y * y / pi2;
    const complex u = 4.0 * v;
    complex s = 0.0;
    complex tu = u;
    complex tv = v;
    for (int j = 1; j <= 256; ++j) {
        const double sgn = (j % 2 == 1) ? 1.0 : -1.0;
        const double zj = (j <= 48) ? kZetaEven[j - 1] : 1.0;
        const complex term = sgn * zj / (j * 1.0) * (tu - tv);
        s += term;
        if (std::abs(tu) + std::abs(tv) < 1e-19 * std::max(1.0, std::abs(s))) break;
        tu *= u;
        tv *= v;
    }
    return s;
}

// exp(w) - 1 without cancellation near w = 0.  Branch shifts of 2*pi*i in w
// do not change the value, so callers may assemble w from logs taken on
// mismatched branches.
inline complex expm1c(complex w) {
    if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
    complex s = 0.0;
    complex t = 1.0;
    for (int k = 1; k <= 24; ++k) {
        t *= w / static_cast<double>(k);
        s += t;
        if (std::abs(t) < 1e-19 * std::max(std::abs(s), 1e-18)) break;
    }
    return s;
}

struct CountertermResult {
    complex value;
    double err_est;
    long evaluations;
};

// Integrates f over (0, infinity) where f already has its 1/x^2 counterterm
// subtracted and decays to tail_coeff/x^2 beyond the exponential window set
// by kappa (the decay rate of the non-counterterm part).  The cutoff tail
// integral of tail_coeff/x^2 is added in closed form.  xc is the switch
// point below which f uses its series branch.
inline CountertermResult counterterm_integral(const std::function<complex(double)>& f,
                                              double xc, double kappa,
                                              complex tail_coeff,
                                              const QuadratureOptions& opts) {
    if (!(kappa > 0.0))
        throw domain_error("counterterm_integral: integral representation outside its strip");
    const double X = std::max(60.0, 95.0 / kappa);
    std::vector<double> knots = {0.0, xc, 2.0 * xc + 2.0, 20.0, X};
    complex total = 0.0;
    double err = 0.0;
    long evals = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        double a = std::min(knots[i], X);
        double b = std::min(knots[i + 1], X);
        if (!(b > a)) continue;
        QuadratureResult r = integrate_finite(f, a, b, opts);
        total += r.value;
        err += r.err_est;
        evals += r.evaluations;
    }
    total += tail_coeff / X;
    return {total, err, evals};
}

}  // namespace detail
}  // namespace ybe
