#pragma once

// Special functions underlying the lattice-model Boltzmann weights: infinite
// q-products, theta functions, elliptic and hyperbolic gamma functions, their
// lens generalizations, and the quantum dilogarithms built from them.
//
// Every evaluation returns a SpecialValue carrying a certified truncation
// bound: recomputing with doubled product cutoffs (or quadrature depth) moves
// the value by less than trunc_bound.  Fractional powers and logarithms use
// principal branches throughout.  Arguments closer than 1e-10 to a pole raise
// pole_error instead of returning a large value, so callers can tell a failed
// identity from a sampled pole.

#include <vector>

#include "ybe/types.hpp"

namespace ybe {

// (z; q1)          = prod_{k>=0} (1 - z q1^k)
// (z; q1, q2)      = prod_{j,k>=0} (1 - z q1^j q2^k)
// (z; q1, q2, q3)  = prod_{i,j,k>=0} (1 - z q1^i q2^j q3^k)
SpecialValue q_pochhammer(complex z, const Modulus& q1);
SpecialValue q_pochhammer(complex z, const Modulus& q1, const Modulus& q2);
SpecialValue q_pochhammer(complex z, const Modulus& q1, const Modulus& q2,
                          const Modulus& q3);
SpecialValue q_pochhammer(complex z, const std::vector<Modulus>& bases);

// theta(z; p) = prod_{i>=0} (1 - z^{-1} p^{i+1})(1 - z p^i), z != 0.
SpecialValue theta_p(complex z, const Modulus& p);

// theta_1(z | tau) = -i q^{1/8} y^{1/2} (q; q) theta(y^{-1}; q)
// with y = e^{2 pi i z}, q = e^{2 pi i tau}, Im tau > 0.
SpecialValue jacobi_theta1(complex z, complex tau);

// eta(q) = q^{1/24} (q; q).
SpecialValue dedekind_eta(const Modulus& q);

// Gamma(z; p, q) = (p q / z; p, q) / (z; p, q), poles at z = p^{-i} q^{-j}.
SpecialValue elliptic_gamma(complex z, const Modulus& p, const Modulus& q);

// Gamma(z; p, q, t) = (p q t / z; p, q, t) / (z; p, q, t).
SpecialValue elliptic_gamma_triple(complex z, const Modulus& p, const Modulus& q,
                                   const Modulus& t);

// The lens double product Phi_{r,m}(z) with [m]_r = m mod r in {0,...,r-1}.
// The base-q tower carries q^{+2[m]_r} in its numerator; the sign printed in
// the source formula breaks the m -> -m, z -> -z pairing and is corrected
// here (see the repository notes).
SpecialValue lens_phi(complex z, long m, const LensOrder& r, const Modulus& p,
                      const Modulus& q);

// Which reading of the lens elliptic gamma an evaluation used.  as_printed
// transcribes the source formula (R2 phase polynomial, raw-m towers); it
// fails the reflection equation for r >= 2.  corrected is the residue-class
// form below, the one every lens identity in this library holds for.
enum class LensPhaseVariant { as_printed, corrected };

struct LensGammaValue {
    complex value;
    double trunc_bound;
    LensPhaseVariant variant;
};

// Lens elliptic gamma Gamma_e(z, m; sigma, tau, r).  In the corrected
// variant, with x = e^{2 pi i z}, p = e^{2 pi i tau}, q = e^{2 pi i sigma}
// and mt = [m]_r:
//   exp(2 pi i ((sigma+tau)/2 - z) mt (r - mt) / (2r))
//     * Gamma(x p^mt; p^r, pq) * Gamma(x q^{r-mt}; q^r, pq),
// which satisfies Gamma_e(z, m) Gamma_e(sigma+tau-z, -m) = 1 exactly and
// collapses to Gamma(x; p, q) at r = 1.
LensGammaValue lens_gamma_e(complex z, long m, complex sigma, complex tau,
                            const LensOrder& r,
                            LensPhaseVariant variant = LensPhaseVariant::corrected);

enum class BernoulliKind { B22, B33 };

// B_{2,2}(u; w1, w2) and B_{3,3}(z; w1, w2, w3), evaluated exactly as
// printed; w3 is ignored for B22.
complex bernoulli_poly(BernoulliKind kind, complex z, complex w1, complex w2,
                       complex w3 = complex(0.0));
complex bernoulli_b22(complex u, complex w1, complex w2);
complex bernoulli_b33(complex z, complex w1, complex w2, complex w3);

// Hyperbolic gamma gamma^(2)(u; omega1, omega2): the B22-phase ratio of two
// q-products when the period ratio is off the real axis, otherwise the
// counterterm-regularized integral representation continued by the shift
// relations into the strip 0 < Re(2u - W) < ... < Re(W).
SpecialValue hyperbolic_gamma(complex u, const PeriodPair& periods);

// Phi(z; b) = exp(-i FP integral of sin(2 z y) / (2 sinh(b y) sinh(y/b) y)),
// valid in the strip |Im z| < Re(b + 1/b) / 2.  The printed principal-value
// prescription leaves an even 1/y^2 divergence; the finite-part reading
// (subtract the counterterm, add nothing back) reproduces gamma^(2) exactly
// and is used here.
SpecialValue phi_hyperbolic(complex z, complex b);

// Double sine s_b(z): product form for Im(b^2) != 0, otherwise evaluated
// through its relation to the hyperbolic gamma function.
SpecialValue double_sine(complex z, complex b);

// Lens quantum dilogarithm phi_{r,m}(z): exp of the two-term counterterm
// integral; depends on m through [m]_r only.
SpecialValue lens_dilog(complex z, long m, const LensOrder& r,
                        const PeriodPair& periods);

// Q(z; n) = (e^{2iz} (p/q)^{-n} (pq)^{1+|n|}; (pq)^2)
//         / (e^{-2iz} (p/q)^{n} (pq)^{1+|n|}; (pq)^2).
SpecialValue q_dispersion(complex z, long n, const Modulus& p, const Modulus& q);

}  // namespace ybe
