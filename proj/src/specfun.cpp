#include "ybe/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "stable_series.hpp"
#include "ybe/numerics.hpp"

namespace ybe {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Products are cut once every remaining factor deviates from 1 by less than
// kCut; the geometric tail of the omitted |log(1-w)| <= |w|/(1-|w|) terms is
// charged to trunc_bound.
constexpr double kCut = 1e-17;
constexpr double kPoleDist = 1e-10;
constexpr long kStepCap = 50000000;

const complex kI(0.0, 1.0);
const double kTwoPi = 2.0 * M_PI;

bool finite_cx(const complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

complex ipow(complex b, long e) {
    if (e < 0) return 1.0 / ipow(b, -e);
    complex acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

complex expi2pi(complex z) { return std::exp(kTwoPi * kI * z); }

struct Tower {
    complex value{1.0};
    double tail = 0.0;
};

double geom_tail(double first, double ratio) {
    if (first <= 0.0) return 0.0;
    if (first >= 0.5 || ratio >= 1.0) return 1.0;
    return first / ((1.0 - first) * (1.0 - ratio));
}

[[noreturn]] void throw_pole(const char* fn, long i, long j, long k) {
    std::ostringstream os;
    os << fn << ": argument within " << kPoleDist << " of a pole";
    os << " (indices " << i;
    if (j >= 0) os << ", " << j;
    if (k >= 0) os << ", " << k;
    os << ")";
    throw pole_error(os.str());
}

void check_steps(long steps, const char* fn) {
    if (steps > kStepCap) {
        std::ostringstream os;
        os << fn << ": modulus too close to 1 for certified truncation";
        throw convergence_error(os.str());
    }
}

void check_finite(const complex& v, const char* fn) {
    if (!finite_cx(v)) {
        std::ostringstream os;
        os << fn << ": intermediate magnitude not representable";
        throw domain_error(os.str());
    }
}

// (z; q): factors (1 - z q^k).  When guard_rel > 0, a factor smaller than
// guard_rel times its |z q^k| raises pole_error (the ratio is the derivative
// scale that converts factor size to argument distance).
Tower tower1(complex z, complex q, const char* fn, double guard_rel = 0.0) {
    const double aq = std::abs(q);
    Tower t;
    complex w = z;
    long k = 0;
    while (std::abs(w) >= kCut) {
        const complex f = 1.0 - w;
        if (guard_rel > 0.0 && std::abs(f) < guard_rel * std::abs(w))
            throw_pole(fn, k, -1, -1);
        t.value *= f;
        w *= q;
        check_steps(++k, fn);
        check_finite(t.value, fn);
    }
    t.tail = geom_tail(std::abs(w), aq);
    return t;
}

// (z; p, q) as nested towers over (1 - z p^j q^k).
Tower tower2(complex z, complex p, complex q, const char* fn,
             bool guard = false) {
    const double ap = std::abs(p), aq = std::abs(q);
    Tower t;
    complex zp = z;
    double sp = 1.0;
    long j = 0, steps = 0;
    while (std::abs(zp) >= kCut) {
        complex w = zp;
        double sc = sp;
        long k = 0;
        while (std::abs(w) >= kCut) {
            const complex f = 1.0 - w;
            if (guard && std::abs(f) < kPoleDist * sc) throw_pole(fn, j, k, -1);
            t.value *= f;
            w *= q;
            sc *= aq;
            ++k;
            check_steps(++steps, fn);
        }
        t.tail += geom_tail(std::abs(w), aq);
        check_finite(t.value, fn);
        zp *= p;
        sp *= ap;
        ++j;
    }
    t.tail += geom_tail(std::abs(zp), ap) / std::max(1.0 - aq, kEps);
    return t;
}

// (z; q1, q2, q3) as triply nested towers.
Tower tower3(complex z, complex q1, complex q2, complex q3, const char* fn,
             bool guard = false) {
    const double a1 = std::abs(q1), a2 = std::abs(q2), a3 = std::abs(q3);
    Tower t;
    complex z1 = z;
    double s1 = 1.0;
    long i = 0, steps = 0;
    while (std::abs(z1) >= kCut) {
        complex z2 = z1;
        double s2 = s1;
        long j = 0;
        while (std::abs(z2) >= kCut) {
            complex w = z2;
            double sc = s2;
            long k = 0;
            while (std::abs(w) >= kCut) {
                const complex f = 1.0 - w;
                if (guard && std::abs(f) < kPoleDist * sc) throw_pole(fn, i, j, k);
                t.value *= f;
                w *= q3;
                sc *= a3;
                ++k;
                check_steps(++steps, fn);
            }
            t.tail += geom_tail(std::abs(w), a3);
            z2 *= q2;
            s2 *= a2;
            ++j;
        }
        t.tail += geom_tail(std::abs(z2), a2) / std::max(1.0 - a3, kEps);
        check_finite(t.value, fn);
        z1 *= q1;
        s1 *= a1;
        ++i;
    }
    t.tail += geom_tail(std::abs(z1), a1) /
              std::max((1.0 - a2) * (1.0 - a3), kEps);
    return t;
}

SpecialValue finish(const complex& v, double tail) {
    const double av = std::abs(v);
    double bound = av * (tail + 4.0 * kEps);
    if (!(bound >= 0.0) || !std::isfinite(bound)) bound = av;
    return SpecialValue{v, bound};
}

QuadratureOptions specfun_quad_opts() {
    QuadratureOptions opts;
    opts.target_rel_tol = 1e-12;
    opts.max_evaluations = 200000;
    opts.initial_nodes = 64;
    return opts;
}

}  // namespace

SpecialValue q_pochhammer(complex z, const Modulus& q1) {
    Tower t = tower1(z, q1.value(), "q_pochhammer");
    return finish(t.value, t.tail);
}

SpecialValue q_pochhammer(complex z, const Modulus& q1, const Modulus& q2) {
    Tower t = tower2(z, q1.value(), q2.value(), "q_pochhammer");
    return finish(t.value, t.tail);
}

SpecialValue q_pochhammer(complex z, const Modulus& q1, const Modulus& q2,
                          const Modulus& q3) {
    Tower t = tower3(z, q1.value(), q2.value(), q3.value(), "q_pochhammer");
    return finish(t.value, t.tail);
}

SpecialValue q_pochhammer(complex z, const std::vector<Modulus>& bases) {
    switch (bases.size()) {
        case 1: return q_pochhammer(z, bases[0]);
        case 2: return q_pochhammer(z, bases[0], bases[1]);
        case 3: return q_pochhammer(z, bases[0], bases[1], bases[2]);
        default: throw domain_error("q_pochhammer: expected 1 to 3 bases");
    }
}

SpecialValue theta_p(complex z, const Modulus& p) {
    if (z == complex(0.0)) throw domain_error("theta_p: z must be nonzero");
    check_finite(z, "theta_p");
    const complex pv = p.value();
    Tower t1 = tower1(pv / z, pv, "theta_p");
    Tower t2 = tower1(z, pv, "theta_p");
    return finish(t1.value * t2.value, t1.tail + t2.tail);
}

SpecialValue jacobi_theta1(complex z, complex tau) {
    if (!(tau.imag() > 0.0))
        throw domain_error("jacobi_theta1: Im tau must be positive");
    const Modulus q(expi2pi(tau));
    const complex y = expi2pi(z);
    if (y == complex(0.0) || !finite_cx(y))
        throw domain_error("jacobi_theta1: |Im z| too large");
    SpecialValue qq = q_pochhammer(q.value(), q);
    SpecialValue th = theta_p(1.0 / y, q);
    const complex pref = -kI * std::pow(q.value(), 0.125) * std::sqrt(y);
    const complex v = pref * qq.value * th.value;
    const double rel = qq.trunc_bound / std::max(std::abs(qq.value), kEps) +
                       th.trunc_bound / std::max(std::abs(th.value), kEps);
    return finish(v, rel);
}

SpecialValue dedekind_eta(const Modulus& q) {
    if (q.abs() == 0.0) return SpecialValue{complex(0.0), 0.0};
    Tower t = tower1(q.value(), q.value(), "dedekind_eta");
    const complex v = std::pow(q.value(), 1.0 / 24.0) * t.value;
    return finish(v, t.tail);
}

SpecialValue elliptic_gamma(complex z, const Modulus& p, const Modulus& q) {
    if (z == complex(0.0)) throw domain_error("elliptic_gamma: z must be nonzero");
    check_finite(z, "elliptic_gamma");
    const complex pv = p.value(), qv = q.value();
    Tower num = tower2(pv * qv / z, pv, qv, "elliptic_gamma");
    Tower den = tower2(z, pv, qv, "elliptic_gamma", true);
    return finish(num.value / den.value, num.tail + den.tail);
}

SpecialValue elliptic_gamma_triple(complex z, const Modulus& p, const Modulus& q,
                                   const Modulus& t) {
    if (z == complex(0.0))
        throw domain_error("elliptic_gamma_triple: z must be nonzero");
    check_finite(z, "elliptic_gamma_triple");
    const complex pv = p.value(), qv = q.value(), tv = t.value();
    Tower num = tower3(pv * qv * tv / z, pv, qv, tv, "elliptic_gamma_triple");
    Tower den = tower3(z, pv, qv, tv, "elliptic_gamma_triple", true);
    return finish(num.value / den.value, num.tail + den.tail);
}

SpecialValue lens_phi(complex z, long m, const LensOrder& r, const Modulus& pm,
                      const Modulus& qm) {
    const char* fn = "lens_phi";
    const long rr = r.r();
    const long mr = mod_r(m, rr);
    const complex p = pm.value(), q = qm.value();
    const complex e2 = std::exp(2.0 * kI * z);
    const complex em2 = std::exp(-2.0 * kI * z);
    if (!finite_cx(e2) || !finite_cx(em2) || e2 == complex(0.0) ||
        em2 == complex(0.0))
        throw domain_error("lens_phi: |Im z| too large");
    const complex pq = p * q;
    const complex p2mr = ipow(p, 2 * mr), pi2mr = ipow(p, -2 * mr);
    const complex q2mr = ipow(q, 2 * mr), qi2mr = ipow(q, -2 * mr);
    const complex p2r = ipow(p, 2 * rr), q2r = ipow(q, 2 * rr);
    const double ap2r = std::abs(p2r), aq2r = std::abs(q2r);
    const double apq2 = std::norm(pq);
    const double moduli = std::max(std::abs(e2), std::abs(em2));
    const double sp = moduli * std::max({std::abs(p2mr), std::abs(pi2mr), 1.0});
    const double sq = moduli * std::max({std::abs(q2mr), std::abs(qi2mr), 1.0});

    Tower t;
    complex pqj = pq;
    double apqj = std::abs(pq);
    long steps = 0;
    for (;;) {
        if (apqj * std::max(sp, sq) < kCut) {
            t.tail += apqj * sp / std::max((1.0 - apq2) * (1.0 - ap2r), kEps);
            t.tail += apqj * sq / std::max((1.0 - apq2) * (1.0 - aq2r), kEps);
            break;
        }
        complex pk = 1.0, qk = 1.0;
        double apk = 1.0, aqk = 1.0;
        for (;;) {
            const complex w_n1 = e2 * pi2mr * pqj * pk * p2r;
            const complex w_d1 = em2 * p2mr * pqj * pk;
            const complex w_n2 = e2 * q2mr * pqj * qk;
            const complex w_d2 = em2 * qi2mr * pqj * qk * q2r;
            const complex d1 = 1.0 - w_d1;
            const complex d2 = 1.0 - w_d2;
            if (std::abs(d1) < 2.0 * kPoleDist * std::abs(w_d1))
                throw_pole(fn, mr, -1, -1);
            if (std::abs(d2) < 2.0 * kPoleDist * std::abs(w_d2))
                throw_pole(fn, mr, -1, -1);
            t.value *= ((1.0 - w_n1) / d1) * ((1.0 - w_n2) / d2);
            pk *= p2r;
            apk *= ap2r;
            qk *= q2r;
            aqk *= aq2r;
            check_steps(++steps, fn);
            if (apqj * apk * sp < kCut && apqj * aqk * sq < kCut) {
                t.tail += apqj * apk * sp / std::max(1.0 - ap2r, kEps);
                t.tail += apqj * aqk * sq / std::max(1.0 - aq2r, kEps);
                break;
            }
        }
        check_finite(t.value, fn);
        pqj *= pq * pq;
        apqj *= apq2;
    }
    return finish(t.value, t.tail);
}

complex bernoulli_b22(complex u, complex w1, complex w2) {
    if (w1 == complex(0.0) || w2 == complex(0.0))
        throw domain_error("bernoulli_b22: periods must be nonzero");
    return u * u / (w1 * w2) - u / w1 - u / w2 + w1 / (6.0 * w2) +
           w2 / (6.0 * w1) + 0.5;
}

complex bernoulli_b33(complex z, complex w1, complex w2, complex w3) {
    if (w1 == complex(0.0) || w2 == complex(0.0) || w3 == complex(0.0))
        throw domain_error("bernoulli_b33: periods must be nonzero");
    const complex W = w1 + w2 + w3;
    const complex S2 = w1 * w1 + w2 * w2 + w3 * w3;
    const complex c = z - W / 2.0;
    return (c * c * c - (S2 / 4.0) * c) / (w1 * w2 * w3);
}

complex bernoulli_poly(BernoulliKind kind, complex z, complex w1, complex w2,
                       complex w3) {
    if (kind == BernoulliKind::B22) return bernoulli_b22(z, w1, w2);
    return bernoulli_b33(z, w1, w2, w3);
}

namespace {

complex r_fn(complex z, complex s, complex t) {
    return (bernoulli_b33(z, s, t, -1.0) + bernoulli_b33(z - 1.0, s, t, -1.0)) /
           12.0;
}

complex r2_phase(complex z, long m, complex sigma, complex tau, long r,
                 bool corrected) {
    const double md = static_cast<double>(m);
    const double rd = static_cast<double>(r);
    if (corrected)
        return r_fn(z + md * sigma, rd * sigma, sigma + tau) +
               r_fn(z + md * tau, rd * tau, sigma + tau);
    return 2.0 * r_fn(z + md * sigma, rd * sigma, sigma + tau);
}

complex r2_mid_fp(long m, long r, bool corrected) {
    const double md = static_cast<double>(m);
    const double rd = static_cast<double>(r);
    if (corrected) return complex(md * (rd - 2.0 * md) * (rd - md) / (12.0 * rd));
    return complex((6.0 * md * md - 6.0 * md * rd + rd * rd + 4.0) / (24.0 * rd));
}

complex lens_phase(complex z, long m, complex sigma, complex tau, long r,
                   bool corrected) {
    return kTwoPi * kI *
           (r2_phase(z, 0, sigma, tau, r, corrected) + r2_mid_fp(m, r, corrected) -
            r2_phase(z, m, sigma, tau, r, corrected));
}

}  // namespace

LensGammaValue lens_gamma_e(complex z, long m, complex sigma, complex tau,
                            const LensOrder& r, LensPhaseVariant variant) {
    const char* fn = "lens_gamma_e";
    if (!(sigma.imag() > 0.0) || !(tau.imag() > 0.0))
        throw domain_error("lens_gamma_e: Im sigma and Im tau must be positive");
    const long rr = r.r();
    const bool corr = (variant == LensPhaseVariant::corrected);
    const complex p = expi2pi(tau);
    const complex q = expi2pi(sigma);
    const complex x = expi2pi(z);
    if (x == complex(0.0) || !finite_cx(x))
        throw domain_error("lens_gamma_e: |Im z| too large");
    const complex xin = 1.0 / x;
    const complex pq = p * q;
    const double apq = std::abs(pq);
    const complex pr = ipow(p, rr), qr = ipow(q, rr);
    const double apr = std::abs(pr), aqr = std::abs(qr);
    // The corrected variant is the residue-class form: both towers run in
    // [m]_r and the phase is the quadratic weight on that class.  It obeys
    // Gamma(z, m) Gamma(sigma + tau - z, -m) = 1 exactly and reduces to the
    // plain elliptic gamma at r = 1.  The printed variant keeps the
    // transcribed phase polynomial and raw-m towers.
    const long mt = corr ? mod_r(m, static_cast<int>(rr)) : m;
    const double apinvm = std::pow(std::abs(p), -static_cast<double>(std::labs(mt)));
    const double aqinvm = std::pow(std::abs(q), -static_cast<double>(std::labs(mt)));
    const double sx = std::max(std::abs(x), std::abs(xin));

    complex phase;
    if (corr) {
        const double wgt = static_cast<double>(mt) *
                           static_cast<double>(rr - mt) /
                           (2.0 * static_cast<double>(rr));
        phase = kTwoPi * kI * ((sigma + tau) / 2.0 - z) * wgt;
    } else {
        phase = lens_phase(z, m, sigma, tau, rr, corr);
    }
    Tower t;
    t.value = std::exp(phase);
    t.tail = std::abs(phase) * kEps;

    complex pqi = 1.0;
    double apqi = 1.0;
    long i = 0, steps = 0;
    for (;;) {
        if (apqi * sx * std::max(apinvm, aqinvm) < kCut &&
            i > std::labs(mt) + 2) {
            t.tail += apqi * sx * apinvm /
                      std::max((1.0 - apq) * (1.0 - apr), kEps);
            t.tail += apqi * sx * aqinvm /
                      std::max((1.0 - apq) * (1.0 - aqr), kEps);
            break;
        }
        const complex pqi1 = pqi * pq;
        complex a_n1 = ipow(p, rr - mt);  // p^{r(j+1)-m}
        complex a_d1 = ipow(p, mt);       // p^{rj+m}
        complex a_n2 = ipow(q, mt);       // q^{rj+m}
        complex a_d2 = ipow(q, rr - mt);  // q^{r(j+1)-m}
        double spj = 1.0, sqj = 1.0;      // |p|^{rj}, |q|^{rj}
        for (long j = 0;; ++j) {
            const complex w_n1 = xin * pqi1 * a_n1;
            const complex w_d1 = x * pqi * a_d1;
            const complex w_n2 = xin * pqi1 * a_n2;
            const complex w_d2 = x * pqi * a_d2;
            const complex d1 = 1.0 - w_d1;
            const complex d2 = 1.0 - w_d2;
            if (std::abs(d1) < kTwoPi * kPoleDist * std::abs(w_d1))
                throw_pole(fn, i, j, -1);
            if (std::abs(d2) < kTwoPi * kPoleDist * std::abs(w_d2))
                throw_pole(fn, i, j, -1);
            t.value *= ((1.0 - w_n1) / d1) * ((1.0 - w_n2) / d2);
            a_n1 *= pr;
            a_d1 *= pr;
            a_n2 *= qr;
            a_d2 *= qr;
            spj *= apr;
            sqj *= aqr;
            check_steps(++steps, fn);
            if (apqi * spj * apinvm < kCut && apqi * sqj * aqinvm < kCut) {
                t.tail += apqi * sx * spj * apinvm / std::max(1.0 - apr, kEps);
                t.tail += apqi * sx * sqj * aqinvm / std::max(1.0 - aqr, kEps);
                break;
            }
        }
        check_finite(t.value, fn);
        pqi = pqi1;
        apqi *= apq;
        ++i;
    }
    SpecialValue sv = finish(t.value, t.tail);
    return LensGammaValue{sv.value, sv.trunc_bound, variant};
}

namespace {

// Core of the integral representation of the hyperbolic gamma function,
// valid in the strip |Re(2u - W)| < Re(W).
complex gamma2_integral(complex u, complex w1, complex w2, double* err_out) {
    const complex W = w1 + w2;
    const complex a = 2.0 * u - W;
    const double scale = std::max({std::abs(a), std::abs(w1), std::abs(w2)});
    const double xc = std::min(1.8 / scale, 4.0);
    const double kappa = W.real() - std::abs(a.real());
    const complex c0 = a * (a * a - w1 * w1 - w2 * w2) / (12.0 * w1 * w2);
    const complex tail_coeff = -a / (2.0 * w1 * w2);
    auto f = [&](double x) -> complex {
        if (x * scale < 1e-8) return c0;
        if (x * scale < 1.8) {
            const complex lh = detail::log_sinhc(a * x) -
                               detail::log_sinhc(w1 * x) -
                               detail::log_sinhc(w2 * x);
            return (a / (2.0 * w1 * w2)) * detail::expm1c(lh) / (x * x);
        }
        const complex e1 = -detail::expm1c(-2.0 * w1 * x);
        const complex e2 = -detail::expm1c(-2.0 * w2 * x);
        return (std::exp((a - W) * x) - std::exp(-(a + W) * x)) / (x * e1 * e2) -
               a / (2.0 * w1 * w2 * x * x);
    };
    detail::CountertermResult ct =
        detail::counterterm_integral(f, xc, kappa, tail_coeff, specfun_quad_opts());
    if (err_out) *err_out = ct.err_est;
    return std::exp(-ct.value);
}

complex gamma2_product(complex u, complex w1, complex w2, double* tail_out) {
    if ((w1 / w2).imag() < 0.0) std::swap(w1, w2);
    const complex q = expi2pi(w1 / w2);
    const complex qt = std::exp(-kTwoPi * kI * w2 / w1);
    Tower num = tower1(expi2pi(u / w1) * qt, qt, "hyperbolic_gamma");
    Tower den = tower1(expi2pi(u / w2), q, "hyperbolic_gamma",
                       kTwoPi * kPoleDist / std::abs(w2));
    if (tail_out) *tail_out = num.tail + den.tail;
    return std::exp(-kI * M_PI * bernoulli_b22(u, w1, w2) / 2.0) * num.value /
           den.value;
}

}  // namespace

SpecialValue hyperbolic_gamma(complex u, const PeriodPair& periods) {
    const char* fn = "hyperbolic_gamma";
    const complex w1 = periods.omega1, w2 = periods.omega2;
    const double im_ratio = (w1 / w2).imag();
    if (im_ratio != 0.0) {
        const double aq = std::exp(-kTwoPi * std::abs(im_ratio));
        const double aqt =
            std::exp(-kTwoPi * std::abs((w2 / w1).imag()));
        if (std::max(aq, aqt) <= 0.99) {
            double tail = 0.0;
            const complex v = gamma2_product(u, w1, w2, &tail);
            check_finite(v, fn);
            return finish(v, tail);
        }
    }

    // Integral representation, continued into the strip by the shift
    // relations gamma2(z + w_s) = 2 sin(pi z / w_o) gamma2(z).
    const complex W = w1 + w2;
    if (!(W.real() > 0.0))
        throw domain_error(
            "hyperbolic_gamma: both representations are outside their domains");
    const bool step1 = std::abs(w1.real()) >= std::abs(w2.real());
    const complex ws = step1 ? w1 : w2;
    const complex wo = step1 ? w2 : w1;
    if (!(ws.real() > 0.0))
        throw domain_error(
            "hyperbolic_gamma: both representations are outside their domains");
    complex pref = 1.0;
    complex uu = u;
    int shifts = 0;
    while (2.0 * uu.real() - W.real() > 0.9 * W.real()) {
        uu -= ws;
        pref *= 2.0 * std::sin(M_PI * uu / wo);
        if (++shifts > 1000) throw convergence_error("hyperbolic_gamma: shift recursion did not reach the strip");
        check_finite(pref, fn);
    }
    while (2.0 * uu.real() - W.real() < -0.9 * W.real()) {
        const complex s = 2.0 * std::sin(M_PI * uu / wo);
        if (std::abs(s) < kPoleDist) throw_pole(fn, shifts, -1, -1);
        pref /= s;
        uu += ws;
        if (++shifts > 1000) throw convergence_error("hyperbolic_gamma: shift recursion did not reach the strip");
        check_finite(pref, fn);
    }
    double err = 0.0;
    const complex core = gamma2_integral(uu, w1, w2, &err);
    const complex v = pref * core;
    check_finite(v, fn);
    return finish(v, err + shifts * 8.0 * kEps);
}

SpecialValue phi_hyperbolic(complex z, complex b) {
    if (b == complex(0.0)) throw domain_error("phi_hyperbolic: b must be nonzero");
    const complex binv = 1.0 / b;
    const complex W = b + binv;
    const complex a = 2.0 * kI * z;
    const double kappa = W.real() - std::abs(2.0 * z.imag());
    if (!(kappa > 0.0))
        throw domain_error("phi_hyperbolic: z outside the convergence strip");
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(binv)});
    const double xc = std::min(1.8 / scale, 4.0);
    const complex c0 = z * (a * a - b * b - binv * binv) / 6.0;
    auto f = [&](double y) -> complex {
        if (y * scale < 1e-8) return c0;
        if (y * scale < 1.8) {
            const complex lh = detail::log_sinhc(a * y) -
                               detail::log_sinhc(b * y) -
                               detail::log_sinhc(binv * y);
            return z * detail::expm1c(lh) / (y * y);
        }
        const complex e1 = -detail::expm1c(-2.0 * b * y);
        const complex e2 = -detail::expm1c(-2.0 * binv * y);
        return (std::exp((a - W) * y) - std::exp(-(a + W) * y)) /
                   (kI * y * e1 * e2) -
               z / (y * y);
    };
    detail::CountertermResult ct =
        detail::counterterm_integral(f, xc, kappa, -z, specfun_quad_opts());
    const complex v = std::exp(-kI * ct.value);
    return finish(v, ct.err_est);
}

SpecialValue double_sine(complex z, complex b) {
    const char* fn = "double_sine";
    if (b == complex(0.0)) throw domain_error("double_sine: b must be nonzero");
    complex bb = b;
    if ((bb * bb).imag() < 0.0) bb = 1.0 / bb;
    const complex b2 = bb * bb;
    const double rq_num = std::exp(-kTwoPi * b2.imag());
    const double rq_den = std::exp(-kTwoPi * b2.imag() / std::norm(b2));
    if (b2.imag() > 0.0 && std::max(rq_num, rq_den) <= 0.99) {
        const complex step_n = std::exp(kTwoPi * kI * b2);
        const complex step_d = std::exp(-kTwoPi * kI / b2);
        complex tn = std::exp(kTwoPi * bb * z) * std::exp(M_PI * kI * b2);
        complex td = std::exp(kTwoPi * z / bb) * std::exp(-M_PI * kI / b2);
        check_finite(tn, fn);
        check_finite(td, fn);
        Tower t;
        long steps = 0;
        while (std::abs(tn) >= kCut || std::abs(td) >= kCut) {
            const complex dfac = 1.0 + td;
            if (std::abs(dfac) <
                kTwoPi * kPoleDist * std::abs(td) / std::abs(bb))
                throw_pole(fn, steps, -1, -1);
            t.value *= (1.0 + tn) / dfac;
            tn *= step_n;
            td *= step_d;
            check_steps(++steps, fn);
            check_finite(t.value, fn);
        }
        t.tail = geom_tail(std::abs(tn), rq_num) + geom_tail(std::abs(td), rq_den);
        const complex v = std::exp(-kI * M_PI * z * z / 2.0) * t.value;
        return finish(v, t.tail);
    }
    // Integral-backed fallback through the hyperbolic gamma relation.
    const PeriodPair pp{b, 1.0 / b};
    const complex W = b + 1.0 / b;
    SpecialValue g = hyperbolic_gamma(W / 2.0 - kI * z, pp);
    const complex pref = std::exp(kI * M_PI * (b * b + 1.0 / (b * b)) / 24.0);
    const complex v = pref / g.value;
    const double rel = g.trunc_bound / std::max(std::abs(g.value), kEps);
    return finish(v, rel);
}

SpecialValue lens_dilog(complex z, long m, const LensOrder& r,
                        const PeriodPair& periods) {
    const long rr = r.r();
    const long mr = mod_r(m, rr);
    const complex w1 = periods.omega1, w2 = periods.omega2;
    const complex W = w1 + w2;
    const double rd = static_cast<double>(rr);
    const complex a1 = 2.0 * kI * z - w1 * (rd - 2.0 * mr);
    const complex a2 = 2.0 * kI * z + w2 * (rd - 2.0 * mr);
    const complex B1 = w1 * rd, B2 = w2 * rd;
    const complex K1 = a1 / (2.0 * w1 * rd * W);
    const complex K2 = a2 / (2.0 * w2 * rd * W);
    const double kappa =
        std::min((B1 + W).real() - std::abs(a1.real()),
                 (B2 + W).real() - std::abs(a2.real()));
    if (!(kappa > 0.0))
        throw domain_error("lens_dilog: z outside the convergence strip");
    const double scale = std::max(
        {std::abs(a1), std::abs(a2), std::abs(B1), std::abs(B2), std::abs(W)});
    const double xc = std::min(1.8 / scale, 4.0);
    const complex c0 = -(K1 * (a1 * a1 - B1 * B1 - W * W) +
                         K2 * (a2 * a2 - B2 * B2 - W * W)) /
                       6.0;
    const complex tail_coeff = kI * z / (w1 * w2 * rd);
    auto f = [&](double x) -> complex {
        if (x * scale < 1e-8) return c0;
        if (x * scale < 1.8) {
            const complex lsW = detail::log_sinhc(W * x);
            const complex l1 = detail::log_sinhc(a1 * x) -
                               detail::log_sinhc(B1 * x) - lsW;
            const complex l2 = detail::log_sinhc(a2 * x) -
                               detail::log_sinhc(B2 * x) - lsW;
            return -(K1 * detail::expm1c(l1) + K2 * detail::expm1c(l2)) / (x * x);
        }
        const complex eW = -detail::expm1c(-2.0 * W * x);
        const complex e1 = -detail::expm1c(-2.0 * B1 * x);
        const complex e2 = -detail::expm1c(-2.0 * B2 * x);
        const complex t1 = kI * z / (w1 * w2 * rd * x * x);
        const complex t2 =
            (std::exp((a1 - B1 - W) * x) - std::exp(-(a1 + B1 + W) * x)) /
            (x * e1 * eW);
        const complex t3 =
            (std::exp((a2 - B2 - W) * x) - std::exp(-(a2 + B2 + W) * x)) /
            (x * e2 * eW);
        return t1 - t2 - t3;
    };
    detail::CountertermResult ct =
        detail::counterterm_integral(f, xc, kappa, tail_coeff, specfun_quad_opts());
    const complex v = std::exp(ct.value);
    return finish(v, ct.err_est);
}

SpecialValue q_dispersion(complex z, long n, const Modulus& p, const Modulus& q) {
    const char* fn = "q_dispersion";
    const complex pv = p.value(), qv = q.value();
    const complex pq = pv * qv;
    const Modulus base(pq * pq);
    const complex ratio_n = ipow(pv / qv, n);
    const complex common = ipow(pq, 1 + std::labs(n));
    const complex z_num = std::exp(2.0 * kI * z) / ratio_n * common;
    const complex z_den = std::exp(-2.0 * kI * z) * ratio_n * common;
    if (!finite_cx(z_num) || !finite_cx(z_den))
        throw domain_error("q_dispersion: |Im z| too large");
    Tower num = tower1(z_num, base.value(), fn);
    Tower den = tower1(z_den, base.value(), fn, 2.0 * kPoleDist);
    return finish(num.value / den.value, num.tail + den.tail);
}

}  // namespace ybe
