#include "ybe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#ifdef YBE_HAVE_OPENMP
#include <omp.h>
#endif

namespace ybe {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Relative size below which a tail term is considered negligible, and the
// number of consecutive negligible terms required before a side stops.
constexpr double kTermCut = 1e-17;
constexpr int kSmallRun = 4;

// Nodes are evaluated in fixed-size blocks so the work schedule (and the
// evaluation count) does not depend on the thread count.
constexpr long kBlock = 128;

bool finite_cx(const complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

[[noreturn]] void throw_no_convergence(const char* who, long evals,
                                       const std::vector<double>& deltas) {
    std::ostringstream os;
    os << who << ": no convergence within " << evals << " evaluations; refinement deltas:";
    for (double d : deltas) os << ' ' << d;
    throw convergence_error(os.str());
}

[[noreturn]] void throw_nonfinite(const char* who, double x) {
    std::ostringstream os;
    os << who << ": integrand returned a non-finite value near x = " << x;
    throw convergence_error(os.str());
}

struct LevelSum {
    complex sum{};
    double l1 = 0.0;
};

// One trapezoid level of a double-exponential rule: sum f over nodes
// t = k*h, walking outward from the centre on each side until the terms
// stay negligible. `map` yields abscissa and weight for a given t and
// reports false once t leaves the representable range.
template <class Map>
LevelSum de_level(const Integrand& f, const Map& map, double h, const char* who,
                  long& evals, long max_evals, bool& budget_ok) {
    LevelSum acc;
    double term_scale = 0.0;

    auto term_at = [&](double t, double& x_out) -> complex {
        double x = 0.0, w = 0.0;
        if (!map(t, x, w)) return complex(0.0, 0.0);
        x_out = x;
        complex fx = f(x);
        if (fx == complex(0.0, 0.0)) return fx;
        return w * fx;
    };

    {
        double x0 = 0.0;
        complex c = term_at(0.0, x0);
        ++evals;
        if (!finite_cx(c)) throw_nonfinite(who, x0);
        acc.sum = c;
        acc.l1 = std::abs(c);
        term_scale = acc.l1;
    }

    for (int side = 0; side < 2; ++side) {
        const double sgn = side == 0 ? 1.0 : -1.0;
        int small_run = 0;
        bool stop = false;
        for (long base = 0; !stop; base += kBlock) {
            if (evals + kBlock > max_evals) {
                budget_ok = false;
                return acc;
            }
            std::vector<complex> block(static_cast<size_t>(kBlock));
            std::vector<double> xs(static_cast<size_t>(kBlock), 0.0);
            {
                std::vector<complex> vals = parallel_map(kBlock, [&](long i) {
                    return term_at(sgn * double(base + i + 1) * h, xs[size_t(i)]);
                });
                block.swap(vals);
            }
            evals += kBlock;
            for (long i = 0; i < kBlock; ++i) {
                complex term = block[size_t(i)];
                if (!finite_cx(term)) {
                    // An overflowing term after decay has set in is provably
                    // below the cutoff; anywhere else it is a real error.
                    if (small_run == 0) throw_nonfinite(who, xs[size_t(i)]);
                    term = complex(0.0, 0.0);
                }
                double a = std::abs(term);
                acc.sum += term;
                acc.l1 += a;
                term_scale = std::max(term_scale, a);
                if (a <= kTermCut * term_scale) {
                    if (++small_run >= kSmallRun) { stop = true; break; }
                } else {
                    small_run = 0;
                }
            }
        }
    }
    return acc;
}

template <class Map>
QuadratureResult de_integrate(const Integrand& f, const Map& map, double t_cap,
                              const char* who, const QuadratureOptions& opts) {
    opts.validate();
    const double h0 = 2.0 * t_cap / double(opts.initial_nodes);

    long evals = 0;
    std::vector<double> deltas;
    complex prev{};
    double prev_l1 = 0.0;
    bool have_prev = false;

    for (double h = h0; evals < opts.max_evaluations; h *= 0.5) {
        bool budget_ok = true;
        LevelSum lv = de_level(f, map, h, who, evals, opts.max_evaluations, budget_ok);
        if (!budget_ok) break;
        complex value = h * lv.sum;
        double l1 = h * lv.l1;
        if (have_prev) {
            double delta = std::abs(value - prev);
            deltas.push_back(delta);
            double floor = 8.0 * kEps * std::max(l1, prev_l1);
            if (delta <= opts.target_rel_tol * std::abs(value) + floor)
                return {value, delta + 2.0 * kEps * l1, evals};
        }
        prev = value;
        prev_l1 = l1;
        have_prev = true;
    }
    throw_no_convergence(who, evals, deltas);
}

// Transform factories. Each caps |t| so abscissas and weights stay inside
// the double range; the term cutoff normally fires well before the cap.

auto map_exp_sinh() {
    return [](double t, double& x, double& w) {
        if (std::abs(t) > 6.7) return false;
        const double u = 1.5707963267948966 * std::sinh(t);
        x = std::exp(u);
        w = x * 1.5707963267948966 * std::cosh(t);
        return std::isfinite(x) && std::isfinite(w) && x > 0.0;
    };
}

auto map_sinh_sinh() {
    return [](double t, double& x, double& w) {
        if (std::abs(t) > 6.7) return false;
        const double u = 1.5707963267948966 * std::sinh(t);
        x = std::sinh(u);
        w = 1.5707963267948966 * std::cosh(t) * std::cosh(u);
        return std::isfinite(x) && std::isfinite(w);
    };
}

auto map_tanh_sinh(double a, double b) {
    const double len = b - a;
    return [a, b, len](double t, double& x, double& w) {
        if (std::abs(t) > 6.0) return false;
        const double u = 1.5707963267948966 * std::sinh(t);
        // (1 -+ tanh u)/2 in logistic form, so abscissas keep full relative
        // precision against the nearer endpoint.
        if (u >= 0.0)
            x = b - len / (1.0 + std::exp(2.0 * u));
        else
            x = a + len / (1.0 + std::exp(-2.0 * u));
        if (x <= a || x >= b) return false;
        const double sech = 2.0 / (std::exp(u) + std::exp(-u));
        w = len * 0.5 * 1.5707963267948966 * std::cosh(t) * sech * sech;
        return std::isfinite(w);
    };
}

} // namespace

QuadratureResult integrate_periodic(const Integrand& f, double period,
                                    const QuadratureOptions& opts) {
    opts.validate();
    if (!(period > 0.0) || !std::isfinite(period))
        throw domain_error("integrate_periodic: period must be positive and finite");

    long n = opts.initial_nodes;
    const double h0 = period / double(n);
    long evals = 0;

    complex sum{};
    double l1 = 0.0;
    {
        std::vector<complex> vals =
            parallel_map(n, [&](long k) { return f(double(k) * h0); });
        evals += n;
        for (const complex& v : vals) {
            if (!finite_cx(v)) throw_nonfinite("integrate_periodic", 0.0);
            sum += v;
            l1 += std::abs(v);
        }
    }
    complex value = sum * h0;
    double value_l1 = l1 * h0;

    std::vector<double> deltas;
    while (evals + n <= opts.max_evaluations) {
        const double h = period / double(2 * n);
        std::vector<complex> vals =
            parallel_map(n, [&](long k) { return f(double(2 * k + 1) * h); });
        evals += n;
        complex odd_sum{};
        double odd_l1 = 0.0;
        for (long k = 0; k < n; ++k) {
            if (!finite_cx(vals[size_t(k)]))
                throw_nonfinite("integrate_periodic", double(2 * k + 1) * h);
            odd_sum += vals[size_t(k)];
            odd_l1 += std::abs(vals[size_t(k)]);
        }
        complex refined = 0.5 * value + h * odd_sum;
        double refined_l1 = 0.5 * value_l1 + h * odd_l1;

        double delta = std::abs(refined - value);
        deltas.push_back(delta);
        n *= 2;
        value = refined;
        value_l1 = refined_l1;
        double floor = 8.0 * kEps * value_l1;
        if (delta <= opts.target_rel_tol * std::abs(value) + floor)
            return {value, delta + 2.0 * kEps * value_l1, evals};
    }
    throw_no_convergence("integrate_periodic", evals, deltas);
}

QuadratureResult integrate_line(const Integrand& f, LineDomain domain,
                                const QuadratureOptions& opts) {
    if (domain == LineDomain::half_line)
        return de_integrate(f, map_exp_sinh(), 6.7, "integrate_line(half)", opts);
    return de_integrate(f, map_sinh_sinh(), 6.7, "integrate_line(full)", opts);
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw domain_error("integrate_finite: need finite a < b");
    return de_integrate(f, map_tanh_sinh(a, b), 6.0, "integrate_finite", opts);
}

QuadratureResult integrate_pv(const Integrand& f, const QuadratureOptions& opts,
                              double cut) {
    Integrand paired = [&f](double w) { return (f(w) - f(-w)) / w; };
    QuadratureResult r = integrate_pv_paired(paired, opts, cut);
    r.evaluations *= 2;
    return r;
}

QuadratureResult integrate_pv_paired(const Integrand& paired,
                                     const QuadratureOptions& opts, double cut) {
    if (cut == 0.0 || std::isinf(cut))
        return de_integrate(paired, map_exp_sinh(), 6.7, "integrate_pv", opts);
    if (!(cut > 0.0) || !std::isfinite(cut))
        throw domain_error("integrate_pv: cut must be positive, or 0 for the whole line");
    return de_integrate(paired, map_tanh_sinh(0.0, cut), 6.0, "integrate_pv", opts);
}

QuadratureResult sum_truncated(const std::function<complex(long)>& g,
                               SumDomain domain, double tail_tol) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw domain_error("sum_truncated: tail_tol out of (0, 1)");

    if (domain.kind == SumDomain::residues_mod) {
        if (domain.r < 1) throw domain_error("sum_truncated: residue modulus must be >= 1");
        complex s{};
        double l1 = 0.0;
        for (int m = 0; m < domain.r; ++m) {
            complex t = g(m);
            if (!finite_cx(t)) throw_nonfinite("sum_truncated", double(m));
            s += t;
            l1 += std::abs(t);
        }
        return {s, 2.0 * kEps * l1, domain.r};
    }

    constexpr long kMaxTerms = 2000;
    complex s = g(0);
    if (!finite_cx(s)) throw_nonfinite("sum_truncated", 0.0);
    double l1 = std::abs(s);
    long evals = 1;

    double prev_window = -1.0;
    int ok_windows = 0;
    for (long m = 1; 2 * m + 1 <= kMaxTerms; ++m) {
        complex tp = g(m), tm = g(-m);
        if (!finite_cx(tp) || !finite_cx(tm)) throw_nonfinite("sum_truncated", double(m));
        s += tp;
        s += tm;
        evals += 2;
        double window = std::abs(tp) + std::abs(tm);
        l1 += window;

        double scale = std::max({std::abs(s), l1 * kEps, 1e-300});
        double tail = window;
        if (prev_window > 0.0 && window < prev_window) {
            double rho = window / prev_window;
            tail = window * rho / (1.0 - rho);
        }
        if (window <= tail_tol * scale && tail <= tail_tol * scale) {
            if (++ok_windows >= 2)
                return {s, tail + 2.0 * kEps * l1, evals};
        } else {
            ok_windows = 0;
        }
        if (window > 0.0) prev_window = window;
    }
    std::ostringstream os;
    os << "sum_truncated: no convergence within " << kMaxTerms << " terms";
    throw convergence_error(os.str());
}

int max_threads() {
    int n = 1;
#ifdef YBE_HAVE_OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("YBE_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < n) n = int(v);
    }
    return n;
}

std::vector<complex> parallel_map(long n, const std::function<complex(long)>& fn) {
    std::vector<complex> out(static_cast<size_t>(n));
#ifdef YBE_HAVE_OPENMP
    if (n >= 64 && max_threads() > 1) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
        for (long i = 0; i < n; ++i) out[size_t(i)] = fn(i);
        return out;
    }
#endif
    for (long i = 0; i < n; ++i) out[size_t(i)] = fn(i);
    return out;
}

} // namespace ybe
