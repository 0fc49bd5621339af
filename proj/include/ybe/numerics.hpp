#ifndef YBE_NUMERICS_HPP
#define YBE_NUMERICS_HPP

#include <functional>
#include <vector>

#include "ybe/types.hpp"

namespace ybe {

struct QuadratureResult {
    complex value{};
    double err_est = 0.0;
    long evaluations = 0;
};

struct QuadratureOptions {
    double target_rel_tol = 1e-9;
    long max_evaluations = 200000;
    int initial_nodes = 64;

    void validate() const {
        if (!(target_rel_tol > 1e-14 && target_rel_tol < 1e-2))
            throw domain_error("QuadratureOptions: target_rel_tol out of (1e-14, 1e-2)");
        if (max_evaluations <= 0 || initial_nodes <= 0)
            throw domain_error("QuadratureOptions: limits must be positive");
    }
};

using Integrand = std::function<complex(double)>;

enum class LineDomain { half_line, full_line };

// Equal-spaced trapezoid over one period with node doubling; spectrally
// accurate for periodic analytic integrands.
QuadratureResult integrate_periodic(const Integrand& f, double period,
                                    const QuadratureOptions& opts = {});

// Double-exponential (tanh-sinh family) quadrature: exp-sinh on (0, inf),
// sinh-sinh on (-inf, inf). Integrands must decay at least exponentially.
QuadratureResult integrate_line(const Integrand& f, LineDomain domain,
                                const QuadratureOptions& opts = {});

// Finite interval (a, b) via tanh-sinh; tolerates integrable endpoint
// singularities.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

// Principal value of \int f(w)/w dw over (-cut, cut), cut = inf for the
// whole line. Symmetric excision: w and -w are paired analytically, so the
// engine integrates (f(w) - f(-w))/w over (0, cut).
QuadratureResult integrate_pv(const Integrand& f, const QuadratureOptions& opts = {},
                              double cut = 0.0 /* 0 => infinite */);

// Same engine when the caller already holds the paired combination
// g(w) = (f(w) - f(-w))/w in a cancellation-free form.
QuadratureResult integrate_pv_paired(const Integrand& paired,
                                     const QuadratureOptions& opts = {},
                                     double cut = 0.0);

struct SumDomain {
    enum Kind { all_integers, residues_mod } kind = all_integers;
    int r = 0;

    static SumDomain integers() { return {all_integers, 0}; }
    static SumDomain residues(int r) { return {residues_mod, r}; }
};

// Bilateral sum over symmetric windows [-M, M] with a geometric tail bound,
// or an exact finite sum over residues 0..r-1.
QuadratureResult sum_truncated(const std::function<complex(long)>& g,
                               SumDomain domain, double tail_tol = 1e-12);

// --- deterministic parallel helpers ------------------------------------

// Effective worker count: OpenMP's limit capped by YBE_LAB_THREADS (if set).
int max_threads();

// Evaluate fn(0..n-1) into a vector, possibly in parallel. Output slots are
// independent, so the result is identical for any thread count; reductions
// over the result must run in index order to stay deterministic.
std::vector<complex> parallel_map(long n, const std::function<complex(long)>& fn);

} // namespace ybe

#endif
