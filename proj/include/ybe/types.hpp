#ifndef YBE_TYPES_HPP
#define YBE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ybe {

using complex = std::complex<double>;

// Thrown when an input violates a documented precondition (bad modulus,
// strip violation, malformed config, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an evaluation lands too close to a pole of the function.
// Poles are reported as errors, never as large finite values, so that a
// failed identity check can be told apart from a pole hit.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an iterative scheme (quadrature refinement, truncated sum)
// fails to reach its target within the evaluation budget.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed function value together with a certified bound on the error
// committed by truncating the defining product/sum/integral.
struct SpecialValue {
    complex value{};
    double trunc_bound = 0.0;
};

// A base of an infinite q-product, strictly inside the unit disk and
// bounded away from the unit circle where the products stop converging
// at double precision.
class Modulus {
  public:
    explicit Modulus(complex v) : v_(v) {
        if (!(std::abs(v) < 1.0 - 1e-12))
            throw domain_error("Modulus: |q| must be < 1 - 1e-12, got |q| = " +
                               std::to_string(std::abs(v)));
    }
    Modulus(double v) : Modulus(complex(v, 0.0)) {}
    complex value() const { return v_; }
    double abs() const { return std::abs(v_); }

  private:
    complex v_;
};

// Quasi-period pair (omega1, omega2) of the hyperbolic gamma function.
// Accepted when both real parts are positive or both imaginary parts are
// strictly positive; that covers the representations implemented here.
struct PeriodPair {
    complex omega1;
    complex omega2;

    PeriodPair(complex w1, complex w2) : omega1(w1), omega2(w2) {
        if (omega1 == complex(0.0) || omega2 == complex(0.0))
            throw domain_error("PeriodPair: periods must be nonzero");
        const bool re_pos = omega1.real() > 0.0 && omega2.real() > 0.0;
        const bool im_pos = omega1.imag() > 0.0 && omega2.imag() > 0.0;
        if (!re_pos && !im_pos)
            throw domain_error(
                "PeriodPair: need Re(omega1),Re(omega2) > 0 or "
                "Im(omega1),Im(omega2) > 0");
    }
};

// Order of the cyclic quotient in the lens-space constructions.
class LensOrder {
  public:
    explicit LensOrder(int r) : r_(r) {
        if (r < 1) throw domain_error("LensOrder: r must be >= 1");
    }
    int r() const { return r_; }

  private:
    int r_;
};

// m reduced to the canonical residue [m]_r in {0, ..., r-1}.
inline int mod_r(long long m, int r) {
    long long v = m % r;
    if (v < 0) v += r;
    return static_cast<int>(v);
}

} // namespace ybe

#endif
