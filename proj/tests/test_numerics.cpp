#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "ybe/numerics.hpp"

using ybe::complex;
using ybe::Integrand;
using ybe::integrate_finite;
using ybe::integrate_line;
using ybe::integrate_periodic;
using ybe::integrate_pv;
using ybe::integrate_pv_paired;
using ybe::LineDomain;
using ybe::QuadratureOptions;
using ybe::QuadratureResult;
using ybe::sum_truncated;
using ybe::SumDomain;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct ClosedForm {
    const char* name;
    QuadratureResult got;
    complex exact;
};

complex re(double x) { return complex(x, 0.0); }

// Series oracle for PV int_{-1}^{1} e^w / w dw = 2 * sum 1/((2k+1)(2k+1)!).
double pv_exp_over_w_series() {
    double s = 0.0, fact = 1.0;
    for (int n = 1; n <= 25; ++n) {
        fact *= n;
        if (n % 2 == 1) s += 1.0 / (n * fact);
    }
    return 2.0 * s;
}

// Direct oracle for the theta constant sum_{m} q^{m^2}.
double theta_constant(double q) {
    double s = 1.0;
    for (int m = 1; m <= 40; ++m) s += 2.0 * std::pow(q, double(m) * m);
    return s;
}

std::vector<ClosedForm> closed_form_battery() {
    std::vector<ClosedForm> out;
    auto addp = [&](const char* name, Integrand f, double period, complex exact) {
        out.push_back({name, integrate_periodic(f, period), exact});
    };
    auto addl = [&](const char* name, Integrand f, LineDomain d, complex exact) {
        out.push_back({name, integrate_line(f, d), exact});
    };

    const double pi = kTwoPi / 2.0;
    addp("const 1", [](double) { return re(1.0); }, kTwoPi, re(kTwoPi));
    addp("exp(3ix)", [](double x) { return std::exp(complex(0.0, 3.0 * x)); }, kTwoPi,
         re(0.0));
    addp("1/(2-cos)", [](double x) { return re(1.0 / (2.0 - std::cos(x))); }, kTwoPi,
         re(kTwoPi / std::sqrt(3.0)));
    addp("exp(cos)cos(sin)",
         [](double x) { return re(std::exp(std::cos(x)) * std::cos(std::sin(x))); }, kTwoPi,
         re(kTwoPi));
    addp("cos^2", [](double x) { return re(std::cos(x) * std::cos(x)); }, kTwoPi, re(pi));
    addp("Poisson kernel a=0.4",
         [](double x) { return re(1.0 / (1.0 - 0.8 * std::cos(x) + 0.16)); }, kTwoPi,
         re(kTwoPi / (1.0 - 0.16)));
    addp("period pi", [](double x) { return re(1.0 / (2.0 - std::cos(2.0 * x))); }, pi,
         re(pi / std::sqrt(3.0)));

    addl("gaussian", [](double x) { return re(std::exp(-x * x)); }, LineDomain::full_line,
         re(std::sqrt(pi)));
    addl("x^2 gaussian", [](double x) { return re(x * x * std::exp(-x * x)); },
         LineDomain::full_line, re(0.5 * std::sqrt(pi)));
    addl("sech", [](double x) { return re(1.0 / std::cosh(x)); }, LineDomain::full_line,
         re(pi));
    addl("gaussian cos(2x)", [](double x) { return re(std::exp(-x * x) * std::cos(2.0 * x)); },
         LineDomain::full_line, re(std::sqrt(pi) * std::exp(-1.0)));

    addl("exp decay", [](double x) { return re(std::exp(-x)); }, LineDomain::half_line,
         re(1.0));
    addl("x^3 exp", [](double x) { return re(x * x * x * std::exp(-x)); },
         LineDomain::half_line, re(6.0));
    addl("exp/sqrt", [](double x) { return re(std::exp(-x) / std::sqrt(x)); },
         LineDomain::half_line, re(std::sqrt(pi)));
    addl("sinh(0.3x)exp(-x)/x",
         [](double x) { return re(std::sinh(0.3 * x) * std::exp(-x) / x); },
         LineDomain::half_line, re(std::atanh(0.3)));
    addl("x/(e^x-1)", [](double x) { return re(x / std::expm1(x)); }, LineDomain::half_line,
         re(pi * pi / 6.0));

    out.push_back({"1/sqrt(x) on (0,1)",
                   integrate_finite([](double x) { return re(1.0 / std::sqrt(x)); }, 0.0, 1.0),
                   re(2.0)});
    out.push_back({"sin on (0,pi)",
                   integrate_finite([](double x) { return re(std::sin(x)); }, 0.0, pi),
                   re(2.0)});
    out.push_back({"1/(1+x^2) on (-1,1)",
                   integrate_finite([](double x) { return re(1.0 / (1.0 + x * x)); }, -1.0, 1.0),
                   re(pi / 2.0)});

    out.push_back({"pv exp(w)/w on (-1,1)",
                   integrate_pv([](double w) { return re(std::exp(w)); }, {}, 1.0),
                   re(pv_exp_over_w_series())});
    out.push_back({"pv even numerator",
                   integrate_pv([](double w) { return re(std::exp(-w * w)); }, {}, 0.0),
                   re(0.0)});
    out.push_back({"pv w gaussian",
                   integrate_pv([](double w) { return re(w * std::exp(-w * w)); }, {}, 0.0),
                   re(std::sqrt(pi))});

    out.push_back({"sum q^|m|",
                   sum_truncated([](long m) { return re(std::pow(0.5, double(std::labs(m)))); },
                                 SumDomain::integers()),
                   re(3.0)});
    out.push_back({"sum residues mod 3",
                   sum_truncated([](long m) { return re(double(m)); }, SumDomain::residues(3)),
                   re(3.0)});
    out.push_back({"sum q^(m^2)",
                   sum_truncated(
                       [](long m) { return re(std::pow(0.3, double(m) * double(m))); },
                       SumDomain::integers()),
                   re(theta_constant(0.3))});
    return out;
}

} // namespace

TEST_CASE("closed form battery: accuracy and error honesty") {
    auto battery = closed_form_battery();
    REQUIRE(battery.size() >= 20);
    for (const auto& c : battery) {
        CAPTURE(c.name);
        double err = std::abs(c.got.value - c.exact);
        CHECK(c.got.evaluations > 0);
        CHECK(c.got.err_est >= 0.0);
        CHECK(err <= 10.0 * c.got.err_est);
        double scale = std::max(std::abs(c.exact), 1.0);
        CHECK(err <= 1e-8 * scale);
    }
}

TEST_CASE("option validation") {
    QuadratureOptions bad;
    bad.target_rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate_periodic([](double) { return re(1.0); }, kTwoPi, bad),
                    ybe::domain_error);
    bad = {};
    bad.target_rel_tol = 0.5;
    CHECK_THROWS_AS(integrate_line([](double x) { return re(std::exp(-x)); },
                                   LineDomain::half_line, bad),
                    ybe::domain_error);
    bad = {};
    bad.max_evaluations = 0;
    CHECK_THROWS_AS(integrate_line([](double x) { return re(std::exp(-x)); },
                                   LineDomain::half_line, bad),
                    ybe::domain_error);
    CHECK_THROWS_AS(integrate_periodic([](double) { return re(1.0); }, 0.0),
                    ybe::domain_error);
    CHECK_THROWS_AS(integrate_finite([](double) { return re(1.0); }, 1.0, 1.0),
                    ybe::domain_error);
    CHECK_THROWS_AS(integrate_pv([](double) { return re(1.0); }, {}, -2.0),
                    ybe::domain_error);
    CHECK_THROWS_AS(sum_truncated([](long) { return re(1.0); }, SumDomain::residues(0)),
                    ybe::domain_error);
    CHECK_THROWS_AS(sum_truncated([](long) { return re(1.0); }, SumDomain::integers(), 2.0),
                    ybe::domain_error);
}

TEST_CASE("non-convergence carries refinement history") {
    QuadratureOptions tight;
    tight.max_evaluations = 300;
    tight.target_rel_tol = 1e-13;
    try {
        integrate_periodic([](double x) { return re(1.0 / (1.001 - std::cos(x))); }, kTwoPi,
                           tight);
        FAIL("expected convergence_error");
    } catch (const ybe::convergence_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("refinement deltas") != std::string::npos);
    }
    CHECK_THROWS_AS(integrate_line([](double x) { return re(std::exp(-x)); },
                                   LineDomain::half_line, tight),
                    ybe::convergence_error);
}

TEST_CASE("non-finite integrand values are reported") {
    CHECK_THROWS_AS(integrate_line([](double x) { return re(std::sqrt(x - 2.0)); },
                                   LineDomain::half_line),
                    ybe::convergence_error);
    CHECK_THROWS_AS(sum_truncated(
                        [](long m) {
                            return m == 5 ? re(std::numeric_limits<double>::quiet_NaN())
                                          : re(std::pow(0.5, double(std::labs(m))));
                        },
                        SumDomain::integers()),
                    ybe::convergence_error);
}

TEST_CASE("slowly decaying sums hit the term cap") {
    CHECK_THROWS_AS(sum_truncated([](long m) { return re(1.0 / double(std::labs(m) + 1)); },
                                  SumDomain::integers()),
                    ybe::convergence_error);
}

TEST_CASE("pv paired form matches the wrapped form") {
    auto direct = integrate_pv([](double w) { return re(std::exp(w)); }, {}, 1.0);
    auto paired = integrate_pv_paired(
        [](double w) { return re(2.0 * std::sinh(w) / w); }, {}, 1.0);
    CHECK(std::abs(direct.value - paired.value) <= 1e-10);
    CHECK(direct.evaluations == 2 * paired.evaluations);
}

TEST_CASE("results are identical for any thread count") {
    auto run = [] {
        std::vector<QuadratureResult> v;
        v.push_back(integrate_periodic(
            [](double x) { return re(1.0 / (2.0 - std::cos(x))); }, kTwoPi));
        v.push_back(integrate_line([](double x) { return re(std::exp(-x * x)); },
                                   LineDomain::full_line));
        v.push_back(integrate_line(
            [](double x) { return re(std::sinh(0.3 * x) * std::exp(-x) / x); },
            LineDomain::half_line));
        v.push_back(integrate_pv([](double w) { return re(std::exp(w)); }, {}, 1.0));
        return v;
    };
    setenv("YBE_LAB_THREADS", "1", 1);
    auto serial = run();
    setenv("YBE_LAB_THREADS", "7", 1);
    auto parallel = run();
    unsetenv("YBE_LAB_THREADS");

    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CAPTURE(i);
        CHECK(std::memcmp(&serial[i].value, &parallel[i].value, sizeof(complex)) == 0);
        CHECK(serial[i].evaluations == parallel[i].evaluations);
        CHECK(serial[i].err_est == parallel[i].err_est);
    }
}

TEST_CASE("parallel_map preserves slot order") {
    auto vals = ybe::parallel_map(257, [](long i) { return complex(double(i), -double(i)); });
    REQUIRE(vals.size() == 257);
    for (long i = 0; i < 257; ++i) CHECK(vals[size_t(i)] == complex(double(i), -double(i)));
}
