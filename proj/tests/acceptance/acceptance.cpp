// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria, exit 1 if any fails
//   acceptance <n>        criterion n only

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zonal/asymptotics.hpp"
#include "zonal/errors.hpp"
#include "zonal/inclusion.hpp"
#include "zonal/stable_density.hpp"

using namespace zonal;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
            pass = false;
        }
    }
};

std::string fmt(double x, int digits = 6) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double ratio(const SeriesCoefficients& s, std::size_t n) { return s.coeffs[n] * std::pow(static_cast<double>(n), 1.5); }

struct Cell {
    const char* label;
    ZonalKernel kernel;
    double numeric; // printed value at n = 100
    double theory;  // printed limit
};

std::vector<Cell> table_cells() {
    return {
        {"laplace", Laplace::with_c_tilde(1.0), 0.28244, 0.282095},
        {"N1 beta=1", Ntk{1, 1.0}, 0.261069, 0.253975},
        {"N2 beta=1", Ntk{2, 1.0}, 0.776014, 0.761924},
        {"N3 beta=1", Ntk{3, 1.0}, 1.54607, 1.52385},
        {"N4 beta=1", Ntk{4, 1.0}, 2.56559, 2.53975},
        {"N1 beta=0", Ntk{1, 0.0}, 0.261069, 0.253975},
        {"N2 beta=0", Ntk{2, 0.0}, 0.457426, 0.444455},
        {"N3 beta=0", Ntk{3, 0.0}, 0.821694, 0.800218},
        {"N4 beta=0", Ntk{4, 0.0}, 1.32472, 1.29531},
    };
}

Outcome table_reproduction() {
    Outcome o;
    double worst_numeric = 0.0, worst_theory = 0.0;
    for (const auto& cell : table_cells()) {
        const auto s = cauchy_coefficients(cell.kernel);
        const double numeric = ratio(s, 100);
        const double theory = predicted_ratio(cell.kernel).even_limit;
        worst_numeric = std::max(worst_numeric, std::abs(numeric - cell.numeric));
        worst_theory = std::max(worst_theory, std::abs(theory - cell.theory));
        o.require(std::abs(numeric - cell.numeric) <= 2e-3, std::string(cell.label) + " numeric " + fmt(numeric));
        o.require(std::abs(theory - cell.theory) <= 1e-5, std::string(cell.label) + " theory " + fmt(theory));
    }
    o.detail << "max |numeric dev| " << fmt(worst_numeric, 3) << ", max |theory dev| "
             << fmt(worst_theory, 3);
    return o;
}

Outcome figure_trend() {
    Outcome o;
    double worst = 0.0, worst_parity = 0.0;
    for (const auto& cell : table_cells()) {
        const auto s = cauchy_coefficients(cell.kernel);
        const auto prediction = predicted_ratio(cell.kernel);
        const double rel = std::abs(ratio(s, 400) - prediction.even_limit) / prediction.even_limit;
        worst = std::max(worst, rel);
        o.require(rel <= 0.02, std::string(cell.label) + " n=400 off by " + fmt(rel, 3));
        const bool collapses =
            std::holds_alternative<Laplace>(cell.kernel) || std::get<Ntk>(cell.kernel).beta == 1.0;
        if (collapses) {
            const auto d = ratio_diagnostics(s);
            const double gap = std::abs(d.odd_tail_mean - d.even_tail_mean) / d.even_tail_mean;
            worst_parity = std::max(worst_parity, gap);
            o.require(gap <= 0.01, std::string(cell.label) + " parity gap " + fmt(gap, 3));
        }
    }
    o.detail << "max rel dev at n=400 " << fmt(worst, 3) << ", max parity gap "
             << fmt(worst_parity, 3);
    return o;
}

Outcome exponent_recovery() {
    Outcome o;
    std::vector<ZonalKernel> kernels{Laplace{1.0}};
    for (int k = 1; k <= 4; ++k) {
        for (double beta : {0.0, 1.0}) kernels.emplace_back(Ntk{k, beta});
    }
    double lo = 0.0, hi = -10.0;
    for (const auto& k : kernels) {
        const double e = ratio_diagnostics(cauchy_coefficients(k)).exponent_estimate;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        o.require(e >= -1.55 && e <= -1.45, describe(k) + " exponent " + fmt(e, 4));
    }
    o.detail << "n^{-3/2} family in [" << fmt(lo, 4) << ", " << fmt(hi, 4) << "]";
    for (double gamma : {0.5, 1.5}) {
        const double e = ratio_diagnostics(cauchy_coefficients(ExpPower{gamma, 1.0})).exponent_estimate;
        const double target = -gamma / 2.0 - 1.0;
        o.require(std::abs(e - target) <= 0.07, "exp_power gamma=" + fmt(gamma) + " exponent " + fmt(e, 4));
        o.detail << ", exp_power(" << fmt(gamma) << ") " << fmt(e, 4) << " vs " << fmt(target, 4);
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const ExtractionConfig config{0.99, std::size_t{1} << 15, 256};
    double worst = 0.0;
    for (const ZonalKernel& k : std::vector<ZonalKernel>{ArcCos0{}, ArcCos1{}, Laplace{1.0}, Gaussian{0.5},
                                                         ExpPower{0.5, 1.0}, ExpPower{1.5, 1.0}, Ntk{1, 0.0},
                                                         Ntk{1, 1.0}}) {
        const auto fft = cauchy_coefficients(k, config);
        const auto exact = closed_form_series(k, 256);
        double w = 0.0;
        for (std::size_t n = 0; n <= 256; ++n) {
            w = std::max(w, std::abs(fft.coeffs[n] - exact[n]) / std::max(1e-10, 3.0 * fft.error_bound[n]));
        }
        worst = std::max(worst, w);
        o.require(w <= 1.0, describe(k) + " closed-form mismatch x" + fmt(w, 3));
    }
    double worst_radius = 0.0;
    for (int k = 2; k <= 5; ++k) {
        for (double beta : {0.0, 1.0}) {
            const auto a = cauchy_coefficients(Ntk{k, beta}, ExtractionConfig{0.99, std::size_t{1} << 15, 512});
            const auto b = cauchy_coefficients(Ntk{k, beta}, ExtractionConfig{0.985, std::size_t{1} << 15, 512});
            double w = 0.0;
            for (std::size_t n = 0; n <= 512; ++n) {
                w = std::max(w, std::abs(a.coeffs[n] - b.coeffs[n]) / (3.0 * (a.error_bound[n] + b.error_bound[n])));
            }
            worst_radius = std::max(worst_radius, w);
            o.require(w <= 1.0, describe(Ntk{k, beta}) + " two-radius mismatch x" + fmt(w, 3));
        }
    }
    o.detail << "worst closed-form error/tolerance " << fmt(worst, 3)
             << ", worst two-radius error/tolerance " << fmt(worst_radius, 3);
    return o;
}

Outcome endpoint_identities() {
    Outcome o;
    double worst = 0.0;
    for (int k = 1; k <= 5; ++k) {
        for (double beta : {0.0, 1.0}) {
            const ZonalKernel kernel = Ntk{k, beta};
            const auto s = cauchy_coefficients(kernel);
            const double at_one = (k + 1) * (1.0 + beta * beta);
            for (auto [endpoint, target] : {std::pair{Endpoint::kPlusOne, at_one},
                                            std::pair{Endpoint::kMinusOne, ntk_at_minus_one(k, beta)}}) {
                const auto e = endpoint_sum(s, endpoint);
                const double tol = 0.1 * std::abs(e.tail) + 1e-9;
                const double err = std::abs(e.extrapolated - target);
                worst = std::max(worst, err / tol);
                o.require(err <= tol, describe(kernel) + (endpoint == Endpoint::kPlusOne ? " at +1" : " at -1") +
                                          " error " + fmt(err, 3));
            }
            o.require(value_at_one(kernel) == at_one, describe(kernel) + " K(1)");
        }
    }
    o.detail << "worst error/tolerance " << fmt(worst, 3);
    return o;
}

bool rescan(const InclusionCertificate& c, const SeriesCoefficients& b, const SeriesCoefficients& a) {
    for (std::size_t n = 0; n <= c.checked_order; ++n) {
        if (std::find(c.indeterminate_orders.begin(), c.indeterminate_orders.end(), n) != c.indeterminate_orders.end()) {
            continue;
        }
        if (c.gamma_squared * a.coeffs[n] - b.coeffs[n] < -10.0 * (c.gamma_squared * a.error_bound[n] + b.error_bound[n])) {
            return false;
        }
    }
    return true;
}

Outcome ntk_laplace_certificates() {
    Outcome o;
    const double c_tilde = std::numbers::sqrt2;
    const auto lap = cauchy_coefficients(Laplace::with_c_tilde(c_tilde));
    for (int k = 1; k <= 5; ++k) {
        for (double beta : {0.0, 1.0}) {
            const auto r = theorem1_report(k, beta, c_tilde);
            const auto ntk = cauchy_coefficients(Ntk{k, beta});
            const std::string tag = describe(Ntk{k, beta});
            o.require(r.both_succeed(), tag + " certificate failed");
            o.require(rescan(r.ntk_in_laplace, ntk, lap), tag + " re-scan (NTK in Laplace)");
            o.require(rescan(r.laplace_in_ntk, lap, ntk), tag + " re-scan (Laplace in NTK)");
            const bool expect_odd_gap = k == 1 && beta == 0.0;
            const auto& ind = r.laplace_in_ntk.indeterminate_orders;
            if (expect_odd_gap) {
                const bool all_odd = std::all_of(ind.begin(), ind.end(), [](std::size_t n) { return n % 2 == 1; });
                const bool flagged = std::any_of(r.laplace_in_ntk.notes.begin(), r.laplace_in_ntk.notes.end(),
                                                 [](const std::string& s) { return s.find("structurally") != std::string::npos; });
                o.require(!ind.empty() && all_odd && flagged, tag + " odd-order indeterminacy not flagged");
                o.detail << tag << " flags " << ind.size() << " odd indeterminate orders";
            } else {
                o.require(ind.empty(), tag + " unexpected indeterminate orders");
            }
        }
    }
    o.detail << ", 10 configurations both ways";
    return o;
}

double resolvable_t_min(double a) {
    double t = 1.0;
    for (;;) {
        try {
            (void)density_series(a, t * 0.98);
        } catch (const LossOfPrecisionError&) {
            return t;
        }
        t *= 0.98;
    }
}

Outcome inverse_laplace() {
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.5 * std::pow(100.0, i / 400.0);
        const double exact = std::pow(t, -1.5) * std::exp(-0.25 / t) / (2.0 * std::sqrt(pi));
        worst = std::max(worst, std::abs(density_series(0.5, t).value - exact) / exact);
    }
    o.require(worst <= 1e-8, "closed form rel error " + fmt(worst, 3));
    o.detail << "closed form rel error " << fmt(worst, 3) << "; tail products";

    const double t = 1e4;
    for (auto [a, label] : {std::pair{1.0 / 3.0, "1/3"}, std::pair{0.5, "1/2"}, std::pair{2.0 / 3.0, "2/3"},
                            std::pair{0.75, "3/4"}}) {
        const double product = density_series(a, t).value * std::pow(t, a + 1.0) * (-gamma_real(-a));
        o.detail << " " << label << ":" << fmt(product, 6);
        o.require(product >= 0.99 && product <= 1.01, std::string("tail product a=") + label + " = " + fmt(product, 6));
    }

    const double lo = resolvable_t_min(0.5);
    o.detail << "; round trip";
    for (double s : {0.5, 1.0, 2.0}) {
        auto integrand = [s](double x) {
            const double tt = std::exp(x);
            return std::exp(-s * tt) * density_series(0.5, tt).value * tt;
        };
        const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, std::log(lo), std::log(400.0), 12, 1e-12);
        const double rel = std::abs(value - std::exp(-std::sqrt(s))) / std::exp(-std::sqrt(s));
        o.detail << " s=" << fmt(s) << ":" << fmt(rel, 2);
        o.require(rel <= 0.01, "round trip s=" + fmt(s) + " rel error " + fmt(rel, 3));
    }
    return o;
}

Outcome cm_certificates() {
    Outcome o;
    for (auto [g1, g2] : {std::pair{1.0, 1.5}, std::pair{0.5, 1.0}}) {
        const auto c = cm_certificate(g1, 1.0, g2, 1.0);
        const std::string tag = "(" + fmt(g1) + ", " + fmt(g2) + ")";
        o.require(c.success && c.min_difference >= 0.0 && c.tail_ok, tag + " certificate failed");
        o.detail << tag << " c^2=" << fmt(c.c_squared, 4) << " on [" << fmt(c.t_min, 3)
                 << ", " << fmt(c.t_max, 3) << "]; ";
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "ratio table at n = 100", table_reproduction},
        {2, "ratio curves converge at n = 400", figure_trend},
        {3, "decay exponent recovery", exponent_recovery},
        {4, "oracle equivalence", oracle_equivalence},
        {5, "endpoint identities", endpoint_identities},
        {6, "NTK / Laplace inclusion certificates", ntk_laplace_certificates},
        {7, "inverse Laplace series", inverse_laplace},
        {8, "complete-monotonicity certificates", cm_certificates},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;

    int failed = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.require(false, std::string("threw: ") + e.what());
        }
        std::string line = o.detail.str();
        if (!o.failures.empty()) {
            line += " | failed:";
            for (const auto& f : o.failures) line += " [" + f + "]";
        }
        std::printf("criterion %d %-38s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", line.c_str());
        failed += o.pass ? 0 : 1;
    }
    if (only == 0) {
        std::printf("note 9: exact RKHS equality is not numerically provable; criteria 6 and 8 are finite-order "
                    "certificates with asymptotic corroboration\n");
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
