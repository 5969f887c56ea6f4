#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "zonal/asymptotics.hpp"
#include "zonal/errors.hpp"
#include "zonal/inclusion.hpp"
#include "zonal/stable_density.hpp"

namespace zonal::cli {

namespace {

using json = nlohmann::ordered_json;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// JSON has no inf/nan; keep them readable instead of collapsing to null.
json jnum(double x) {
    if (std::isfinite(x)) return x;
    return num(x);
}

json to_json(const ExtractionConfig& c) {
    return {{"radius", c.radius}, {"sample_count", c.sample_count}, {"max_order", c.max_order}};
}

json to_json(const InclusionCertificate& c) {
    json j;
    j["dominated"] = c.dominated;
    j["dominating"] = c.dominating;
    j["gamma_squared"] = jnum(c.gamma_squared);
    j["checked_order"] = c.checked_order;
    j["min_margin"] = jnum(c.min_margin);
    j["asymptotic_ratio"] = c.asymptotic_ratio ? jnum(*c.asymptotic_ratio) : json(nullptr);
    j["usable_orders"] = c.usable_orders;
    j["masked_orders"] = c.masked_orders;
    j["indeterminate_orders"] = c.indeterminate_orders;
    j["success"] = c.success;
    j["notes"] = c.notes;
    return j;
}

json to_json(const CMCertificate& c) {
    json j;
    j["gamma1"] = c.gamma1;
    j["sigma1"] = c.sigma1;
    j["gamma2"] = c.gamma2;
    j["sigma2"] = c.sigma2;
    j["c_squared"] = jnum(c.c_squared);
    j["max_ratio"] = jnum(c.max_ratio);
    j["min_difference"] = jnum(c.min_difference);
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["grid"] = c.grid;
    j["dropped_points"] = c.dropped_points;
    j["ratio_grows_toward_t_min"] = c.ratio_grows_toward_t_min;
    j["tail_ok"] = c.tail_ok;
    j["success"] = c.success;
    j["notes"] = c.notes;
    return j;
}

// A table that renders either as CSV or as {"columns": [...], "rows": [[...]]}.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add(std::vector<json> row) { rows_.push_back(std::move(row)); }

    [[nodiscard]] std::string render(Format format) const {
        if (format == Format::kJson) {
            json j;
            j["columns"] = columns_;
            j["rows"] = json::array();
            for (const auto& r : rows_) j["rows"].push_back(r);
            return j.dump(2) + "\n";
        }
        std::string s;
        for (std::size_t i = 0; i < columns_.size(); ++i) s += (i ? "," : "") + columns_[i];
        s += "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) s += ",";
                if (r[i].is_string()) {
                    s += r[i].get<std::string>();
                } else if (r[i].is_number_float()) {
                    s += num(r[i].get<double>());
                } else {
                    s += r[i].dump();
                }
            }
            s += "\n";
        }
        return s;
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<json>> rows_;
};

double ratio_at(const SeriesCoefficients& s, std::size_t n) {
    return n == 0 ? 0.0 : s.coeffs[n] * std::pow(static_cast<double>(n), 1.5);
}

// Kernels of the reference table and figure: Laplace plus N_1..N_4.
std::vector<std::pair<std::string, ZonalKernel>> reference_kernels(double beta) {
    std::vector<std::pair<std::string, ZonalKernel>> out;
    out.emplace_back("laplace", Laplace::with_c_tilde(1.0));
    for (int k = 1; k <= 4; ++k) out.emplace_back("N" + std::to_string(k), Ntk{k, beta});
    return out;
}

void note_beta(CommandResult& r, double beta) {
    if (beta != 0.0 && beta != 1.0) {
        r.notes.push_back("untabulated_beta: beta = " + num(beta) + " is outside the tabulated values {0, 1}");
    }
}

} // namespace

ZonalKernel KernelOptions::build() const {
    ZonalKernel k;
    if (kernel == "laplace") {
        k = Laplace::with_c_tilde(ctilde);
    } else if (kernel == "gaussian") {
        k = Gaussian{gauss_c};
    } else if (kernel == "exp-power") {
        k = ExpPower{gamma, sigma};
    } else if (kernel == "arccos0") {
        k = ArcCos0{};
    } else if (kernel == "arccos1") {
        k = ArcCos1{};
    } else if (kernel == "kappa1-iterate") {
        k = Kappa1Iterate{layers_k};
    } else if (kernel == "ntk") {
        k = Ntk{layers_k, beta};
    } else {
        throw UsageError("unknown kernel '" + kernel + "'");
    }
    validate(k);
    return k;
}

CommandResult cmd_coeffs(const GlobalOptions& global, const KernelOptions& options) {
    const ZonalKernel kernel = options.build();
    const auto series = cauchy_coefficients(kernel, global.config());
    Table table({"n", "coeff", "error_bound", "ratio_to_n_minus_3_2"});
    for (std::size_t n = 0; n <= series.max_order(); ++n) {
        table.add({n, series.coeffs[n], series.error_bound[n], ratio_at(series, n)});
    }
    CommandResult r;
    r.body = table.render(global.format);
    r.parameters["kernel"] = describe(kernel);
    r.parameters["config"] = to_json(global.config());
    if (options.kernel == "ntk") note_beta(r, options.beta);
    return r;
}

CommandResult cmd_table1(const GlobalOptions& global) {
    constexpr std::size_t n = 100;
    if (global.order < n) throw UsageError("table1 needs --order >= 100");
    Table table({"kernel", "beta", "n", "numeric", "theory", "abs_deviation", "rel_deviation"});
    for (double beta : {1.0, 0.0}) {
        for (const auto& [label, kernel] : reference_kernels(beta)) {
            // the Laplace row does not depend on beta
            if (label == "laplace" && beta == 0.0) continue;
            const auto series = cauchy_coefficients(kernel, global.config());
            const double numeric = ratio_at(series, n);
            const double theory = predicted_ratio(kernel).even_limit;
            const double dev = std::abs(numeric - theory);
            table.add({label, label == "laplace" ? json("") : json(beta), n, numeric, theory, dev, dev / theory});
        }
    }
    CommandResult r;
    r.body = table.render(global.format);
    r.parameters["n"] = n;
    r.parameters["laplace_c_tilde"] = 1.0;
    r.parameters["config"] = to_json(global.config());
    return r;
}

CommandResult cmd_figure1(const GlobalOptions& global, double beta, std::size_t max_n) {
    if (max_n == 0) throw UsageError("figure1 needs --max-n >= 1");
    if (max_n > 512) throw UsageError("figure1 supports --max-n <= 512");
    ExtractionConfig config = global.config();
    if (config.max_order < max_n) config.max_order = max_n;
    Table table({"kernel", "n", "ratio"});
    for (const auto& [label, kernel] : reference_kernels(beta)) {
        const auto series = cauchy_coefficients(kernel, config);
        for (std::size_t n = 1; n <= max_n; ++n) table.add({label, n, ratio_at(series, n)});
    }
    CommandResult r;
    r.body = table.render(global.format);
    r.parameters["beta"] = beta;
    r.parameters["max_n"] = max_n;
    r.parameters["config"] = to_json(config);
    note_beta(r, beta);
    return r;
}

CommandResult cmd_certify(const GlobalOptions& global, const CertifyOptions& o) {
    const ExtractionConfig config = global.config();
    json certs = json::array();
    bool ok = true;
    auto add = [&](const InclusionCertificate& c) {
        certs.push_back(to_json(c));
        ok = ok && c.success;
    };
    CommandResult r;
    r.parameters["pair"] = o.pair;

    if (o.pair == "laplace-ntk") {
        const auto report = theorem1_report(o.layers_k, o.beta, o.ctilde, config);
        add(report.ntk_in_laplace);
        add(report.laplace_in_ntk);
        r.parameters["layers_k"] = o.layers_k;
        r.parameters["beta"] = o.beta;
        r.parameters["ctilde"] = o.ctilde;
        note_beta(r, o.beta);
    } else if (o.pair == "exp-exp") {
        const ZonalKernel k1 = ExpPower{o.gamma1, o.sigma1};
        const ZonalKernel k2 = ExpPower{o.gamma2, o.sigma2};
        const auto s1 = cauchy_coefficients(k1, config);
        const auto s2 = cauchy_coefficients(k2, config);
        const auto p1 = predicted_decay(k1);
        const auto p2 = predicted_decay(k2);
        add(domination_certificate(s2, s1, std::pair{p2, p1}, Indeterminacy::kRecordStructuralZeros));
        add(domination_certificate(s1, s2, std::pair{p1, p2}, Indeterminacy::kRecordStructuralZeros));
        r.parameters["gamma1"] = o.gamma1;
        r.parameters["sigma1"] = o.sigma1;
        r.parameters["gamma2"] = o.gamma2;
        r.parameters["sigma2"] = o.sigma2;
    } else if (o.pair == "gauss-laplace") {
        const auto gauss = cauchy_coefficients(Gaussian{o.gauss_c}, config);
        const auto lap = cauchy_coefficients(Laplace::with_c_tilde(o.ctilde), config);
        add(domination_certificate(gauss, lap, std::nullopt, Indeterminacy::kRecordStructuralZeros));
        add(domination_certificate(lap, gauss, std::nullopt, Indeterminacy::kRecordStructuralZeros));
        r.parameters["c"] = o.gauss_c;
        r.parameters["ctilde"] = o.ctilde;
    } else {
        throw UsageError("unknown pair '" + o.pair + "' (laplace-ntk, exp-exp, gauss-laplace)");
    }
    r.parameters["config"] = to_json(config);

    json j;
    j["pair"] = o.pair;
    j["certificates"] = certs;
    j["success"] = ok;
    r.body = j.dump(2) + "\n";
    r.success = ok;
    return r;
}

CommandResult cmd_invlap(const GlobalOptions& global, const InvlapOptions& o) {
    if (o.a.has_value() == o.gamma.has_value()) throw UsageError("invlap needs exactly one of --a or --gamma");
    const double a = o.a ? *o.a : *o.gamma / 2.0;
    const double sigma = o.sigma;
    (void)tail_constant(a, sigma); // validates a and sigma up front

    std::vector<double> ts;
    if (o.t) {
        ts.push_back(*o.t);
    } else {
        if (!(o.tmin > 0.0 && o.tmax >= o.tmin) || o.points == 0) throw UsageError("invlap needs 0 < tmin <= tmax");
        ts = DensityGrid{o.tmin, o.tmax, o.points}.nodes();
    }

    Table table({"t", "f", "method", "cancellation_ratio", "tail_prediction", "status"});
    std::size_t guarded = 0;
    for (double t : ts) {
        const double tail = t > 0.0 ? tail_constant(a, sigma) * std::pow(t, -a - 1.0)
                                    : std::numeric_limits<double>::infinity();
        try {
            const auto v = density_scaled(a, sigma, t);
            table.add({t, v.value, to_string(v.method), v.cancellation_ratio, tail, "ok"});
        } catch (const LossOfPrecisionError&) {
            ++guarded;
            table.add({t, std::nan(""), to_string(DensityMethod::kSeries), std::nan(""), tail, "loss_of_precision"});
        } catch (const NonconvergenceError&) {
            ++guarded;
            table.add({t, std::nan(""), to_string(DensityMethod::kSeries), std::nan(""), tail, "nonconvergence"});
        }
    }
    CommandResult r;
    r.body = table.render(global.format);
    r.parameters["a"] = a;
    r.parameters["sigma"] = sigma;
    r.parameters["points"] = ts.size();
    if (guarded > 0) r.notes.push_back(std::to_string(guarded) + " rows rejected by the cancellation guard");
    return r;
}

CommandResult cmd_cm(const GlobalOptions&, const CmOptions& o) {
    const auto cert = cm_certificate(o.gamma1, o.sigma1, o.gamma2, o.sigma2, DensityGrid{o.tmin, o.tmax, o.points});
    CommandResult r;
    r.body = to_json(cert).dump(2) + "\n";
    r.success = cert.success;
    r.parameters["gamma1"] = o.gamma1;
    r.parameters["sigma1"] = o.sigma1;
    r.parameters["gamma2"] = o.gamma2;
    r.parameters["sigma2"] = o.sigma2;
    r.parameters["grid"] = {{"t_min", o.tmin}, {"t_max", o.tmax}, {"points", o.points}};
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zonal kernel coefficients, inclusion certificates and stable densities"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string format = "csv";
    app.add_option("--order", global.order, "maximum Taylor order")->capture_default_str();
    app.add_option("--radius", global.radius, "sampling circle radius")->capture_default_str();
    app.add_option("--samples", global.samples, "FFT length (power of two)")->capture_default_str();
    app.add_option("--out", global.out, "write output here and a run report next to it");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    KernelOptions kernel;
    auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of one kernel");
    coeffs->add_option("--kernel", kernel.kernel)
        ->check(CLI::IsMember({"laplace", "gaussian", "exp-power", "arccos0", "arccos1", "kappa1-iterate", "ntk"}))
        ->capture_default_str();
    coeffs->add_option("--ctilde", kernel.ctilde, "laplace: exp(-ctilde sqrt(1-u))")->capture_default_str();
    coeffs->add_option("--c", kernel.gauss_c, "gaussian: exp(-2c(1-u))")->capture_default_str();
    coeffs->add_option("--gamma", kernel.gamma)->capture_default_str();
    coeffs->add_option("--sigma", kernel.sigma)->capture_default_str();
    coeffs->add_option("--layers-k", kernel.layers_k, "ntk depth / kappa1 iterate count")->capture_default_str();
    coeffs->add_option("--beta", kernel.beta, "ntk bias")->capture_default_str();

    auto* table1 = app.add_subcommand("table1", "ratios at n = 100 against the predicted limits");

    double fig_beta = 1.0;
    std::size_t max_n = 100;
    auto* figure1 = app.add_subcommand("figure1", "ratio curves a_n n^{3/2} in long format");
    figure1->add_option("--beta", fig_beta)->capture_default_str();
    figure1->add_option("--max-n", max_n)->capture_default_str();

    CertifyOptions cert;
    auto* certify = app.add_subcommand("certify", "coefficient-domination certificates in both directions");
    certify->add_option("--pair", cert.pair)
        ->check(CLI::IsMember({"laplace-ntk", "exp-exp", "gauss-laplace"}))
        ->capture_default_str();
    certify->add_option("--layers-k", cert.layers_k)->capture_default_str();
    certify->add_option("--beta", cert.beta)->capture_default_str();
    certify->add_option("--ctilde", cert.ctilde)->capture_default_str();
    certify->add_option("--c", cert.gauss_c, "gaussian c")->capture_default_str();
    certify->add_option("--gamma1", cert.gamma1)->capture_default_str();
    certify->add_option("--sigma1", cert.sigma1)->capture_default_str();
    certify->add_option("--gamma2", cert.gamma2)->capture_default_str();
    certify->add_option("--sigma2", cert.sigma2)->capture_default_str();

    InvlapOptions inv;
    auto* invlap = app.add_subcommand("invlap", "inverse Laplace transform of exp(-s^a / sigma)");
    invlap->add_option("--a", inv.a);
    invlap->add_option("--gamma", inv.gamma, "a = gamma / 2");
    invlap->add_option("--sigma", inv.sigma)->capture_default_str();
    invlap->add_option("--t", inv.t, "single point");
    invlap->add_option("--tmin", inv.tmin)->capture_default_str();
    invlap->add_option("--tmax", inv.tmax)->capture_default_str();
    invlap->add_option("--points", inv.points, "log-spaced grid size")->capture_default_str();

    CmOptions cm;
    auto* cmd_cm_app = app.add_subcommand("cm", "complete-monotonicity difference certificate");
    cmd_cm_app->add_option("--gamma1", cm.gamma1)->capture_default_str();
    cmd_cm_app->add_option("--sigma1", cm.sigma1)->capture_default_str();
    cmd_cm_app->add_option("--gamma2", cm.gamma2)->capture_default_str();
    cmd_cm_app->add_option("--sigma2", cm.sigma2)->capture_default_str();
    cmd_cm_app->add_option("--tmin", cm.tmin)->capture_default_str();
    cmd_cm_app->add_option("--tmax", cm.tmax)->capture_default_str();
    cmd_cm_app->add_option("--points", cm.points)->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    global.format = format == "json" ? Format::kJson : Format::kCsv;

    std::string command;
    CommandResult result;
    try {
        if (*coeffs) {
            command = "coeffs";
            result = cmd_coeffs(global, kernel);
        } else if (*table1) {
            command = "table1";
            result = cmd_table1(global);
        } else if (*figure1) {
            command = "figure1";
            result = cmd_figure1(global, fig_beta, max_n);
        } else if (*certify) {
            command = "certify";
            result = cmd_certify(global, cert);
        } else if (*invlap) {
            command = "invlap";
            result = cmd_invlap(global, inv);
        } else {
            command = "cm";
            result = cmd_cm(global, cm);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedKernelError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 1;
    }

    for (const auto& note : result.notes) err << "note: " << note << "\n";

    if (global.out.empty()) {
        out << result.body;
    } else {
        std::ofstream file(global.out, std::ios::binary);
        file << result.body;
        if (!file) {
            err << "cannot write " << global.out << "\n";
            return 1;
        }
        json report;
        report["command"] = command;
        report["parameters"] = result.parameters;
        report["outputs"] = {global.out};
        report["status"] = result.success ? "success" : "failure";
        report["notes"] = result.notes;
        std::ofstream(global.out + ".report.json", std::ios::binary) << report.dump(2) << "\n";
    }
    return result.success ? 0 : 1;
}

} // namespace zonal::cli
