#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonal/kernel.hpp"
#include "zonal/series.hpp"

namespace zonal::cli {

enum class Format { kCsv, kJson };

struct GlobalOptions {
    std::size_t order = 512;
    double radius = 0.99;
    std::size_t samples = std::size_t{1} << 15;
    std::string out;
    Format format = Format::kCsv;

    [[nodiscard]] ExtractionConfig config() const { return {radius, samples, order}; }
};

struct KernelOptions {
    std::string kernel = "laplace";
    double ctilde = 1.4142135623730951;
    double gauss_c = 0.5;
    double gamma = 1.0;
    double sigma = 1.0;
    int layers_k = 1;
    double beta = 0.0;

    [[nodiscard]] ZonalKernel build() const;
};

struct CertifyOptions {
    std::string pair = "laplace-ntk";
    int layers_k = 1;
    double beta = 0.0;
    double ctilde = 1.4142135623730951;
    double gauss_c = 0.5;
    double gamma1 = 0.5, sigma1 = 1.0;
    double gamma2 = 1.5, sigma2 = 1.0;
};

struct InvlapOptions {
    std::optional<double> a;
    std::optional<double> gamma;
    double sigma = 1.0;
    std::optional<double> t;
    double tmin = 0.5;
    double tmax = 50.0;
    std::size_t points = 50;
};

struct CmOptions {
    double gamma1 = 1.0, sigma1 = 1.0;
    double gamma2 = 1.5, sigma2 = 1.0;
    double tmin = 0.1;
    double tmax = 1e4;
    std::size_t points = 241;
};

/// Text of one run plus what goes into its run report.
struct CommandResult {
    std::string body;
    bool success = true;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::string> notes;
};

/// Thrown for flag combinations the library would accept but the command does not.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[nodiscard]] CommandResult cmd_coeffs(const GlobalOptions& global, const KernelOptions& kernel);
[[nodiscard]] CommandResult cmd_table1(const GlobalOptions& global);
[[nodiscard]] CommandResult cmd_figure1(const GlobalOptions& global, double beta, std::size_t max_n);
[[nodiscard]] CommandResult cmd_certify(const GlobalOptions& global, const CertifyOptions& options);
[[nodiscard]] CommandResult cmd_invlap(const GlobalOptions& global, const InvlapOptions& options);
[[nodiscard]] CommandResult cmd_cm(const GlobalOptions& global, const CmOptions& options);

/// Parse argv, run one subcommand, write output. Returns the exit code:
/// 0 success, 1 numeric failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace zonal::cli
