// Command-line front end: verify / spectrum / shoot / sweep / oracle.
//
// Output contract: deterministic CSV (one header row per section, sections
// separated by a blank line) or a JSON mirror of the same sections; floats
// carry 17 significant digits.  Exit codes: 0 success, 1 numeric-tolerance
// or solver failure, 2 validation failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cphm/action_basis.hpp"
#include "cphm/jacobi.hpp"
#include "cphm/profile.hpp"
#include "cphm/shooting.hpp"
#include "cphm/solutions.hpp"
#include "cphm/space.hpp"
#include "cphm/spectral.hpp"
#include "cphm/tension.hpp"

namespace {

constexpr double kPi2 = std::numbers::pi / 2;
constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitValidation = 2;

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_cell(const Json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// One named CSV table / JSON array of row objects.
struct Section {
    std::string name;
    std::vector<std::string> columns;
    std::vector<Json> rows;

    Json& add_row() {
        rows.emplace_back(Json::object());
        return rows.back();
    }
};

struct Report {
    std::string command;
    std::vector<Section> sections;

    std::string to_csv() const {
        std::ostringstream out;
        bool first = true;
        for (const auto& section : sections) {
            if (!first) out << "\n";
            first = false;
            for (std::size_t c = 0; c < section.columns.size(); ++c) {
                out << (c ? "," : "") << section.columns[c];
            }
            out << "\n";
            for (const auto& row : section.rows) {
                for (std::size_t c = 0; c < section.columns.size(); ++c) {
                    if (c) out << ",";
                    if (row.contains(section.columns[c])) {
                        out << format_cell(row.at(section.columns[c]));
                    }
                }
                out << "\n";
            }
        }
        return out.str();
    }

    std::string to_json() const {
        Json doc;
        doc["command"] = command;
        Json body = Json::object();
        for (const auto& section : sections) {
            body[section.name] = section.rows;
        }
        doc["sections"] = body;
        return doc.dump(2) + "\n";
    }
};

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void attach_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const Report& report, const OutputOptions& opts) {
    const std::string payload = (opts.format == "json") ? report.to_json() : report.to_csv();
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + opts.out_path);
    }
    file << payload;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = (count == 1) ? lo : lo + (hi - lo) * i / (count - 1.0);
    }
    return grid;
}

// --- verify ---------------------------------------------------------------

struct VerifyOptions {
    int n = 2, p = 0;
    double rho = 1.0;
    int ell = 0;
    int grid = 500;
    double eps = 1e-4;
    double delta = 0.1;
    double tol_residual = 1e-9;
    double tol_holo = 1e-10;
    double tol_gap = 1e-3;
    double tol_conv = 1e-9;
    OutputOptions out;
};

int run_verify(const VerifyOptions& opt) {
    const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
    const cphm::Profile prof = cphm::Profile::closed_form(opt.rho, opt.ell);
    if (opt.grid < 2) throw std::invalid_argument("verify: --grid must be >= 2");
    if (!(opt.eps > 0.0 && opt.eps < std::numbers::pi / 4)) {
        throw std::invalid_argument("verify: --eps must lie in (0, pi/4)");
    }

    // Wall margin 5e-3: closer in, the 1/sin^2 t terms amplify the rounding
    // of r (absolute ~ulp(pi) once ell shifts it) past the 1e-9 bar.
    double max_residual = 0.0;
    for (const double t : linear_grid(5e-3, kPi2 - 5e-3, opt.grid)) {
        max_residual = std::max(max_residual, std::abs(cphm::ode_residual(sp, prof, t)));
    }

    // The raw holomorphicity residual cancels terms of size
    // (1 + tan^2 r)(1 + tan^2 t); with an ell*pi offset r carries an absolute
    // ~ulp(pi) rounding, so the 1e-10 bar needs margin 0.2 to hold across
    // |rho| <= 10, |ell| <= 1.
    double max_holo = 0.0;
    for (const double t : linear_grid(0.2, kPi2 - 0.2, opt.grid)) {
        const auto res = cphm::holomorphicity_residual(prof, t);
        if (res.has_value()) max_holo = std::max(max_holo, std::abs(*res));
    }

    // Family limits: r -> ell*pi at 0 and k*pi/2 at pi/2 with k = 2*ell + sign(rho).
    const int k_target = 2 * opt.ell + (opt.rho > 0 ? 1 : -1);
    const double gap_left = std::abs(prof.eval(opt.eps).r - opt.ell * std::numbers::pi);
    const double gap_right = std::abs(prof.eval(kPi2 - opt.eps).r - k_target * kPi2);

    const double gap_formula = cphm::convergence_gap(opt.rho, opt.delta);
    double gap_sup = 0.0;
    const double sign_target = (opt.rho > 0 ? 1.0 : -1.0) * kPi2;
    for (const double t : linear_grid(opt.delta, kPi2 - 1e-9, opt.grid)) {
        gap_sup = std::max(gap_sup,
                           std::abs(cphm::family_eval({opt.rho, 0}, t).r - sign_target));
    }
    const double gap_crosscheck = std::abs(gap_sup - gap_formula);

    Report report{"verify", {}};
    Section checks{"checks", {"metric", "value", "tolerance", "pass"}, {}};
    bool all_pass = true;
    auto add_check = [&](const std::string& metric, double value,
                         std::optional<double> tolerance) {
        Json& row = checks.add_row();
        row["metric"] = metric;
        row["value"] = value;
        bool pass = true;
        if (tolerance.has_value()) {
            row["tolerance"] = *tolerance;
            pass = (value < *tolerance);
        } else {
            row["tolerance"] = "";
        }
        row["pass"] = pass;
        all_pass = all_pass && pass;
    };
    add_check("max_ode_residual", max_residual, opt.tol_residual);
    add_check("max_holomorphicity_residual", max_holo, opt.tol_holo);
    add_check("boundary_gap_left", gap_left, opt.tol_gap);
    add_check("boundary_gap_right", gap_right, opt.tol_gap);
    add_check("convergence_gap", gap_formula, std::nullopt);
    add_check("convergence_gap_crosscheck", gap_crosscheck, opt.tol_conv);
    report.sections.push_back(std::move(checks));
    emit(report, opt.out);
    return all_pass ? kExitOk : kExitTolerance;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumOptions {
    int n = 3, p = 1;
    double rho = 1.0;
    int count = 6;
    int grid = 800;
    double eps = 1e-3;
    double tol_null = 1e-3;
    OutputOptions out;
};

int run_spectrum(const SpectrumOptions& opt) {
    const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
    const cphm::Profile prof = cphm::Profile::closed_form(opt.rho, 0);
    const auto problem = cphm::SturmLiouvilleProblem::create(sp, prof, opt.grid, opt.eps);

    const std::vector<double> refined =
        cphm::eigenvalues_refined(sp, prof, opt.count, opt.grid, opt.eps);
    const cphm::SpectrumResult raw = cphm::eigen_smallest(problem, 0, opt.tol_null);

    const bool has_closed =
        (opt.n % 2 == 1) && (opt.p == (opt.n - 1) / 2) && (std::abs(opt.rho) == 1.0);

    Report report{"spectrum", {}};
    Section eig{"eigenvalues", {"j", "lambda"}, {}};
    if (has_closed) {
        eig.columns.push_back("closed");
        eig.columns.push_back("rel_error");
    }
    for (int j = 0; j < opt.count; ++j) {
        Json& row = eig.add_row();
        row["j"] = j;
        row["lambda"] = refined[j];
        if (has_closed) {
            const double exact = cphm::closed_spectrum(opt.n, j);
            row["closed"] = exact;
            row["rel_error"] = std::abs(refined[j] - exact) / std::max(1.0, exact);
        }
    }
    report.sections.push_back(std::move(eig));

    Section summary{"summary", {"index", "nullity", "tol", "grid", "eps"}, {}};
    Json& row = summary.add_row();
    row["index"] = raw.index;
    row["nullity"] = raw.nullity;
    row["tol"] = opt.tol_null;
    row["grid"] = opt.grid;
    row["eps"] = opt.eps;
    report.sections.push_back(std::move(summary));

    emit(report, opt.out);
    return kExitOk;
}

// --- shoot ---------------------------------------------------------------

struct ShootOptions {
    int n = 3, p = 1;
    std::optional<int> k;
    std::optional<double> slope;
    std::vector<double> bracket;
    double eps = 1e-6;
    double tol_gap = 1e-6;
    int grid = 500;
    OutputOptions out;
};

int run_shoot(const ShootOptions& opt) {
    if (opt.k.has_value() == opt.slope.has_value()) {
        throw std::invalid_argument("shoot: give exactly one of --k or --slope");
    }
    const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
    cphm::ShootingConfig cfg;
    cfg.t_start = std::min(opt.eps, 1e-3);
    cfg.t_end_offset = opt.eps;
    cfg.gap_tol = opt.tol_gap;
    // Tight step control keeps the reported residual near the interpolation
    // floor instead of the integrator's; the cost is negligible.
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    if (!opt.bracket.empty()) {
        if (opt.bracket.size() != 2) {
            throw std::invalid_argument("shoot: --bracket needs exactly two values");
        }
        cfg.a_lo = opt.bracket[0];
        cfg.a_hi = opt.bracket[1];
    }
    cfg.validate();

    double slope = 0.0;
    cphm::Profile prof;
    double terminal = 0.0, gap = 0.0;
    bool converged = false;
    int iterations = 0;
    if (opt.slope.has_value()) {
        slope = *opt.slope;
        prof = cphm::integrate(sp, slope, cfg);
        terminal = prof.eval(prof.t_max()).r;
        // Without a requested winding, measure against the nearest odd multiple.
        const double q = terminal / kPi2;
        long m = std::lround(q);
        if (m % 2 == 0) m += (q >= static_cast<double>(m)) ? 1 : -1;
        gap = std::abs(terminal - static_cast<double>(m) * kPi2);
        converged = gap < cfg.gap_tol;
        iterations = 1;
    } else {
        const cphm::BoundaryData boundary = cphm::BoundaryData::create(*opt.k);
        cphm::ShotResult res = cphm::shoot(sp, boundary, cfg);
        slope = res.slope;
        prof = std::move(res.profile);
        terminal = res.terminal_value;
        gap = res.terminal_gap;
        converged = res.converged;
        iterations = res.iterations;
    }

    // Clamp the residual window at 1e-3: below that the 1/t^2 coefficients
    // sit on a double-precision noise floor of ~1e-4 regardless of the
    // integrator quality.
    double max_residual = 0.0;
    const double margin = std::max(2 * cfg.t_end_offset, 1e-3);
    const double lo = std::max(prof.t_min(), margin);
    const double hi = std::min(prof.t_max(), kPi2 - margin);
    for (const double t : linear_grid(lo, hi, opt.grid)) {
        max_residual = std::max(max_residual, std::abs(cphm::ode_residual(sp, prof, t)));
    }

    Report report{"shoot", {}};
    Section summary{"summary",
                    {"slope", "terminal_value", "terminal_gap", "converged", "iterations",
                     "max_residual"},
                    {}};
    Json& row = summary.add_row();
    row["slope"] = slope;
    row["terminal_value"] = terminal;
    row["terminal_gap"] = gap;
    row["converged"] = converged;
    row["iterations"] = iterations;
    row["max_residual"] = max_residual;
    report.sections.push_back(std::move(summary));

    Section nodes{"profile", {"t", "r", "dr", "ddr"}, {}};
    const auto& grid = prof.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Json& node = nodes.add_row();
        node["t"] = grid[i];
        node["r"] = prof.r_values()[i];
        node["dr"] = prof.dr_values()[i];
        node["ddr"] = prof.ddr_values()[i];
    }
    report.sections.push_back(std::move(nodes));

    emit(report, opt.out);
    if (opt.k.has_value() && !converged) return kExitTolerance;
    return kExitOk;
}

// --- sweep ---------------------------------------------------------------

struct SweepOptions {
    std::string what = "gap";
    int n = 3, p = 1;
    std::string rho_range = "1:10";
    int count = 25;
    int ell = 0;
    double delta = 0.1;
    int grid = 200;
    int jobs = 0;
    OutputOptions out;
};

std::vector<double> parse_rho_range(const std::string& text, int count) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    auto to_double = [](const std::string& s) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("sweep: bad number in --rho: " + s);
        return v;
    };
    if (count < 0) throw std::invalid_argument("sweep: --count must be >= 0");
    if (parts.size() == 1) {
        if (count == 0) return {};
        return {to_double(parts[0])};
    }
    if (parts.size() > 3 || (parts.size() == 3 && parts[2] != "log")) {
        throw std::invalid_argument("sweep: --rho must be a value, lo:hi or lo:hi:log");
    }
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    if (count == 0) return {};
    const bool log_scale = parts.size() == 3;
    if (log_scale && (lo <= 0.0 || hi <= 0.0)) {
        throw std::invalid_argument("sweep: log spacing needs positive endpoints");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        const double frac = (count == 1) ? 0.0 : static_cast<double>(i) / (count - 1);
        grid[i] = log_scale ? lo * std::pow(hi / lo, frac) : lo + (hi - lo) * frac;
    }
    return grid;
}

int run_sweep(const SweepOptions& opt) {
    const std::vector<double> rhos_all = parse_rho_range(opt.rho_range, opt.count);
    std::vector<double> rhos;
    for (const double rho : rhos_all) {
        if (std::abs(rho) > 1e-12) rhos.push_back(rho);  // rho = 0 has no family member
    }

    Report report{"sweep", {}};
    Section table{"sweep", {}, {}};
    auto fill = [&](auto&& row_of) {
        std::vector<Json> rows(rhos.size());
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const int jobs = (opt.jobs > 0) ? opt.jobs
                                        : static_cast<int>(std::min(hw, 8u));
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= rhos.size()) return;
                try {
                    rows[i] = row_of(rhos[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
        if (failure) std::rethrow_exception(failure);
        table.rows = std::move(rows);
    };

    if (opt.what == "gap") {
        table.columns = {"rho", "delta", "gap"};
        fill([&](double rho) {
            Json row;
            row["rho"] = rho;
            row["delta"] = opt.delta;
            row["gap"] = cphm::convergence_gap(rho, opt.delta);
            return row;
        });
    } else if (opt.what == "residual") {
        const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
        table.columns = {"rho", "max_residual"};
        fill([&](double rho) {
            const cphm::Profile prof = cphm::Profile::closed_form(rho, opt.ell);
            double worst = 0.0;
            for (const double t : linear_grid(5e-3, kPi2 - 5e-3, opt.grid)) {
                worst = std::max(worst, std::abs(cphm::ode_residual(sp, prof, t)));
            }
            Json row;
            row["rho"] = rho;
            row["max_residual"] = worst;
            return row;
        });
    } else if (opt.what == "spectrum") {
        const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
        const int grid_size = std::max(opt.grid, 64);
        table.columns = {"rho", "lambda_min", "index", "nullity"};
        fill([&](double rho) {
            const cphm::Profile prof = cphm::Profile::closed_form(rho, 0);
            const double lambda_min =
                cphm::eigenvalues_refined(sp, prof, 1, grid_size, 1e-3).front();
            const auto problem =
                cphm::SturmLiouvilleProblem::create(sp, prof, grid_size, 1e-3);
            const cphm::SpectrumResult res = cphm::eigen_smallest(problem, 0);
            Json row;
            row["rho"] = rho;
            row["lambda_min"] = lambda_min;
            row["index"] = res.index;
            row["nullity"] = res.nullity;
            return row;
        });
    } else {
        throw std::invalid_argument("sweep: --what must be gap, residual or spectrum");
    }

    report.sections.push_back(std::move(table));
    emit(report, opt.out);
    return kExitOk;
}

// --- oracle ---------------------------------------------------------------

struct OracleOptions {
    int n = 3, p = 1;
    int grid = 50;
    OutputOptions out;
};

int run_oracle(const OracleOptions& opt) {
    const cphm::SpaceParams sp = cphm::SpaceParams::create(opt.n, opt.p);
    if (opt.grid < 2) throw std::invalid_argument("oracle: --grid must be >= 2");
    const std::vector<double> grid = linear_grid(1e-3, kPi2 - 1e-3, opt.grid);

    double gram_dev = 0.0, trace_dev = 0.0, shifted_dev = 0.0, speed_dev = 0.0;
    for (const double t : grid) {
        const Eigen::MatrixXd g = cphm::gram_oracle(sp, t);
        Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(g.rows(), g.cols());
        diag.diagonal() = cphm::pt_diagonal(sp, t).diagonal();
        gram_dev = std::max(gram_dev, (g - diag).cwiseAbs().maxCoeff());

        // Trace deviations are scaled by the identity's own magnitude: the
        // cot/csc^2 terms reach 1e6 near the walls, where a few ulps already
        // exceed any fixed absolute bar.
        const double bracket = (2.0 * sp.n - 2.0 * sp.p - 1.0) / std::tan(t) -
                               (2.0 * sp.p + 1.0) * std::tan(t);
        trace_dev = std::max(trace_dev,
                             std::abs(0.5 * cphm::trace_p_inv_pdot(sp, t) - bracket) /
                                 std::max(1.0, std::abs(bracket)));

        const double c = std::cos(t), s = std::sin(t), s2 = std::sin(2 * t);
        const double r = 0.3;
        const double zeroth =
            -(sp.p / (c * c) - (sp.n - sp.p - 1.0) / (s * s)) * std::sin(2 * r) +
            std::sin(4 * r) / (s2 * s2);
        shifted_dev = std::max(
            shifted_dev, std::abs(0.5 * cphm::trace_p_inv_pdot_shifted(sp, t, r) - zeroth) /
                             std::max(1.0, std::abs(zeroth)));

        Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * sp.n);
        v(sp.p) = 1.0 / (c * c);
        speed_dev = std::max(speed_dev,
                             std::abs(v.dot(cphm::real_metric(sp, t) * v) - 1.0));
    }

    const cphm::ActionBasis basis(sp);
    double structure_dev = 0.0, q_dev = 0.0;
    for (int i = 0; i < basis.size(); ++i) {
        const Eigen::MatrixXcd& x = basis.elements()[i];
        structure_dev = std::max(structure_dev, (x + x.adjoint()).cwiseAbs().maxCoeff());
        structure_dev = std::max(structure_dev, std::abs(x.trace()));
        for (int j = 0; j < basis.size(); ++j) {
            q_dev = std::max(q_dev, std::abs(basis.q_form(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }

    Report report{"oracle", {}};
    Section checks{"checks", {"metric", "value", "tolerance", "pass"}, {}};
    bool all_pass = true;
    auto add_check = [&](const std::string& metric, double value, double tolerance) {
        Json& row = checks.add_row();
        row["metric"] = metric;
        row["value"] = value;
        row["tolerance"] = tolerance;
        const bool pass = value < tolerance;
        row["pass"] = pass;
        all_pass = all_pass && pass;
    };
    add_check("gram_vs_diagonal", gram_dev, 1e-12);
    add_check("trace_identity", trace_dev, 1e-10);
    add_check("shifted_trace_identity", shifted_dev, 1e-10);
    add_check("unit_speed", speed_dev, 1e-12);
    add_check("basis_structure", structure_dev, 1e-14);
    if (!sp.degenerate()) {
        add_check("q_orthonormality", q_dev, 1e-12);
    }
    report.sections.push_back(std::move(checks));
    emit(report, opt.out);
    return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant harmonic self-maps of CP^n: verification toolkit"};
    app.require_subcommand(1);

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check a closed-form family member against the reduced ODE");
    verify->add_option("--n", verify_opt.n, "Complex dimension n")->required();
    verify->add_option("--p", verify_opt.p, "Block index p, 0 <= p < n")->required();
    verify->add_option("--rho", verify_opt.rho, "Family parameter, nonzero")->required();
    verify->add_option("--ell", verify_opt.ell, "Winding offset ell");
    verify->add_option("--grid", verify_opt.grid, "Grid points per metric")
        ->capture_default_str();
    verify->add_option("--eps", verify_opt.eps, "Boundary-gap offset")->capture_default_str();
    verify->add_option("--delta", verify_opt.delta, "Convergence-gap compactum start")
        ->capture_default_str();
    verify->add_option("--tol-residual", verify_opt.tol_residual, "ODE residual tolerance")
        ->capture_default_str();
    verify->add_option("--tol-holo", verify_opt.tol_holo, "Holomorphicity tolerance")
        ->capture_default_str();
    verify->add_option("--tol-gap", verify_opt.tol_gap, "Boundary-gap tolerance")
        ->capture_default_str();
    verify->add_option("--tol-conv", verify_opt.tol_conv, "Convergence crosscheck tolerance")
        ->capture_default_str();
    attach_output_flags(verify, verify_opt.out);

    SpectrumOptions spectrum_opt;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Equivariant stability spectrum about a family background");
    spectrum->add_option("--n", spectrum_opt.n, "Complex dimension n")->required();
    spectrum->add_option("--p", spectrum_opt.p, "Block index p")->required();
    spectrum->add_option("--rho", spectrum_opt.rho, "Background parameter")->required();
    spectrum->add_option("--count", spectrum_opt.count, "Number of eigenvalues")
        ->capture_default_str();
    spectrum->add_option("--grid", spectrum_opt.grid, "Interior grid size N")
        ->capture_default_str();
    spectrum->add_option("--eps", spectrum_opt.eps, "Dirichlet wall offset")
        ->capture_default_str();
    spectrum->add_option("--tol-null", spectrum_opt.tol_null, "Nullity tolerance")
        ->capture_default_str();
    attach_output_flags(spectrum, spectrum_opt.out);

    ShootOptions shoot_opt;
    CLI::App* shoot = app.add_subcommand(
        "shoot", "Integrate the singular BVP by two-sided shooting");
    shoot->add_option("--n", shoot_opt.n, "Complex dimension n")->required();
    shoot->add_option("--p", shoot_opt.p, "Block index p")->required();
    shoot->add_option("--k", shoot_opt.k, "Target winding (odd); root-find the slope");
    shoot->add_option("--slope", shoot_opt.slope, "Fixed initial slope; no root-find");
    shoot->add_option("--bracket", shoot_opt.bracket, "Slope bracket LO HI")->expected(2);
    shoot->add_option("--eps", shoot_opt.eps, "Endpoint offsets")->capture_default_str();
    shoot->add_option("--tol-gap", shoot_opt.tol_gap, "Terminal gap tolerance")
        ->capture_default_str();
    shoot->add_option("--grid", shoot_opt.grid, "Residual sampling points")
        ->capture_default_str();
    attach_output_flags(shoot, shoot_opt.out);

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate a metric over a rho range");
    sweep->add_option("--what", sweep_opt.what, "gap, residual or spectrum")
        ->capture_default_str();
    sweep->add_option("--n", sweep_opt.n, "Complex dimension n")->capture_default_str();
    sweep->add_option("--p", sweep_opt.p, "Block index p")->capture_default_str();
    sweep->add_option("--rho", sweep_opt.rho_range, "Range: value, lo:hi or lo:hi:log")
        ->capture_default_str();
    sweep->add_option("--count", sweep_opt.count, "Number of samples")->capture_default_str();
    sweep->add_option("--ell", sweep_opt.ell, "Winding offset for residual sweeps");
    sweep->add_option("--delta", sweep_opt.delta, "Compactum start for gap sweeps")
        ->capture_default_str();
    sweep->add_option("--grid", sweep_opt.grid, "Grid size per sample")->capture_default_str();
    sweep->add_option("--jobs", sweep_opt.jobs, "Worker threads (0 = auto)")
        ->capture_default_str();
    attach_output_flags(sweep, sweep_opt.out);

    OracleOptions oracle_opt;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Cross-check the geometric oracles for one (n, p)");
    oracle->add_option("--n", oracle_opt.n, "Complex dimension n")->required();
    oracle->add_option("--p", oracle_opt.p, "Block index p")->required();
    oracle->add_option("--grid", oracle_opt.grid, "Grid points")->capture_default_str();
    attach_output_flags(oracle, oracle_opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? kExitOk : kExitValidation;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opt);
        if (spectrum->parsed()) return run_spectrum(spectrum_opt);
        if (shoot->parsed()) return run_shoot(shoot_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        if (oracle->parsed()) return run_oracle(oracle_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    }
    return kExitOk;
}
