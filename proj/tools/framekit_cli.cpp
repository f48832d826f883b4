// framekit command-line front end: ingest families or generators, run
// diagnostics / sweeps / duals / reconstructions / triplet norms / fusion
// reports, emit JSON reports and CSV matrices.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "framekit/dual_recon.hpp"
#include "framekit/errors.hpp"
#include "framekit/examples.hpp"
#include "framekit/frame_ops.hpp"
#include "framekit/fusion.hpp"
#include "framekit/io.hpp"

namespace fk = framekit;
using fk::family::FamilyGenerator;
using fk::family::FamilyMatrix;
using fk::spectral::RankTolerance;

namespace {

constexpr const char* kSchema = "framekit/1";
constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericalFailure = 3;

struct CommonOptions {
    std::string family_path;
    std::string generator; // diag | multiplier | affine
    std::string weights_rule;
    std::string symbol_rule;
    int affine_n = 1;
    double affine_rmax = 32.0;
    double affine_rmin_ratio = 1e-4;
    int affine_xsamples = 256;
    double affine_xmax = 0.0;

    int dim = 0;
    std::vector<int> dims;

    double tol = 1e-12;
    double resid_tol = 1e-6;
    unsigned seed = 1234;
    std::string out_dir;
    std::vector<std::string> formats = {"json", "csv"};

    bool wants(const std::string& format) const {
        for (const auto& f : formats) {
            if (f == format) return true;
        }
        return false;
    }
};

double default_tol_from_env() {
    const char* env = std::getenv("FRAMEKIT_TOL");
    if (env == nullptr) return 1e-12;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
        throw fk::InvalidInput("FRAMEKIT_TOL: expected a positive number");
    }
    return v;
}

void add_input_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--family", opt.family_path, "family CSV file");
    cmd->add_option("--generator", opt.generator, "generator kind: diag|multiplier|affine")
        ->check(CLI::IsMember({"diag", "multiplier", "affine"}));
    cmd->add_option("--weights", opt.weights_rule, "diag weights: pow:<p>|const:<v>|list:<path>");
    cmd->add_option("--symbol", opt.symbol_rule, "multiplier symbol: pow:<p>|const:<v>|list:<path>");
    cmd->add_option("--affine-n", opt.affine_n, "affine representation index");
    cmd->add_option("--affine-rmax", opt.affine_rmax, "affine radial cutoff");
    cmd->add_option("--affine-rmin-ratio", opt.affine_rmin_ratio, "r_min / r_max");
    cmd->add_option("--affine-xsamples", opt.affine_xsamples, "number of x samples");
    cmd->add_option("--affine-xmax", opt.affine_xmax, "x range half-width (0 = auto)");
    cmd->add_option("--dim", opt.dim, "truncation dimension for generator input");
    cmd->add_option("--tol", opt.tol, "relative rank cutoff")->capture_default_str();
    cmd->add_option("--resid-tol", opt.resid_tol, "residual threshold for exit code 3")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "seed for generated test vectors");
    cmd->add_option("--out", opt.out_dir, "output directory for report.json and CSV artifacts");
    cmd->add_option("--format", opt.formats, "artifact formats under --out: json,csv")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv"}));
}

FamilyGenerator make_generator(const CommonOptions& opt) {
    if (opt.generator == "diag") {
        if (opt.weights_rule.empty()) throw fk::InvalidInput("diag generator needs --weights");
        return FamilyGenerator::diagonal_weights(fk::io::parse_weight_rule(opt.weights_rule));
    }
    if (opt.generator == "multiplier") {
        if (opt.symbol_rule.empty()) throw fk::InvalidInput("multiplier generator needs --symbol");
        return FamilyGenerator::multiplier_model(fk::io::parse_weight_rule(opt.symbol_rule));
    }
    if (opt.generator == "affine") {
        fk::examples::AffineCSConfig cfg;
        cfg.n = opt.affine_n;
        cfg.r_max = opt.affine_rmax;
        cfg.r_min_ratio = opt.affine_rmin_ratio;
        cfg.num_x = opt.affine_xsamples;
        cfg.x_max = opt.affine_xmax;
        return FamilyGenerator::affine_cs(cfg);
    }
    throw fk::InvalidInput("unknown generator '" + opt.generator + "'");
}

void require_one_input(const CommonOptions& opt) {
    const bool has_family = !opt.family_path.empty();
    const bool has_generator = !opt.generator.empty();
    if (has_family == has_generator) {
        throw fk::InvalidInput("exactly one input source required: --family or --generator");
    }
}

FamilyMatrix load_single_family(const CommonOptions& opt) {
    require_one_input(opt);
    if (!opt.family_path.empty()) {
        std::ifstream is(opt.family_path);
        if (!is) throw fk::IoError("cannot open '" + opt.family_path + "'");
        return fk::io::read_family_csv(is, std::filesystem::path(opt.family_path).stem().string());
    }
    if (opt.dim < 1) throw fk::InvalidInput("generator input needs --dim");
    return make_generator(opt).produce(opt.dim);
}

fk::Vector random_unit_vector(std::size_t d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    fk::Vector f(d);
    for (auto& z : f) z = fk::cx{gauss(rng), gauss(rng)};
    const double n = fk::norm2(f);
    for (auto& z : f) z /= n;
    return f;
}

void echo_config(fk::io::JsonWriter& w, const std::string& command, const CommonOptions& opt) {
    w.key("config").begin_object();
    w.key("command").value(command);
    if (!opt.family_path.empty()) w.key("family").value(opt.family_path);
    if (!opt.generator.empty()) {
        w.key("generator").value(opt.generator);
        if (!opt.weights_rule.empty()) w.key("weights").value(opt.weights_rule);
        if (!opt.symbol_rule.empty()) w.key("symbol").value(opt.symbol_rule);
        if (opt.generator == "affine") {
            w.key("affine_n").value(opt.affine_n);
            w.key("affine_rmax").value(opt.affine_rmax);
            w.key("affine_rmin_ratio").value(opt.affine_rmin_ratio);
            w.key("affine_xsamples").value(opt.affine_xsamples);
            w.key("affine_xmax").value(opt.affine_xmax);
        }
    }
    if (opt.dim > 0) w.key("dim").value(opt.dim);
    if (!opt.dims.empty()) {
        w.key("dims").begin_array();
        for (int d : opt.dims) w.value(d);
        w.end_array();
    }
    w.key("tol").value(opt.tol);
    w.key("resid_tol").value(opt.resid_tol);
    w.key("seed").value(static_cast<long long>(opt.seed));
    w.key("formats").begin_array();
    for (const auto& f : opt.formats) w.value(f);
    w.end_array();
    w.end_object();
}

class Envelope {
public:
    Envelope(const std::string& command, const CommonOptions& opt)
        : start_(std::chrono::steady_clock::now()) {
        w_.begin_object();
        w_.key("schema").value(kSchema);
        w_.key("tool_version").value(kVersion);
        echo_config(w_, command, opt);
    }

    fk::io::JsonWriter& writer() { return w_; }

    std::string finish() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        w_.key("timing_ms")
            .value(std::chrono::duration<double, std::milli>(elapsed).count());
        w_.end_object();
        return w_.str();
    }

private:
    fk::io::JsonWriter w_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const std::string& report_json, const CommonOptions& opt) {
    std::cout << report_json << '\n';
    if (!opt.out_dir.empty() && opt.wants("json")) {
        std::filesystem::create_directories(opt.out_dir);
        std::ofstream os(std::filesystem::path(opt.out_dir) / "report.json");
        if (!os) throw fk::IoError("cannot write report.json under '" + opt.out_dir + "'");
        os << report_json << '\n';
    }
}

void write_diagnostics(fk::io::JsonWriter& w, const fk::frame_ops::FrameDiagnostics& d) {
    w.begin_object();
    w.key("lower_bound").value(d.lower_bound);
    w.key("upper_bound").value(d.upper_bound);
    w.key("rank").value(d.rank_S);
    w.key("total").value(d.total);
    w.key("bessel").value(d.bessel);
    w.key("condition").value(d.condition); // +inf serializes as null
    w.end_object();
}

// ---------------------------------------------------------------- classify

int run_classify(const CommonOptions& opt) {
    require_one_input(opt);
    Envelope env("classify", opt);
    auto& w = env.writer();
    const RankTolerance tol(opt.tol);

    if (!opt.dims.empty()) {
        if (opt.family_path.size() > 0) {
            throw fk::InvalidInput("sweeps need --generator, not --family");
        }
        const fk::family::TruncationSweep sweep(opt.dims);
        const auto verdict =
            fk::frame_ops::classify_sweep(make_generator(opt), sweep, tol);
        w.key("report").begin_object();
        w.key("kind").value("sweep");
        w.key("verdict").value(fk::frame_ops::to_string(verdict.verdict));
        w.key("alpha").value(verdict.alpha);
        w.key("beta").value(verdict.beta);
        w.key("points").begin_array();
        for (const auto& p : verdict.points) {
            w.begin_object();
            w.key("dim").value(p.dim);
            w.key("lower_bound").value(p.lower_bound);
            w.key("upper_bound").value(p.upper_bound);
            w.key("rank").value(p.rank);
            w.key("total").value(p.total);
            w.end_object();
        }
        w.end_array();
        w.end_object();

        if (!opt.out_dir.empty() && opt.wants("csv")) {
            std::filesystem::create_directories(opt.out_dir);
            std::ofstream os(std::filesystem::path(opt.out_dir) / "sweep.csv");
            os << "d,m,M\n";
            for (const auto& p : verdict.points) {
                os << p.dim << ',' << fk::io::format_double_17(p.lower_bound) << ','
                   << fk::io::format_double_17(p.upper_bound) << '\n';
            }
        }
        emit(env.finish(), opt);
        return kExitOk;
    }

    const FamilyMatrix fm = load_single_family(opt);
    const auto diag = fk::frame_ops::diagnostics(fm, tol);
    w.key("report").begin_object();
    w.key("kind").value("diagnostics");
    w.key("label").value(fm.label);
    w.key("dim").value(static_cast<int>(fm.dim()));
    w.key("count").value(static_cast<int>(fm.count()));
    w.key("diagnostics");
    write_diagnostics(w, diag);
    w.end_object();
    emit(env.finish(), opt);
    return kExitOk;
}

// -------------------------------------------------------------------- dual

int run_dual(const CommonOptions& opt, bool from_lower) {
    const FamilyMatrix fm = load_single_family(opt);
    Envelope env("dual", opt);
    auto& w = env.writer();
    const RankTolerance tol(opt.tol);

    FamilyMatrix dual{fk::Matrix{}, ""};
    bool flagged = false;
    if (from_lower) {
        dual = fk::dual_recon::dual_from_lower(fm, tol);
    } else {
        auto cd = fk::dual_recon::canonical_dual(fm, tol);
        dual = std::move(cd.dual);
        flagged = cd.dual_on_range;
    }

    // duality residual against the identity: exact only for total families
    const fk::Matrix product = from_lower
        ? fk::multiply(dual.columns, fk::adjoint(fm.columns))
        : fk::multiply(fm.columns, fk::adjoint(dual.columns));
    const double residual =
        fk::max_abs(fk::subtract(product, fk::Matrix::identity(fm.dim())));

    w.key("report").begin_object();
    w.key("kind").value(from_lower ? "dual_from_lower" : "canonical_dual");
    w.key("label").value(dual.label);
    w.key("duality_residual").value(residual);
    w.key("dual_on_range").value(flagged);
    if (from_lower) {
        const auto bound = fk::dual_recon::dual_bound_check(dual, fm);
        w.key("lower_bound_of_input").value(bound.lambda_min_dual);
        w.key("upper_bound_of_dual").value(bound.upper_bound_psi);
        w.key("bound_holds").value(bound.bound_holds);
    }
    w.end_object();

    if (!opt.out_dir.empty() && opt.wants("csv")) {
        std::filesystem::create_directories(opt.out_dir);
        std::ofstream os(std::filesystem::path(opt.out_dir) / "dual.csv");
        fk::io::write_family_csv(os, dual);
    }
    emit(env.finish(), opt);
    return residual <= opt.resid_tol ? kExitOk : kExitNumericalFailure;
}

// ------------------------------------------------------------- reconstruct

int run_reconstruct(const CommonOptions& opt, const std::string& f_path) {
    const FamilyMatrix fm = load_single_family(opt);
    Envelope env("reconstruct", opt);
    auto& w = env.writer();
    const RankTolerance tol(opt.tol);

    const fk::Vector f = f_path.empty() ? random_unit_vector(fm.dim(), opt.seed)
                                        : fk::io::read_vector_csv_file(f_path);
    if (f.size() != fm.dim()) throw fk::InvalidInput("--f vector dimension != family dimension");

    const auto gram = fk::dual_recon::gram_operators(fm, tol);
    const auto frame = fk::dual_recon::reconstruct_frame(fm, f, tol);
    const auto rd = fk::dual_recon::reconstruct_RD(fm, f, gram, tol);
    const auto full = fk::dual_recon::reconstruct_full(fm, f, gram, tol);
    const auto regularity = fk::dual_recon::regularity_check(fm, tol);

    double worst_reg = 0.0;
    for (double r : regularity.column_residuals) worst_reg = std::max(worst_reg, r);

    const bool projected = frame.via_dual_coefficients.projected_onto_span ||
                           rd.projected_onto_span || full.projected_onto_span;
    const double worst = std::max(
        {frame.via_dual_coefficients.residual, frame.via_dual_family.residual,
         rd.residual, full.residual});

    w.key("report").begin_object();
    w.key("kind").value("reconstruction");
    w.key("residuals").begin_object();
    w.key("via_dual_coefficients").value(frame.via_dual_coefficients.residual);
    w.key("via_dual_family").value(frame.via_dual_family.residual);
    w.key("gram_inverse_formula").value(rd.residual);
    w.key("split_sqrt_formula").value(full.residual);
    w.end_object();
    w.key("projected_onto_span").value(projected);
    w.key("regular").value(regularity.regular);
    w.key("worst_regularity_residual").value(worst_reg);
    w.end_object();
    emit(env.finish(), opt);

    return (!projected && worst <= opt.resid_tol) ? kExitOk : kExitNumericalFailure;
}

// ----------------------------------------------------------------- triplet

int run_triplet(const CommonOptions& opt, int coeff_index, const std::string& c_path) {
    require_one_input(opt);
    Envelope env("triplet", opt);
    auto& w = env.writer();
    const RankTolerance tol(opt.tol);

    const auto coefficient_for = [&](std::size_t count) -> fk::Vector {
        if (!c_path.empty()) {
            fk::Vector c = fk::io::read_vector_csv_file(c_path);
            if (c.size() != count) throw fk::InvalidInput("--c length != family count");
            return c;
        }
        if (coeff_index < 1 || static_cast<std::size_t>(coeff_index) > count) {
            throw fk::InvalidInput("--coeff index out of range");
        }
        fk::Vector c(count, fk::cx{0.0, 0.0});
        c[coeff_index - 1] = 1.0;
        return c;
    };

    const auto report_one = [&](const FamilyMatrix& fm) {
        const fk::Vector c = coefficient_for(fm.count());
        const auto gram = fk::dual_recon::gram_operators(fm, tol);
        const fk::Vector f = fk::frame_ops::synthesis(fm, c);
        return fk::dual_recon::triplet_report(fm, c, f, gram, tol);
    };

    if (!opt.dims.empty()) {
        if (opt.generator.empty()) throw fk::InvalidInput("triplet sweeps need --generator");
        const FamilyGenerator gen = make_generator(opt);
        struct Row {
            int d;
            fk::frame_ops::FrameDiagnostics diag;
            fk::dual_recon::TripletReport trip;
        };
        std::vector<Row> rows;
        for (int d : fk::family::TruncationSweep(opt.dims).dims) {
            const FamilyMatrix fm = gen.produce(d);
            rows.push_back({d, fk::frame_ops::diagnostics(fm, tol), report_one(fm)});
        }
        w.key("report").begin_object();
        w.key("kind").value("triplet_sweep");
        w.key("points").begin_array();
        for (const auto& r : rows) {
            w.begin_object();
            w.key("dim").value(r.d);
            w.key("lower_bound").value(r.diag.lower_bound);
            w.key("upper_bound").value(r.diag.upper_bound);
            w.key("norm_psi").value(r.trip.norm_psi);
            w.key("norm_zero").value(r.trip.norm_zero);
            w.key("norm_psi_cross").value(r.trip.norm_psi_cross);
            w.key("norm_S_frak").value(r.trip.norm_S_frak);
            w.end_object();
        }
        w.end_array();
        w.end_object();

        if (!opt.out_dir.empty() && opt.wants("csv")) {
            std::filesystem::create_directories(opt.out_dir);
            std::ofstream os(std::filesystem::path(opt.out_dir) / "triplet.csv");
            os << "d,m,M,norm_psi,norm_zero,norm_psi_cross,norm_S_frak\n";
            for (const auto& r : rows) {
                os << r.d << ',' << fk::io::format_double_17(r.diag.lower_bound) << ','
                   << fk::io::format_double_17(r.diag.upper_bound) << ','
                   << fk::io::format_double_17(r.trip.norm_psi) << ','
                   << fk::io::format_double_17(r.trip.norm_zero) << ','
                   << fk::io::format_double_17(r.trip.norm_psi_cross) << ','
                   << fk::io::format_double_17(r.trip.norm_S_frak) << '\n';
            }
        }
        emit(env.finish(), opt);
        return kExitOk;
    }

    const FamilyMatrix fm = load_single_family(opt);
    const auto trip = report_one(fm);
    w.key("report").begin_object();
    w.key("kind").value("triplet");
    w.key("norm_psi").value(trip.norm_psi);
    w.key("norm_zero").value(trip.norm_zero);
    w.key("norm_psi_cross").value(trip.norm_psi_cross);
    w.key("norm_S_frak").value(trip.norm_S_frak);
    w.key("embedding_condition").value(trip.embedding_condition);
    w.end_object();
    emit(env.finish(), opt);
    return kExitOk;
}

// ------------------------------------------------------------------ fusion

int run_fusion(const CommonOptions& opt, const std::string& config_path,
               const std::string& f_path) {
    if (config_path.empty()) throw fk::InvalidInput("fusion needs --config");
    std::ifstream is(config_path);
    if (!is) throw fk::IoError("cannot open '" + config_path + "'");
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw fk::IoError(std::string("fusion config: ") + e.what());
    }

    for (const auto& [key, _] : cfg.items()) {
        if (key != "schema" && key != "subspaces") {
            throw fk::InvalidInput("fusion config: unknown field '" + key + "'");
        }
    }
    if (!cfg.contains("schema") || cfg["schema"] != kSchema) {
        throw fk::InvalidInput(std::string("fusion config: expected schema '") + kSchema + "'");
    }
    if (!cfg.contains("subspaces") || !cfg["subspaces"].is_array() || cfg["subspaces"].empty()) {
        throw fk::InvalidInput("fusion config: 'subspaces' must be a nonempty array");
    }

    const auto base_dir = std::filesystem::path(config_path).parent_path();
    std::vector<fk::Matrix> spans;
    std::vector<double> weights;
    for (const auto& entry : cfg["subspaces"]) {
        for (const auto& [key, _] : entry.items()) {
            if (key != "basis_csv" && key != "weight") {
                throw fk::InvalidInput("fusion config: unknown subspace field '" + key + "'");
            }
        }
        if (!entry.contains("basis_csv") || !entry.contains("weight")) {
            throw fk::InvalidInput("fusion config: each subspace needs basis_csv and weight");
        }
        std::filesystem::path p = entry["basis_csv"].get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        spans.push_back(fk::io::read_matrix_csv_file(p.string()));
        weights.push_back(entry["weight"].get<double>());
    }

    Envelope env("fusion", opt);
    auto& w = env.writer();
    const RankTolerance tol(opt.tol);

    const auto fam = fk::fusion::make_subspace_family(std::move(spans), std::move(weights));
    const auto ed = fk::spectral::eig(fk::fusion::fusion_frame_operator(fam));
    const bool spanning =
        fk::spectral::retained_rank(ed.eigenvalues, tol) == static_cast<int>(fam.dim());

    const fk::Vector f = f_path.empty() ? random_unit_vector(fam.dim(), opt.seed)
                                        : fk::io::read_vector_csv_file(f_path);
    if (f.size() != fam.dim()) throw fk::InvalidInput("--f vector dimension != ambient dimension");
    const auto rec = fk::fusion::fusion_reconstruct(fam, f, tol);

    const auto dual = fk::fusion::fusion_dual(fam, tol);
    const auto dual2 = fk::fusion::fusion_dual(dual, tol);
    double max_angle = 0.0;
    for (std::size_t j = 0; j < fam.count(); ++j) {
        const auto angles = fk::fusion::principal_angles(fam.bases[j], dual2.bases[j]);
        if (!angles.empty()) max_angle = std::max(max_angle, angles.back());
    }

    w.key("report").begin_object();
    w.key("kind").value("fusion");
    w.key("subspace_count").value(static_cast<int>(fam.count()));
    w.key("dim").value(static_cast<int>(fam.dim()));
    w.key("lower_bound").value(ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.back());
    w.key("upper_bound").value(ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.front());
    w.key("spanning").value(spanning);
    w.key("reconstruction_residual").value(rec.residual);
    w.key("projected_onto_span").value(rec.projected_onto_span);
    w.key("dual_of_dual_max_angle").value(max_angle);
    w.end_object();
    emit(env.finish(), opt);

    return (!spanning || rec.residual <= opt.resid_tol) ? kExitOk : kExitNumericalFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"framekit: frames and semi-frames in finite-dimensional truncations"};
    app.require_subcommand(1);

    CommonOptions opt;
    try {
        opt.tol = default_tol_from_env();
    } catch (const fk::FramekitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    bool from_lower = false;
    int coeff_index = 1;
    std::string f_path;
    std::string c_path;
    std::string config_path;

    auto* classify = app.add_subcommand("classify", "frame bounds and semi-frame classification");
    add_input_options(classify, opt);
    classify->add_option("--dims", opt.dims, "sweep dimensions (comma separated)")->delimiter(',');

    auto* dual = app.add_subcommand("dual", "canonical dual or lower-to-upper duality construction");
    add_input_options(dual, opt);
    dual->add_flag("--from-lower", from_lower,
                   "treat the input as a lower semi-frame and build its upper dual");

    auto* reconstruct = app.add_subcommand("reconstruct", "run all reconstruction formulas");
    add_input_options(reconstruct, opt);
    reconstruct->add_option("--f", f_path, "vector CSV to reconstruct (default: seeded random)");

    auto* triplet = app.add_subcommand("triplet", "weighted norms of the Hilbert triplet");
    add_input_options(triplet, opt);
    triplet->add_option("--dims", opt.dims, "sweep dimensions")->delimiter(',');
    triplet->add_option("--coeff", coeff_index, "standard basis coefficient index (1-based)");
    triplet->add_option("--c", c_path, "coefficient vector CSV");

    auto* fusion = app.add_subcommand("fusion", "frames of subspaces");
    fusion->add_option("--config", config_path, "fusion JSON config")->required();
    fusion->add_option("--f", f_path, "vector CSV to reconstruct");
    fusion->add_option("--tol", opt.tol, "relative rank cutoff")->capture_default_str();
    fusion->add_option("--resid-tol", opt.resid_tol, "residual threshold for exit code 3")
        ->capture_default_str();
    fusion->add_option("--seed", opt.seed, "seed for generated test vectors");
    fusion->add_option("--out", opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitInvalidInput;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (dual->parsed()) return run_dual(opt, from_lower);
        if (reconstruct->parsed()) return run_reconstruct(opt, f_path);
        if (triplet->parsed()) return run_triplet(opt, coeff_index, c_path);
        if (fusion->parsed()) return run_fusion(opt, config_path, f_path);
    } catch (const fk::SingularOperator& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const fk::FramekitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
