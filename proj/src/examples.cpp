#include "framekit/examples.hpp"

#include <cmath>
#include <numbers>

#include "framekit/errors.hpp"

namespace framekit::examples {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_weight(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw InvalidInput(std::string(what) + " must be positive and finite");
    }
}

} // namespace

family::FamilyMatrix gen_diagonal(const DiagonalWeights& w, int d) {
    if (d < 1) throw InvalidInput("gen_diagonal: dimension must be >= 1");
    Matrix cols(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = w.rule.at(static_cast<std::size_t>(k) + 1);
        require_positive_weight(m, "gen_diagonal: weight m_k");
        cols(k, k) = m;
    }
    return family::make_family(std::move(cols), "diagonal(" + w.rule.describe() + ")");
}

family::FamilyMatrix gen_multiplier(const MultiplierModel& model, int d) {
    if (d < 1) throw InvalidInput("gen_multiplier: dimension must be >= 1");
    Matrix cols(d, d);
    for (int l = 0; l < d; ++l) {
        const double s = model.symbol.at(static_cast<std::size_t>(l) + 1);
        require_positive_weight(s, "gen_multiplier: symbol s(l)");
        cols(l, l) = std::sqrt(s);
    }
    return family::make_family(std::move(cols), "multiplier(" + model.symbol.describe() + ")");
}

namespace {

void validate_affine(const AffineCSConfig& cfg, int num_r) {
    if (cfg.n < 1) throw InvalidInput("affine_cs: representation index n must be >= 1");
    if (num_r < 2) throw InvalidInput("affine_cs: need at least 2 radial nodes");
    if (!std::isfinite(cfg.r_max) || cfg.r_max <= 0.0) {
        throw InvalidInput("affine_cs: r_max must be positive");
    }
    if (!std::isfinite(cfg.r_min_ratio) || cfg.r_min_ratio <= 0.0 || cfg.r_min_ratio >= 1.0) {
        throw InvalidInput("affine_cs: r_min_ratio must lie in (0, 1)");
    }
    if (cfg.x_points.empty() && cfg.num_x < 1) {
        throw InvalidInput("affine_cs: need at least one x sample");
    }
}

double default_mother_sq(double r, int n) {
    return std::pow(r, 1.0 - static_cast<double>(n)) * std::exp(-r);
}

struct AffineGrid {
    Quadrature quad;
    std::vector<double> mother_sq_norm; // |psi(r_i)|^2 after sup normalization
};

AffineGrid build_affine_grid(const AffineCSConfig& cfg, int num_r) {
    validate_affine(cfg, num_r);
    const double r_min = cfg.r_max * cfg.r_min_ratio;
    const double dr = (cfg.r_max - r_min) / static_cast<double>(num_r);

    AffineGrid g;
    g.quad.nodes.resize(num_r);
    g.quad.weights.resize(num_r);
    for (int i = 0; i < num_r; ++i) {
        g.quad.nodes[i] = r_min + (static_cast<double>(i) + 0.5) * dr;
        g.quad.weights[i] = dr;
    }

    g.mother_sq_norm.resize(num_r);
    double sup = 0.0;
    int zero_nodes = 0;
    for (int i = 0; i < num_r; ++i) {
        const double r = g.quad.nodes[i];
        const double msq = cfg.mother_sq ? cfg.mother_sq(r) : default_mother_sq(r, cfg.n);
        if (!std::isfinite(msq) || msq < 0.0) {
            throw InvalidInput("affine_cs: |psi|^2 must be finite and nonnegative on the grid");
        }
        if (msq == 0.0) ++zero_nodes;
        g.mother_sq_norm[i] = msq;
        sup = std::max(sup, kTwoPi * std::pow(r, cfg.n - 1) * msq);
    }
    if (sup <= 0.0) throw InvalidInput("affine_cs: mother function vanishes on the whole grid");
    if (zero_nodes > num_r / 8) {
        throw InvalidInput("affine_cs: |psi|^2 vanishes on more than isolated nodes");
    }
    for (double& v : g.mother_sq_norm) v /= sup;
    return g;
}

} // namespace

Quadrature affine_quadrature(const AffineCSConfig& cfg, int num_r) {
    return build_affine_grid(cfg, num_r).quad;
}

std::vector<double> affine_multiplication_symbol(const AffineCSConfig& cfg, int num_r) {
    const AffineGrid g = build_affine_grid(cfg, num_r);
    std::vector<double> sym(g.quad.nodes.size());
    for (std::size_t i = 0; i < sym.size(); ++i) {
        sym[i] = kTwoPi * std::pow(g.quad.nodes[i], cfg.n - 1) * g.mother_sq_norm[i];
    }
    return sym;
}

family::FamilyMatrix gen_affine_cs(const AffineCSConfig& cfg, int num_r) {
    const AffineGrid g = build_affine_grid(cfg, num_r);
    const int d = num_r;

    std::vector<double> xs;
    double fold = 1.0;
    if (!cfg.x_points.empty()) {
        xs = cfg.x_points;
        for (double x : xs) {
            if (!std::isfinite(x)) throw InvalidInput("affine_cs: non-finite sample point");
        }
    } else {
        const double dr = g.quad.weights[0];
        const double x_half = cfg.x_max > 0.0 ? cfg.x_max : std::numbers::pi / dr;
        const double dx = 2.0 * x_half / static_cast<double>(cfg.num_x);
        xs.resize(cfg.num_x);
        for (int k = 0; k < cfg.num_x; ++k) {
            xs[k] = -x_half + (static_cast<double>(k) + 0.5) * dx;
        }
        // Riemann weight, so the accumulated frame operator approximates the
        // continuous one; sqrt because it enters through the columns twice.
        fold = std::sqrt(dx);
    }

    // coordinate weights sqrt(w_i r_i^{n-1}) making the discretized space an l^2
    std::vector<double> coord(d);
    for (int i = 0; i < d; ++i) {
        coord[i] =
            std::sqrt(g.quad.weights[i] * std::pow(g.quad.nodes[i], cfg.n - 1));
        if (!(coord[i] > 0.0)) throw InvalidInput("affine_cs: degenerate quadrature weight");
    }

    Matrix cols(d, xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        for (int i = 0; i < d; ++i) {
            const double r = g.quad.nodes[i];
            const double amp = std::sqrt(g.mother_sq_norm[i]) * coord[i] * fold;
            cols(i, k) = std::polar(amp, -xs[k] * r);
        }
    }
    return family::make_family(std::move(cols), "affine_cs(n=" + std::to_string(cfg.n) + ")");
}

family::FamilyMatrix gen_affine_cs(const AffineCSConfig& cfg) {
    return gen_affine_cs(cfg, cfg.num_r);
}

} // namespace framekit::examples

namespace framekit::family {

FamilyGenerator FamilyGenerator::diagonal_weights(WeightRule rule) {
    FamilyGenerator g;
    g.kind_ = Kind::diagonal_weights;
    g.rule_ = std::move(rule);
    return g;
}

FamilyGenerator FamilyGenerator::multiplier_model(WeightRule symbol) {
    FamilyGenerator g;
    g.kind_ = Kind::multiplier_model;
    g.rule_ = std::move(symbol);
    return g;
}

FamilyGenerator FamilyGenerator::affine_cs(examples::AffineCSConfig cfg) {
    FamilyGenerator g;
    g.kind_ = Kind::affine_cs;
    g.affine_ = std::move(cfg);
    return g;
}

FamilyGenerator FamilyGenerator::explicit_family(FamilyMatrix fm) {
    FamilyGenerator g;
    g.kind_ = Kind::explicit_family;
    g.explicit_ = std::move(fm);
    return g;
}

FamilyMatrix FamilyGenerator::produce(int d) const {
    if (d < 1) throw InvalidInput("FamilyGenerator: dimension must be >= 1");
    switch (kind_) {
        case Kind::diagonal_weights:
            return examples::gen_diagonal(examples::DiagonalWeights{rule_}, d);
        case Kind::multiplier_model:
            return examples::gen_multiplier(examples::MultiplierModel{rule_}, d);
        case Kind::affine_cs:
            return examples::gen_affine_cs(affine_, d);
        case Kind::explicit_family:
            if (static_cast<std::size_t>(d) != explicit_.dim()) {
                throw InvalidInput("FamilyGenerator: explicit family has fixed dimension " +
                                   std::to_string(explicit_.dim()));
            }
            return explicit_;
    }
    throw InvalidInput("FamilyGenerator: unknown kind");
}

std::string FamilyGenerator::label() const {
    switch (kind_) {
        case Kind::diagonal_weights:
            return "diagonal(" + rule_.describe() + ")";
        case Kind::multiplier_model:
            return "multiplier(" + rule_.describe() + ")";
        case Kind::affine_cs:
            return "affine_cs(n=" + std::to_string(affine_.n) + ")";
        case Kind::explicit_family:
            return explicit_.label;
    }
    return "?";
}

FamilyMatrix truncate(const FamilyGenerator& g, int d) { return g.produce(d); }

} // namespace framekit::family
