#pragma once

#include <functional>
#include <vector>

#include "framekit/family.hpp"

namespace framekit::examples {

// psi_k = m_k e_k
struct DiagonalWeights {
    family::WeightRule rule;
};

// Columns sqrt(s(l)) e_l, so the frame operator is exactly diag(s(l)).
// Captures the classification logic of a frame operator that is a Fourier
// multiplier with symbol s(l); multiplicity is simplified to 1.
struct MultiplierModel {
    family::WeightRule symbol;
};

// Discretized affine coherent states psi_x(r) = e^{-ixr} psi(r) on a radial
// quadrature grid. The ambient coordinates carry the measure weight
// sqrt(w_i r_i^{n-1}), so the discrete frame operator tends to the
// multiplication operator with symbol 2 pi r^{n-1} |psi(r)|^2 (upper bound 1
// after the admissibility normalization).
struct AffineCSConfig {
    int n = 1;                    // representation index, >= 1
    double r_max = 32.0;          // radial domain truncation
    double r_min_ratio = 1e-4;    // r_min = r_max * r_min_ratio
    int num_r = 512;              // midpoint quadrature nodes
    int num_x = 256;              // uniform x samples, used when x_points is empty
    double x_max = 0.0;           // <= 0 selects pi/dr, aligning the Dirichlet
                                  // kernel zeros with the r grid
    std::vector<double> x_points; // explicit sample points; no dx weight folded

    // |psi(r)|^2 before normalization; empty selects r^{1-n} e^{-r}, which is
    // admissible and non-regular. The sup condition is rescaled to 1.
    std::function<double(double)> mother_sq;
};

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

family::FamilyMatrix gen_diagonal(const DiagonalWeights& w, int d);
family::FamilyMatrix gen_multiplier(const MultiplierModel& model, int d);

family::FamilyMatrix gen_affine_cs(const AffineCSConfig& cfg);
family::FamilyMatrix gen_affine_cs(const AffineCSConfig& cfg, int num_r);

Quadrature affine_quadrature(const AffineCSConfig& cfg, int num_r);

// Values of the analytic multiplication symbol 2 pi r^{n-1} |psi(r)|^2 at the
// quadrature nodes, after the sup normalization. This is the operator the
// discretized frame operator is compared against.
std::vector<double> affine_multiplication_symbol(const AffineCSConfig& cfg, int num_r);

} // namespace framekit::examples

namespace framekit::family {

// A rule producing the family at any truncation dimension, the object
// truncation sweeps act on.
class FamilyGenerator {
public:
    enum class Kind { diagonal_weights, affine_cs, multiplier_model, explicit_family };

    static FamilyGenerator diagonal_weights(WeightRule rule);
    static FamilyGenerator multiplier_model(WeightRule symbol);
    static FamilyGenerator affine_cs(examples::AffineCSConfig cfg);
    static FamilyGenerator explicit_family(FamilyMatrix fm);

    FamilyMatrix produce(int d) const;
    Kind kind() const { return kind_; }
    std::string label() const;

private:
    FamilyGenerator() = default;

    Kind kind_ = Kind::explicit_family;
    WeightRule rule_;
    examples::AffineCSConfig affine_;
    FamilyMatrix explicit_;
};

FamilyMatrix truncate(const FamilyGenerator& g, int d);

} // namespace framekit::family
