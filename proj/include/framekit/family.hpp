#pragma once

#include <string>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit::family {

// A finite vector family: column k of `columns` is psi_k in the truncated
// d-dimensional space. N may differ from d; totality is a computed property.
struct FamilyMatrix {
    Matrix columns;
    std::string label;

    std::size_t dim() const { return columns.rows(); }
    std::size_t count() const { return columns.cols(); }
};

// Stores the columns verbatim. Rejects zero columns (they contribute nothing
// and break totality bookkeeping) and non-finite entries.
FamilyMatrix make_family(Matrix columns, std::string label);

struct TruncationSweep {
    std::vector<int> dims;

    explicit TruncationSweep(std::vector<int> dims_);
    static TruncationSweep default_dims() { return TruncationSweep({8, 16, 32, 64, 128, 256}); }
};

// Closed-form weight rules shared by the diagonal and multiplier generators:
//   pow:<p>   -> value at k is k^p          (k is 1-based)
//   const:<v> -> constant v
//   list      -> explicit values
struct WeightRule {
    enum class Kind { power, constant, list };

    Kind kind = Kind::constant;
    double parameter = 1.0;
    std::vector<double> values;

    static WeightRule power(double p);
    static WeightRule constant(double v);
    static WeightRule list(std::vector<double> v);

    double at(std::size_t k) const; // k is 1-based
    std::string describe() const;
};

} // namespace framekit::family
