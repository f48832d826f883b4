#include "framekit/family.hpp"

#include <cmath>

#include "framekit/errors.hpp"

namespace framekit::family {

FamilyMatrix make_family(Matrix columns, std::string label) {
    if (columns.rows() == 0 || columns.cols() == 0) {
        throw InvalidFamily("make_family: empty family");
    }
    if (!columns.all_finite()) throw InvalidInput("make_family: non-finite entry");
    for (std::size_t k = 0; k < columns.cols(); ++k) {
        bool zero = true;
        for (std::size_t i = 0; i < columns.rows(); ++i) {
            if (columns(i, k) != cx{0.0, 0.0}) {
                zero = false;
                break;
            }
        }
        if (zero) throw InvalidFamily("make_family: column " + std::to_string(k) + " is zero");
    }
    return FamilyMatrix{std::move(columns), std::move(label)};
}

TruncationSweep::TruncationSweep(std::vector<int> dims_) : dims(std::move(dims_)) {
    if (dims.empty()) throw InvalidInput("TruncationSweep: empty dimension list");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw InvalidInput("TruncationSweep: dimensions must be positive");
        if (i > 0 && dims[i] <= dims[i - 1]) {
            throw InvalidInput("TruncationSweep: dimensions must be strictly increasing");
        }
    }
}

WeightRule WeightRule::power(double p) {
    if (!std::isfinite(p)) throw InvalidInput("WeightRule: non-finite exponent");
    WeightRule r;
    r.kind = Kind::power;
    r.parameter = p;
    return r;
}

WeightRule WeightRule::constant(double v) {
    if (!std::isfinite(v)) throw InvalidInput("WeightRule: non-finite constant");
    WeightRule r;
    r.kind = Kind::constant;
    r.parameter = v;
    return r;
}

WeightRule WeightRule::list(std::vector<double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) throw InvalidInput("WeightRule: non-finite list entry");
    }
    WeightRule r;
    r.kind = Kind::list;
    r.values = std::move(v);
    return r;
}

double WeightRule::at(std::size_t k) const {
    switch (kind) {
        case Kind::power:
            return std::pow(static_cast<double>(k), parameter);
        case Kind::constant:
            return parameter;
        case Kind::list:
            if (k == 0 || k > values.size()) {
                throw InvalidInput("WeightRule: list has no entry for index " + std::to_string(k));
            }
            return values[k - 1];
    }
    throw InvalidInput("WeightRule: unknown kind");
}

std::string WeightRule::describe() const {
    switch (kind) {
        case Kind::power:
            return "pow:" + std::to_string(parameter);
        case Kind::constant:
            return "const:" + std::to_string(parameter);
        case Kind::list:
            return "list[" + std::to_string(values.size()) + "]";
    }
    return "?";
}

} // namespace framekit::family
