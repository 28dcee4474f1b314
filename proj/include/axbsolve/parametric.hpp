#ifndef AXBSOLVE_PARAMETRIC_HPP
#define AXBSOLVE_PARAMETRIC_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "axbsolve/matrix.hpp"

namespace axbsolve {

struct Parameter {
    std::string name;
    Matrix coeff;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Matrix of affine expressions: entry (i, j) = constant(i, j) + sum_p coeff_p(i, j) * p.
class ParametricMatrix {
public:
    ParametricMatrix() = default;
    explicit ParametricMatrix(Matrix constant) : constant_(std::move(constant)) {}
    /// Throws ShapeError on a coefficient of the wrong shape and
    /// std::invalid_argument on duplicate names.
    ParametricMatrix(Matrix constant, std::vector<Parameter> params);

    std::size_t rows() const { return constant_.rows(); }
    std::size_t cols() const { return constant_.cols(); }
    std::size_t param_count() const { return params_.size(); }

    const Matrix& constant() const { return constant_; }
    const std::vector<Parameter>& params() const { return params_; }
    std::vector<std::string> names() const;

    /// Same matrix with parameters renamed positionally.
    ParametricMatrix renamed(const std::vector<std::string>& names) const;

    friend bool operator==(const ParametricMatrix&, const ParametricMatrix&) = default;

private:
    Matrix constant_;
    std::vector<Parameter> params_;
};

using ParameterValues = std::map<std::string, Rational>;

/// Entrywise affine evaluation. Throws UnboundParameterError if a parameter
/// has no value; extra values are ignored.
Matrix substitute(const ParametricMatrix& x, const ParameterValues& values);

}  // namespace axbsolve

#endif  // AXBSOLVE_PARAMETRIC_HPP
