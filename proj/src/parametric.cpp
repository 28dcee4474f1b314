#include "axbsolve/parametric.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "axbsolve/errors.hpp"

namespace axbsolve {

ParametricMatrix::ParametricMatrix(Matrix constant, std::vector<Parameter> params)
    : constant_(std::move(constant)), params_(std::move(params)) {
    std::set<std::string> seen;
    for (const auto& p : params_) {
        if (p.coeff.rows() != constant_.rows() || p.coeff.cols() != constant_.cols()) {
            throw ShapeError("coefficient of '" + p.name + "' does not match the constant's shape");
        }
        if (!seen.insert(p.name).second) throw std::invalid_argument("duplicate parameter name '" + p.name + "'");
    }
}

std::vector<std::string> ParametricMatrix::names() const {
    std::vector<std::string> out;
    out.reserve(params_.size());
    for (const auto& p : params_) out.push_back(p.name);
    return out;
}

ParametricMatrix ParametricMatrix::renamed(const std::vector<std::string>& names) const {
    if (names.size() != params_.size()) throw std::invalid_argument("rename: wrong number of names");
    std::vector<Parameter> params = params_;
    for (std::size_t i = 0; i < params.size(); ++i) params[i].name = names[i];
    return ParametricMatrix(constant_, std::move(params));
}

Matrix substitute(const ParametricMatrix& x, const ParameterValues& values) {
    Matrix out = x.constant();
    for (const auto& p : x.params()) {
        const auto it = values.find(p.name);
        if (it == values.end()) throw UnboundParameterError(p.name);
        if (it->second.is_zero()) continue;
        out += it->second * p.coeff;
    }
    return out;
}

}  // namespace axbsolve
