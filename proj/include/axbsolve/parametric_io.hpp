#ifndef AXBSOLVE_PARAMETRIC_IO_HPP
#define AXBSOLVE_PARAMETRIC_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "axbsolve/parametric.hpp"

namespace axbsolve {

/// Entry (i, j) as a compact affine expression, e.g. "-1-p1+2*p2".
std::string format_affine(const ParametricMatrix& x, std::size_t i, std::size_t j);

/// A "# N parameters: ..." comment line followed by one row per line with
/// space-separated affine entries. Without parameters the body is exactly the
/// matrix text format.
std::string format_parametric_text(const ParametricMatrix& x);

/// bmatrix of affine entries. Names like alpha_1 or beta render as Greek
/// letters, p3 renders as p_{3}.
std::string format_parametric_latex(const ParametricMatrix& x);

/// {"rows":n,"cols":k,"constant":[[...]],"params":[{"name":"p1","coeff":[[...]]}]}
/// with every entry written as a "p/q" or "p" string.
std::string format_parametric_json(const ParametricMatrix& x, int indent = 2);

/// Inverse of format_parametric_json; also accepts bare JSON integers as
/// entries. Throws std::invalid_argument on schema violations.
ParametricMatrix parse_parametric_json(std::string_view text);

}  // namespace axbsolve

#endif  // AXBSOLVE_PARAMETRIC_IO_HPP
