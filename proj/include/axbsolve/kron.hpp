#ifndef AXBSOLVE_KRON_HPP
#define AXBSOLVE_KRON_HPP

#include <cstddef>

#include "axbsolve/matrix.hpp"

namespace axbsolve {

/// Block matrix whose (i, j) block is a(i, j) * b; shape (m*k) x (n*l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Column stacking: column j of x lands in rows [j*n, (j+1)*n).
Matrix vec(const Matrix& x);

/// Inverse of vec. Throws ShapeError unless v is an (n*k) x 1 column.
Matrix unvec(const Matrix& v, std::size_t n, std::size_t k);

}  // namespace axbsolve

#endif  // AXBSOLVE_KRON_HPP
