#include "axbsolve/kron.hpp"

#include <string>

#include "axbsolve/errors.hpp"

namespace axbsolve {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& s = a(i, j);
            if (s.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
        }
    }
    return out;
}

Matrix vec(const Matrix& x) {
    Matrix v(x.rows() * x.cols(), 1);
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v(j * x.rows() + i, 0) = x(i, j);
    return v;
}

Matrix unvec(const Matrix& v, std::size_t n, std::size_t k) {
    if (v.cols() != 1 || v.rows() != n * k) {
        throw ShapeError("unvec: expected a " + std::to_string(n * k) + "x1 column, got " + std::to_string(v.rows()) +
                         "x" + std::to_string(v.cols()));
    }
    Matrix x(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) x(i, j) = v(j * n + i, 0);
    return x;
}

}  // namespace axbsolve
