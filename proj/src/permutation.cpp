#include "axbsolve/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "axbsolve/errors.hpp"

namespace axbsolve {

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) throw std::invalid_argument("permutation image is not a bijection");
        seen[v] = true;
    }
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return PermutationMatrix(std::move(image));
}

bool PermutationMatrix::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

PermutationMatrix PermutationMatrix::transpose() const {
    std::vector<std::size_t> inverse(image_.size());
    for (std::size_t r = 0; r < image_.size(); ++r) inverse[image_[r]] = r;
    return PermutationMatrix(std::move(inverse));
}

Matrix PermutationMatrix::to_matrix() const {
    Matrix m(size(), size());
    for (std::size_t r = 0; r < size(); ++r) m(r, image_[r]) = 1;
    return m;
}

Matrix PermutationMatrix::apply_rows(const Matrix& m) const {
    if (m.rows() != size()) throw ShapeError("permutation rows: size mismatch");
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(image_[r], j);
    return out;
}

Matrix PermutationMatrix::apply_cols(const Matrix& m) const {
    if (m.cols() != size()) throw ShapeError("permutation cols: size mismatch");
    // (M*P)(:, image[s]) = M(:, s)
    Matrix out(m.rows(), m.cols());
    for (std::size_t s = 0; s < size(); ++s)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, image_[s]) = m(i, s);
    return out;
}

}  // namespace axbsolve
