#ifndef AXBSOLVE_PERMUTATION_HPP
#define AXBSOLVE_PERMUTATION_HPP

#include <cstddef>
#include <vector>

#include "axbsolve/matrix.hpp"

namespace axbsolve {

/// Permutation matrix stored by its image: row r has its single 1 in column
/// image[r]. Left-multiplying selects rows, (P*M) row r = M row image[r].
class PermutationMatrix {
public:
    PermutationMatrix() = default;
    /// Throws std::invalid_argument unless image is a bijection on [0, size).
    explicit PermutationMatrix(std::vector<std::size_t> image);

    static PermutationMatrix identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    const std::vector<std::size_t>& image() const { return image_; }
    bool is_identity() const;

    PermutationMatrix transpose() const;
    Matrix to_matrix() const;

    /// this * m without materializing the permutation.
    Matrix apply_rows(const Matrix& m) const;
    /// m * this without materializing the permutation.
    Matrix apply_cols(const Matrix& m) const;

    friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

private:
    std::vector<std::size_t> image_;
};

}  // namespace axbsolve

#endif  // AXBSOLVE_PERMUTATION_HPP
