#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relhull/field.hpp"

namespace relhull {

// Dense matrix over one field; entries stored as element codes, row-major.
// Operations are value-semantic and leave their inputs untouched.
class MatrixGF {
  public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixGF from_codes(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);
    static MatrixGF identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t code) {
        field_->check_code(code);
        a_[i * cols_ + j] = code;
    }
    FieldElement elem(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }

    const std::uint32_t* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }
    std::vector<std::uint32_t> row(std::size_t i) const {
        return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
    }

    bool operator==(const MatrixGF& o) const {
        return field_->same_as(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);
MatrixGF operator+(const MatrixGF& a, const MatrixGF& b);
MatrixGF transpose(const MatrixGF& m);

// Reduced row echelon form with first-nonzero pivoting; returns the reduced
// matrix and the pivot column indices.  Deterministic for a fixed input.
std::pair<MatrixGF, std::vector<std::size_t>> rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

// Basis of {x : m x^T = 0} as rows, one per free column of m.
MatrixGF kernel(const MatrixGF& m);

// Entrywise a -> a^(p^e).
MatrixGF frobenius_entrywise(const MatrixGF& m, std::uint32_t e);

enum class ProductPath { Direct, RankUpdate };

// A * I_lambda * P_sigma * B where I_lambda = diag(lambda) and P_sigma is the
// permutation matrix with entries (i, sigma[i]).  The direct path forms the
// scaled, permuted copy of B; the rank-update path starts from A*B and applies
// the rank-one identities
//   A I_b B   = A B + sum_i (b_i - 1) Col_i(A) Row_i(B)
//   A P_(ij) B = A B + (Col_j(A) - Col_i(A)) (Row_i(B) - Row_j(B))
// transposition by transposition.  Both paths produce identical matrices.
MatrixGF scaled_product(const MatrixGF& a, const std::vector<std::uint32_t>& lambda,
                        const std::vector<std::uint32_t>& sigma, const MatrixGF& b,
                        ProductPath path = ProductPath::Direct);

}  // namespace relhull
