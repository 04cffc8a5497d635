#include "relhull/matrix.hpp"

#include <numeric>

namespace relhull {

MatrixGF MatrixGF::from_codes(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) fail(Err::EmptyGenerator, "no rows given");
    std::size_t cols = rows[0].size();
    MatrixGF m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(Err::LengthMismatch, "ragged row lengths");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
    check_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) fail(Err::DimensionMismatch, "inner dimensions differ");
    const Field& f = *a.field();
    MatrixGF r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            const std::uint32_t* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (brow[j] == 0) continue;
                r.set(i, j, f.add(r.at(i, j), f.mul(aik, brow[j])));
            }
        }
    }
    return r;
}

MatrixGF operator+(const MatrixGF& a, const MatrixGF& b) {
    check_same_field(*a.field(), *b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Err::DimensionMismatch, "shapes differ");
    const Field& f = *a.field();
    MatrixGF r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, f.add(a.at(i, j), b.at(i, j)));
    return r;
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF r(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, i, m.at(i, j));
    return r;
}

std::pair<MatrixGF, std::vector<std::size_t>> rref(const MatrixGF& m) {
    const Field& f = *m.field();
    MatrixGF r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t col = 0; col < r.cols() && pr < r.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                std::uint32_t t = r.at(pr, j);
                r.set(pr, j, r.at(sel, j));
                r.set(sel, j, t);
            }
        std::uint32_t piv_inv = f.inv(r.at(pr, col));
        for (std::size_t j = col; j < r.cols(); ++j) r.set(pr, j, f.mul(piv_inv, r.at(pr, j)));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr) continue;
            std::uint32_t c = r.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(pr, j))));
        }
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).second.size(); }

MatrixGF kernel(const MatrixGF& m) {
    const Field& f = *m.field();
    auto [r, pivots] = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    MatrixGF k(m.field(), n - pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        k.set(out, free_col, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.set(out, pivots[i], f.neg(r.at(i, free_col)));
        ++out;
    }
    return k;
}

MatrixGF frobenius_entrywise(const MatrixGF& m, std::uint32_t e) {
    const Field& f = *m.field();
    MatrixGF r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, f.frobenius(m.at(i, j), e));
    return r;
}

namespace {

void check_monomial_args(const MatrixGF& a, const std::vector<std::uint32_t>& lambda,
                         const std::vector<std::uint32_t>& sigma, const MatrixGF& b) {
    check_same_field(*a.field(), *b.field());
    std::size_t n = a.cols();
    if (b.rows() != n || lambda.size() != n || sigma.size() != n)
        fail(Err::DimensionMismatch, "scaled product sizes disagree");
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] == 0) fail(Err::ZeroScalingEntry, "diagonal entry is zero");
        a.field()->check_code(lambda[i]);
        if (sigma[i] >= n || hit[sigma[i]])
            fail(Err::PreconditionViolated, "sigma is not a permutation");
        hit[sigma[i]] = true;
    }
}

}  // namespace

MatrixGF scaled_product(const MatrixGF& a, const std::vector<std::uint32_t>& lambda,
                        const std::vector<std::uint32_t>& sigma, const MatrixGF& b,
                        ProductPath path) {
    check_monomial_args(a, lambda, sigma, b);
    const Field& f = *a.field();
    std::size_t n = a.cols();

    if (path == ProductPath::Direct) {
        // rows of I_lambda P_sigma B: row i = lambda_i * Row_{sigma(i)}... no:
        // (I_lambda P_sigma B)_{i,*} = lambda_i * B_{sigma(i),*}
        MatrixGF sb(b.field(), n, b.cols());
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t* src = b.row_ptr(sigma[i]);
            for (std::size_t j = 0; j < b.cols(); ++j)
                sb.set(i, j, f.mul(lambda[i], src[j]));
        }
        return a * sb;
    }

    // Rank-update path: start from A*B, add the scaling corrections, then
    // consume sigma as a product of transpositions, updating a working copy
    // of A's columns as each swap is applied.
    MatrixGF prod = a * b;
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] == 1) continue;
        std::uint32_t c = f.sub(lambda[i], 1);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            std::uint32_t arc = f.mul(c, a.at(r, i));
            if (arc == 0) continue;
            const std::uint32_t* brow = b.row_ptr(i);
            for (std::size_t s = 0; s < b.cols(); ++s)
                if (brow[s]) prod.set(r, s, f.add(prod.at(r, s), f.mul(arc, brow[s])));
        }
    }

    MatrixGF acur = a;  // accumulates A I_lambda P_(t1) ... column state
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < n; ++i) acur.set(r, i, f.mul(acur.at(r, i), lambda[i]));

    std::vector<std::uint32_t> perm = sigma;  // remaining permutation to apply
    for (std::size_t i = 0; i < n; ++i) {
        while (perm[i] != i) {
            std::size_t j = perm[i];
            // apply transposition (i, j) on the right of acur:
            // prod += (Col_j(acur) - Col_i(acur)) (Row_i(B) - Row_j(B))
            for (std::size_t r = 0; r < a.rows(); ++r) {
                std::uint32_t u = f.sub(acur.at(r, j), acur.at(r, i));
                if (u == 0) continue;
                const std::uint32_t* bi = b.row_ptr(i);
                const std::uint32_t* bj = b.row_ptr(j);
                for (std::size_t s = 0; s < b.cols(); ++s) {
                    std::uint32_t v = f.sub(bi[s], bj[s]);
                    if (v) prod.set(r, s, f.add(prod.at(r, s), f.mul(u, v)));
                }
            }
            for (std::size_t r = 0; r < a.rows(); ++r) {
                std::uint32_t t = acur.at(r, i);
                acur.set(r, i, acur.at(r, j));
                acur.set(r, j, t);
            }
            std::swap(perm[i], perm[j]);
        }
    }
    return prod;
}

}  // namespace relhull
