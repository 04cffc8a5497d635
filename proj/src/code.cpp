#include "relhull/code.hpp"

#include <algorithm>
#include <limits>

#include "relhull/error.hpp"

namespace relhull {

namespace {

void check_permutation(const std::vector<std::uint32_t>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    for (std::uint32_t v : sigma) {
        if (v >= sigma.size() || seen[v]) fail(Err::PreconditionViolated, "sigma is not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

MonomialMap::MonomialMap(FieldPtr field, std::vector<std::uint32_t> lambda, std::vector<std::uint32_t> sigma)
    : field_(std::move(field)), lambda_(std::move(lambda)), sigma_(std::move(sigma)) {
    if (lambda_.size() != sigma_.size())
        fail(Err::DimensionMismatch, "scaling and permutation lengths differ");
    for (std::uint32_t v : lambda_) {
        field_->check_code(v);
        if (v == 0) fail(Err::ZeroScalingEntry, "monomial map scaling entry is zero");
    }
    check_permutation(sigma_);
}

MonomialMap MonomialMap::identity(FieldPtr field, std::size_t n) {
    std::vector<std::uint32_t> lambda(n, 1), sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<std::uint32_t>(i);
    return MonomialMap(std::move(field), std::move(lambda), std::move(sigma));
}

MonomialMap MonomialMap::scaling(FieldPtr field, std::size_t n, std::size_t coord, std::uint32_t value) {
    if (coord >= n) fail(Err::IndexOutOfRange, "scaling coordinate out of range");
    MonomialMap m = identity(std::move(field), n);
    m.field_->check_code(value);
    if (value == 0) fail(Err::ZeroScalingEntry, "monomial map scaling entry is zero");
    m.lambda_[coord] = value;
    return m;
}

MonomialMap MonomialMap::transposition(FieldPtr field, std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) fail(Err::IndexOutOfRange, "transposition coordinate out of range");
    MonomialMap m = identity(std::move(field), n);
    std::swap(m.sigma_[i], m.sigma_[j]);
    return m;
}

MonomialMap MonomialMap::compose(const MonomialMap& a, const MonomialMap& b) {
    check_same_field(*a.field_, *b.field_);
    if (a.n() != b.n()) fail(Err::LengthMismatch, "composed maps act on different lengths");
    std::size_t n = a.n();
    const Field& f = *a.field_;
    std::vector<std::uint32_t> lambda(n), sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        lambda[i] = f.mul(a.lambda_[i], b.lambda_[a.sigma_[i]]);
        sigma[i] = b.sigma_[a.sigma_[i]];
    }
    return MonomialMap(a.field_, std::move(lambda), std::move(sigma));
}

MonomialMap MonomialMap::inverse() const {
    std::size_t n = this->n();
    const Field& f = *field_;
    std::vector<std::uint32_t> lambda(n), sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[sigma_[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j) lambda[j] = f.inv(lambda_[sigma[j]]);
    return MonomialMap(field_, std::move(lambda), std::move(sigma));
}

MonomialMap MonomialMap::dual_map() const {
    std::vector<std::uint32_t> lambda(lambda_.size());
    for (std::size_t i = 0; i < lambda_.size(); ++i) lambda[i] = field_->inv(lambda_[i]);
    return MonomialMap(field_, std::move(lambda), sigma_);
}

std::vector<std::uint32_t> MonomialMap::apply(const std::vector<std::uint32_t>& word) const {
    if (word.size() != n()) fail(Err::LengthMismatch, "word length does not match map");
    std::vector<std::uint32_t> out(word.size(), 0);
    for (std::size_t i = 0; i < word.size(); ++i) out[sigma_[i]] = field_->mul(word[i], lambda_[i]);
    return out;
}

MatrixGF MonomialMap::apply_rows(const MatrixGF& m) const {
    check_same_field(*field_, *m.field());
    if (m.cols() != n()) fail(Err::LengthMismatch, "matrix width does not match map");
    MatrixGF out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < m.cols(); ++i)
            out.set(r, sigma_[i], field_->mul(m.at(r, i), lambda_[i]));
    return out;
}

bool MonomialMap::is_identity() const {
    for (std::size_t i = 0; i < n(); ++i)
        if (lambda_[i] != 1 || sigma_[i] != i) return false;
    return true;
}

LinearCode LinearCode::from_matrix(const MatrixGF& m) {
    auto [r, pivots] = rref(m);
    MatrixGF gen(m.field(), pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) gen.set(i, j, r.at(i, j));
    MatrixGF dual = rref(kernel(gen)).first;
    return LinearCode(std::move(gen), std::move(dual));
}

LinearCode LinearCode::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
    return from_matrix(MatrixGF::from_codes(std::move(field), rows));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) {
    return from_matrix(MatrixGF(std::move(field), 0, n));
}

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
    return from_matrix(MatrixGF::identity(std::move(field), n));
}

bool LinearCode::contains(const std::uint32_t* word) const {
    const Field& f = *field();
    for (std::size_t r = 0; r < dual_.rows(); ++r) {
        const std::uint32_t* row = dual_.row_ptr(r);
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < n(); ++j)
            if (row[j] != 0 && word[j] != 0) acc = f.add(acc, f.mul(row[j], word[j]));
        if (acc != 0) return false;
    }
    return true;
}

bool LinearCode::contains(const std::vector<std::uint32_t>& word) const {
    if (word.size() != n()) fail(Err::LengthMismatch, "word length does not match code");
    return contains(word.data());
}

bool LinearCode::subset_of(const LinearCode& other) const {
    check_same_field(*field(), *other.field());
    if (n() != other.n()) fail(Err::LengthMismatch, "codes have different lengths");
    for (std::size_t r = 0; r < gen_.rows(); ++r)
        if (!other.contains(gen_.row_ptr(r))) return false;
    return true;
}

LinearCode dual(const LinearCode& c) { return LinearCode::from_matrix(c.parity()); }

LinearCode relative_hull(const LinearCode& c1, const LinearCode& c2) {
    check_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) fail(Err::LengthMismatch, "codes have different lengths");
    MatrixGF prod = c2.gen() * transpose(c1.gen());
    MatrixGF ker = kernel(prod);
    return LinearCode::from_matrix(ker * c1.gen());
}

LinearCode schur(const LinearCode& c1, const LinearCode& c2) {
    check_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) fail(Err::LengthMismatch, "codes have different lengths");
    const Field& f = *c1.field();
    MatrixGF rows(c1.field(), c1.k() * c2.k(), c1.n());
    for (std::size_t i = 0; i < c1.k(); ++i)
        for (std::size_t j = 0; j < c2.k(); ++j)
            for (std::size_t t = 0; t < c1.n(); ++t)
                rows.set(i * c2.k() + j, t, f.mul(c1.gen().at(i, t), c2.gen().at(j, t)));
    return LinearCode::from_matrix(rows);
}

LinearCode apply_map(const LinearCode& c, const MonomialMap& m) {
    return LinearCode::from_matrix(m.apply_rows(c.gen()));
}

LinearCode galois_image(const LinearCode& c, std::uint32_t e) {
    return LinearCode::from_matrix(frobenius_entrywise(c.gen(), e));
}

void check_enumeration_budget(std::uint32_t q, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kEnumerationBudget / q)
            fail(Err::EnumerationTooLarge, "codeword enumeration exceeds q^k budget of 2^24");
        total *= q;
    }
    if (total > kEnumerationBudget)
        fail(Err::EnumerationTooLarge, "codeword enumeration exceeds q^k budget of 2^24");
}

std::size_t min_distance(const LinearCode& c) {
    if (c.k() == 0) fail(Err::PreconditionViolated, "zero code has no minimum distance");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_codeword(c.gen(), [&](const std::vector<std::uint32_t>&, std::size_t w) -> bool {
        if (w > 0 && w < best) best = w;
        return best > 1;
    });
    return best;
}

std::size_t max_weight(const LinearCode& c) {
    if (c.k() == 0) return 0;
    std::size_t best = 0;
    for_each_codeword(c.gen(), [&](const std::vector<std::uint32_t>&, std::size_t w) -> bool {
        if (w > best) best = w;
        return best < c.n();
    });
    return best;
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
    WeightEnumerator we;
    we.counts.assign(c.n() + 1, 0);
    for_each_codeword(c.gen(),
                      [&](const std::vector<std::uint32_t>&, std::size_t w) { we.counts[w] += 1; });
    return we;
}

std::optional<std::size_t> weight_of_difference(const LinearCode& a, const LinearCode& b) {
    check_same_field(*a.field(), *b.field());
    if (a.n() != b.n()) fail(Err::LengthMismatch, "codes have different lengths");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_codeword(a.gen(), [&](const std::vector<std::uint32_t>& word, std::size_t w) -> bool {
        if (w > 0 && w < best && !b.contains(word.data())) best = w;
        return best > 1;
    });
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

std::optional<std::vector<std::uint32_t>> full_weight_word(const LinearCode& c) {
    std::optional<std::vector<std::uint32_t>> found;
    for_each_codeword(c.gen(), [&](const std::vector<std::uint32_t>& word, std::size_t w) -> bool {
        if (w == c.n()) {
            found = word;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace relhull
