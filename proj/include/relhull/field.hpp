#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "relhull/error.hpp"

namespace relhull {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^ell) with p^ell <= 2^16.  Elements are integer codes in [0, q): the
// code of an element with polynomial-basis coefficients (c0, ..., c_{ell-1})
// is c0 + c1*p + ... + c_{ell-1}*p^{ell-1}.  Multiplication runs on discrete
// log tables built from a primitive element at construction; the modulus is
// checked irreducible and the generator's order is checked against the
// factorization of q-1 before any table is trusted.
class Field {
  public:
    // Default modulus: the Conway polynomial for (p, ell).
    static FieldPtr make(std::uint32_t p, std::uint32_t ell);
    // modulus: coefficients c0..c_ell in ascending degree order, monic.
    static FieldPtr make(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t ell() const { return ell_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint32_t primitive() const { return primitive_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
    }
    std::uint32_t neg(std::uint32_t a) const { return neg_table_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table_[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    // a^e for e >= 0, with 0^0 = 1.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // a^(p^e), 0 <= e < ell.
    std::uint32_t frobenius(std::uint32_t a, std::uint32_t e) const;

    // Polynomial-basis coefficients (base-p digits of the code), length ell.
    std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
    std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

    // Multiplicative order; a must be nonzero.
    std::uint32_t order(std::uint32_t a) const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && ell_ == other.ell_ && modulus_ == other.modulus_;
    }

    void check_code(std::uint32_t a) const {
        if (a >= q_) fail(Err::IndexOutOfRange, "element code " + std::to_string(a) + " out of range");
    }

  private:
    Field() = default;
    void init(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus);
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0, ell_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> pw_;      // p^0..p^ell
    std::vector<std::uint32_t> exp_;     // exp_[i] = g^i, doubled to avoid mod
    std::vector<std::uint32_t> log_;     // log_[code], code != 0
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> add_table_;  // only built when q <= 256
};

// Element of a specific field; bundles the code with its field so that mixed
// operands are rejected instead of silently combined.
class FieldElement {
  public:
    FieldElement(FieldPtr field, std::uint32_t code) : field_(std::move(field)), code_(code) {
        field_->check_code(code_);
    }

    std::uint32_t code() const { return code_; }
    const FieldPtr& field() const { return field_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->div(a.code_, b.code_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
    FieldElement frobenius(std::uint32_t e) const { return {field_, field_->frobenius(code_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->same_as(*b.field_) && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!a.field_->same_as(*b.field_))
            fail(Err::MixedFields, "operands belong to different fields");
    }

    FieldPtr field_;
    std::uint32_t code_;
};

void check_same_field(const Field& a, const Field& b);

}  // namespace relhull
