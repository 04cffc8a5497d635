#include "relhull/field.hpp"

#include <algorithm>
#include <numeric>

#include "relhull/conway.hpp"

namespace relhull {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using Poly = std::vector<std::uint32_t>;  // ascending degree, coefficients mod p

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    while (a.size() >= b.size() && !a.empty()) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] = (a[shift + k] + (p - c % p) * b[k]) % p;
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

// Smallest primitive root modulo prime p.
std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    auto factors = prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto f : factors) {
            std::uint64_t e = (p - 1) / f, acc = 1, cur = g;
            while (e) {
                if (e & 1) acc = acc * cur % p;
                cur = cur * cur % p;
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    fail(Err::Internal, "no primitive root found");
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t ell) {
    if (!is_prime(p)) fail(Err::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (ell == 0) fail(Err::PreconditionViolated, "extension degree must be positive");
    if (ell == 1) {
        std::uint32_t g = smallest_primitive_root(p);
        return make(p, 1, {(p - g) % p, 1});  // x - g
    }
    const auto* rec = detail::conway_lookup(p, ell);
    if (rec == nullptr) fail(Err::FieldTooLarge, "p^ell exceeds 2^16, no default modulus");
    std::vector<std::uint32_t> modulus(rec->coeffs, rec->coeffs + ell + 1);
    return make(p, ell, std::move(modulus));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus) {
    auto f = std::shared_ptr<Field>(new Field());
    f->init(p, ell, std::move(modulus));
    return f;
}

void Field::init(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) fail(Err::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (ell == 0) fail(Err::PreconditionViolated, "extension degree must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < ell; ++i) {
        q *= p;
        if (q > (1u << 16)) fail(Err::FieldTooLarge, "p^ell exceeds 2^16");
    }
    p_ = p;
    ell_ = ell;
    q_ = static_cast<std::uint32_t>(q);

    if (modulus.size() != ell + 1 || modulus.back() != 1)
        fail(Err::PreconditionViolated, "modulus must be monic of degree ell");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1)
        fail(Err::PreconditionViolated, "modulus must be monic of degree ell");
    modulus_ = std::move(modulus);

    // Irreducibility by trial division against every monic polynomial of
    // degree between 1 and ell/2.
    for (std::uint32_t d = 1; 2 * d <= ell_; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly divisor(d + 1, 0);
            divisor[d] = 1;
            std::uint64_t t = code;
            for (std::uint32_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_rem(modulus_, divisor, p).empty())
                fail(Err::ReducibleModulus, "modulus has a factor of degree " + std::to_string(d));
        }
    }

    pw_.assign(ell_ + 1, 1);
    for (std::uint32_t i = 1; i <= ell_; ++i) pw_[i] = pw_[i - 1] * p;

    auto poly_of_code = [&](std::uint32_t code) {
        Poly v(ell_, 0);
        for (std::uint32_t i = 0; i < ell_; ++i) {
            v[i] = code % p;
            code /= p;
        }
        poly_trim(v);
        return v;
    };
    auto code_of_poly = [&](const Poly& v) {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < v.size(); ++i) code += v[i] * pw_[i];
        return code;
    };

    // Pick the primitive element: the residue class of x when it is
    // primitive, otherwise the smallest code whose order is q - 1.
    auto factors = prime_factors(q_ - 1);
    auto has_full_order = [&](std::uint32_t code) {
        Poly base = poly_of_code(code);
        if (base.empty()) return false;
        if (q_ == 2) return code == 1;
        for (auto fac : factors)
            if (poly_powmod(base, (q_ - 1) / fac, modulus_, p) == Poly{1}) return false;
        return true;
    };

    std::uint32_t gen = 0;
    if (ell_ >= 2 && has_full_order(pw_[1])) {
        gen = pw_[1];
    } else {
        for (std::uint32_t c = 1; c < q_; ++c) {
            if (has_full_order(c)) { gen = c; break; }
        }
    }
    if (gen == 0) fail(Err::Internal, "no generator of the unit group found");
    primitive_ = gen;

    // exp/log tables; building them re-verifies that gen has order q - 1.
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    Poly cur{1};
    Poly g = poly_of_code(gen);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        std::uint32_t code = code_of_poly(cur);
        if (seen[code]) fail(Err::Internal, "generator order is below q - 1");
        seen[code] = true;
        exp_[i] = code;
        exp_[i + (q_ - 1)] = code;
        log_[code] = i;
        cur = poly_mulmod(cur, g, modulus_, p);
    }
    if (code_of_poly(cur) != 1) fail(Err::Internal, "generator order does not divide q - 1");

    neg_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t code = 0;
        for (std::uint32_t i = 0, t = a; i < ell_; ++i, t /= p)
            code += ((p - t % p) % p) * pw_[i];
        neg_table_[a] = code;
    }

    if (q_ <= 256) {
        add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[a * q_ + b] = add_slow(a, b);
    }
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < ell_; ++i) {
        code += (a % p_ + b % p_) % p_ * pw_[i];
        a /= p_;
        b /= p_;
    }
    return code;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    check_code(a);
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

std::uint32_t Field::frobenius(std::uint32_t a, std::uint32_t e) const {
    if (e >= ell_)
        fail(Err::ExponentOutOfRange, "frobenius exponent " + std::to_string(e) +
                                          " not below extension degree " + std::to_string(ell_));
    check_code(a);
    if (a == 0 || a == 1) return a;
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p_;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (pe % (q_ - 1))) % (q_ - 1)];
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t a) const {
    check_code(a);
    std::vector<std::uint32_t> v(ell_);
    for (std::uint32_t i = 0; i < ell_; ++i) {
        v[i] = a % p_;
        a /= p_;
    }
    return v;
}

std::uint32_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != ell_) fail(Err::LengthMismatch, "coefficient vector length mismatch");
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < ell_; ++i) {
        if (c[i] >= p_) fail(Err::IndexOutOfRange, "coefficient not reduced mod p");
        code += c[i] * pw_[i];
    }
    return code;
}

std::uint32_t Field::order(std::uint32_t a) const {
    check_code(a);
    if (a == 0) fail(Err::DivisionByZero, "order of zero");
    std::uint32_t n = q_ - 1;
    std::uint32_t d = std::gcd(n, log_[a] == 0 ? n : log_[a]);
    return n / d;
}

void check_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) fail(Err::MixedFields, "objects belong to different fields");
}

}  // namespace relhull
