#!/usr/bin/env python3
"""Generate src/conway_table.cpp: Conway polynomials C_{p,l} for all p^l <= 2^16, l >= 2.

A Conway polynomial C_{p,n} is the minimal monic degree-n polynomial over GF(p)
that is primitive and norm-compatible with C_{p,m} for every proper divisor m of n,
where minimality is with respect to the usual signed-word order: writing
f = x^n + a_{n-1} x^{n-1} + ... + a_0, its word is (b_{n-1}, ..., b_0) with
b_i = (-1)^(n-i) a_i mod p, and words compare lexicographically.

Polynomials are coefficient lists in ascending degree order.
"""

import sys


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mulmod(a, b, f, p):
    """a*b mod f, f monic of degree n."""
    n = len(f) - 1
    r = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    for d in range(len(r) - 1, n - 1, -1):
        c = r[d]
        if c:
            r[d] = 0
            for k in range(n + 1):
                r[d - n + k] = (r[d - n + k] - c * f[k]) % p
    return poly_trim(r[:n] if len(r) > n else r)


def poly_powmod(base, e, f, p):
    result = [1]
    cur = base[:]
    while e:
        if e & 1:
            result = poly_mulmod(result, cur, f, p)
        cur = poly_mulmod(cur, cur, f, p)
        e >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        # a mod b
        b_lead_inv = pow(b[-1], p - 2, p) if p > 2 else b[-1]
        while len(a) >= len(b) and a:
            c = (a[-1] * b_lead_inv) % p
            shift = len(a) - len(b)
            for k in range(len(b)):
                a[shift + k] = (a[shift + k] - c * b[k]) % p
            poly_trim(a)
        a, b = b, a
    return a


def is_irreducible(f, p, n):
    x = [0, 1]
    x_red = poly_mulmod(x, [1], f, p)
    # x^(p^n) == x mod f
    t = x_red[:]
    for _ in range(n):
        t = poly_powmod(t, p, f, p)
    if poly_trim(t[:]) != x_red:
        return False
    for r in prime_factors(n):
        t = x[:]
        for _ in range(n // r):
            t = poly_powmod(t, p, f, p)
        diff = t[:] + [0] * (2 - len(t))
        diff[1] = (diff[1] - 1) % p
        poly_trim(diff)
        if len(poly_gcd(f[:], diff, p)) != 1:
            return False
    return True


def x_is_primitive(f, p, n):
    q1 = p ** n - 1
    for s in prime_factors(q1):
        if poly_powmod([0, 1], q1 // s, f, p) == [1]:
            return False
    return True


def is_compatible(f, p, n, cache):
    qn = p ** n - 1
    for r in prime_factors(n):
        m = n // r
        g = cache[(p, m)]
        e = qn // (p ** m - 1)
        xe = poly_powmod([0, 1], e, f, p)
        # evaluate g at xe, mod f
        acc = []
        power = [1]
        for c in g:
            if c:
                term = [(c * v) % p for v in power]
                acc = poly_trim([(u + v) % p for u, v in
                                 zip(acc + [0] * max(0, len(term) - len(acc)),
                                     term + [0] * max(0, len(acc) - len(term)))])
            power = poly_mulmod(power, xe, f, p)
        if acc:
            return False
    return True


def word_to_poly(word, n, p):
    """word = (b_{n-1},...,b_0) -> monic poly coeffs ascending."""
    f = [0] * (n + 1)
    f[n] = 1
    for i in range(n):
        b = word[n - 1 - i]
        sign = -1 if (n - i) % 2 else 1
        f[i] = (sign * b) % p
    return f


def conway(p, n, cache):
    if (p, n) in cache:
        return cache[(p, n)]
    for m in range(1, n):
        if n % m == 0:
            conway(p, m, cache)
    # enumerate words in lexicographic (numeric) order
    word = [0] * n
    total = p ** n
    for idx in range(total):
        t = idx
        for i in range(n - 1, -1, -1):
            word[i] = t % p
            t //= p
        f = word_to_poly(word, n, p)
        if f[0] == 0:
            continue  # x divides f
        if not is_irreducible(f, p, n):
            continue
        if not x_is_primitive(f, p, n):
            continue
        if not is_compatible(f, p, n, cache):
            continue
        cache[(p, n)] = f
        return f
    raise RuntimeError(f"no Conway polynomial found for p={p}, n={n}")


def main():
    limit = 1 << 16
    cache = {}
    entries = []
    for p in range(2, 256):
        if not is_prime(p):
            continue
        n = 2
        while p ** n <= limit:
            entries.append((p, n, conway(p, n, cache)))
            n += 1

    checks = {
        (2, 2): [1, 1, 1],
        (2, 3): [1, 1, 0, 1],
        (2, 4): [1, 1, 0, 0, 1],
        (2, 8): [1, 0, 1, 1, 1, 0, 0, 0, 1],
        (3, 2): [2, 2, 1],
        (3, 3): [1, 2, 0, 1],
        (5, 2): [2, 4, 1],
    }
    for (p, n), expect in checks.items():
        got = cache[(p, n)]
        assert got == expect, f"C_{{{p},{n}}} = {got}, expected {expect}"

    entries.sort()
    lines = []
    lines.append("// Table of Conway polynomials C_{p,l} for every prime power p^l <= 2^16")
    lines.append("// with l >= 2, coefficients in ascending degree order.  Generated by")
    lines.append("// tools/gen_conway_table.py; do not edit by hand.")
    lines.append('#include "relhull/conway.hpp"')
    lines.append("")
    lines.append("namespace relhull::detail {")
    lines.append("")
    lines.append("const ConwayRecord conway_records[] = {")
    for p, n, f in entries:
        coeffs = ", ".join(str(c) for c in f)
        lines.append(f"    {{{p}, {n}, {{{coeffs}}}}},")
    lines.append("};")
    lines.append("")
    lines.append("const std::size_t conway_record_count =")
    lines.append("    sizeof(conway_records) / sizeof(conway_records[0]);")
    lines.append("")
    lines.append("}  // namespace relhull::detail")
    lines.append("")
    out = "\n".join(lines)
    path = sys.argv[1] if len(sys.argv) > 1 else "src/conway_table.cpp"
    with open(path, "w") as fh:
        fh.write(out)
    print(f"wrote {path}: {len(entries)} records")


if __name__ == "__main__":
    main()
