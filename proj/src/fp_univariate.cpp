#include "fp_univariate.hpp"

#include <cassert>

namespace zetadiv::fpu {

u64 inv_mod(u64 a, u64 p) {
    // extended Euclid; a nonzero mod p
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    assert(r == 1);
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = addm(x, y, p);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = subm(x, y, p);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
    c %= p;
    if (c == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulm(a[i], c, p);
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
    assert(!is_zero(b));
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    u64 lcinv = inv_mod(b.back(), p);
    while (!is_zero(r) && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        u64 c = mulm(r.back(), lcinv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = subm(r[shift + i], mulm(c, b[i], p), p);
        trim(r);
    }
    trim(q);
}

Poly mod(const Poly& a, const Poly& b, u64 p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

Poly monic(const Poly& f, u64 p) {
    if (is_zero(f)) return f;
    return scale(f, inv_mod(f.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!is_zero(b)) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& f, u64 p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * (i % p)) % p;
    trim(r);
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    return mod(mul(a, b, p), m, p);
}

Poly powmod(Poly base, const mpz_class& exp, const Poly& m, u64 p) {
    Poly result{1};
    base = mod(base, m, p);
    mpz_class e = exp;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m, p);
        e >>= 1;
        if (e > 0) base = mulmod(base, base, m, p);
    }
    return result;
}

Poly powmod_u64(Poly base, u64 exp, const Poly& m, u64 p) {
    Poly result{1};
    base = mod(base, m, p);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m, p);
        exp >>= 1;
        if (exp > 0) base = mulmod(base, base, m, p);
    }
    return result;
}

Poly frobenius_power(const Poly& m, u64 p, unsigned k) {
    Poly x{0, 1};
    Poly r = mod(x, m, p);
    for (unsigned i = 0; i < k; ++i) r = powmod_u64(r, p, m, p);
    return r;
}

bool is_irreducible(const Poly& f, u64 p) {
    int e = degree(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    const Poly x{0, 1};
    // x^(p^e) must reduce to x
    Poly xe = frobenius_power(f, p, static_cast<unsigned>(e));
    if (xe != mod(x, f, p)) return false;
    // for every prime l | e, gcd(x^(p^(e/l)) - x, f) must be trivial
    std::vector<int> prime_divisors;
    int rem = e;
    for (int l = 2; l * l <= rem; ++l) {
        if (rem % l) continue;
        prime_divisors.push_back(l);
        while (rem % l == 0) rem /= l;
    }
    if (rem > 1) prime_divisors.push_back(rem);
    for (int l : prime_divisors) {
        Poly xk = frobenius_power(f, p, static_cast<unsigned>(e / l));
        Poly g = gcd(sub(xk, x, p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

namespace {

// squarefree part decomposition over F_p (handles the p-th power collapse)
void squarefree_split(const Poly& f, u64 p, unsigned mult,
                      std::vector<std::pair<Poly, unsigned>>& out) {
    Poly fp = derivative(f, p);
    if (is_zero(fp)) {
        // f = g(x^p); take p-th root and recurse with multiplicity * p
        Poly g((degree(f) / p) + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = f[i * p];
        trim(g);
        squarefree_split(g, p, mult * static_cast<unsigned>(p), out);
        return;
    }
    Poly c = gcd(f, fp, p);
    Poly w; { Poly q, r; divmod(f, c, p, q, r); w = q; }
    unsigned i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(w, c, p);
        Poly fac; { Poly q, r; divmod(w, y, p, q, r); fac = q; }
        if (degree(fac) > 0) out.emplace_back(monic(fac, p), mult * i);
        w = y;
        { Poly q, r; divmod(c, y, p, q, r); c = q; }
        ++i;
    }
    if (degree(c) > 0) squarefree_split(c, p, mult * static_cast<unsigned>(p), out);
}

Poly random_poly(int max_deg, u64 p, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(0, p - 1);
    Poly r(static_cast<std::size_t>(max_deg) + 1);
    for (auto& c : r) c = dist(rng);
    trim(r);
    return r;
}

// equal-degree splitting of a monic squarefree product of degree-d irreducibles
void equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(f);
        return;
    }
    Poly g;
    while (true) {
        Poly a = random_poly(degree(f) - 1, p, rng);
        if (degree(a) < 1) continue;
        if (p == 2) {
            // trace splitter: T(a) = a + a^2 + ... + a^(2^(d-1))
            Poly t = mod(a, f, p), term = t;
            for (int i = 1; i < d; ++i) {
                term = mulmod(term, term, f, p);
                t = add(t, term, p);
            }
            g = gcd(t, f, p);
        } else {
            mpz_class exp;
            mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(d));
            exp = (exp - 1) / 2;
            Poly b = powmod(a, exp, f, p);
            b = sub(b, Poly{1}, p);
            g = gcd(b, f, p);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) break;
    }
    Poly h; { Poly q, r; divmod(f, g, p, q, r); h = q; }
    equal_degree(g, d, p, rng, out);
    equal_degree(monic(h, p), d, p, rng, out);
}

} // namespace

std::vector<FpFactor> factor(const Poly& f, u64 p, std::mt19937_64& rng) {
    std::vector<FpFactor> result;
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree_split(monic(f, p), p, 1, sqf);
    for (auto& [part, mult] : sqf) {
        // distinct-degree stage
        Poly rest = part;
        Poly h = mod(Poly{0, 1}, rest, p);
        int d = 0;
        while (degree(rest) > 0 && 2 * (d + 1) <= degree(rest)) {
            ++d;
            h = powmod_u64(h, p, rest, p);
            Poly g = gcd(sub(h, Poly{0, 1}, p), rest, p);
            if (degree(g) > 0) {
                std::vector<Poly> pieces;
                equal_degree(g, d, p, rng, pieces);
                for (auto& piece : pieces) result.push_back({piece, mult});
                { Poly q, r; divmod(rest, g, p, q, r); rest = monic(q, p); }
                h = mod(h, rest, p);
            }
        }
        if (degree(rest) > 0) result.push_back({monic(rest, p), mult});
    }
    return result;
}

} // namespace zetadiv::fpu
