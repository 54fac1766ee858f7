#include <algorithm>
#include <random>

#include "zetadiv/zeta.hpp"

#include "fp_univariate.hpp"

namespace zetadiv::zeta {

namespace {

constexpr int kMaxFactorDegree = 64;

// balanced residue in (-m/2, m/2]
mpz_class balanced(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly balanced_poly(const IntPoly& f, const mpz_class& m) {
    IntPoly r = f;
    for (auto& x : r.c) x = balanced(x, m);
    r.trim();
    return r;
}

IntPoly from_fp(const fpu::Poly& f) {
    IntPoly r;
    for (auto v : f) r.c.emplace_back(static_cast<unsigned long>(v));
    r.trim();
    return r;
}

fpu::Poly to_fp(const IntPoly& f, std::uint64_t p) {
    fpu::Poly r;
    r.reserve(f.c.size());
    for (const auto& x : f.c) {
        mpz_class m = x % static_cast<unsigned long>(p);
        if (m < 0) m += static_cast<unsigned long>(p);
        r.push_back(m.get_ui());
    }
    fpu::trim(r);
    return r;
}

// Yun's squarefree decomposition of a primitive polynomial with positive
// leading coefficient: f = prod part_i^i over the emitted parts.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& f) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    IntPoly a = poly_gcd(f, f.derivative());
    IntPoly b, c;
    if (!f.divide_exact(a, b))
        throw InternalInconsistencyError("squarefree: gcd does not divide");
    if (!f.derivative().divide_exact(a, c))
        throw InternalInconsistencyError("squarefree: gcd does not divide the derivative");
    IntPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly g = poly_gcd(b, d);
        IntPoly nb, nc;
        if (!b.divide_exact(g, nb) || !d.divide_exact(g, nc))
            throw InternalInconsistencyError("squarefree: step division failed");
        if (g.degree() > 0) out.emplace_back(g, i);
        b = std::move(nb);
        d = nc - b.derivative();
        ++i;
    }
    return out;
}

// Mignotte-style bound on the coefficients of any divisor of g of degree at
// most ceil(deg g / 2) + 1, times |lc(g)| for the lc-adjusted candidates.
mpz_class mignotte_bound(const IntPoly& g) {
    mpz_class norm2_sq = 0;
    for (const auto& x : g.c) norm2_sq += x * x;
    mpz_class norm2 = sqrt(norm2_sq) + 1;
    unsigned half = static_cast<unsigned>((g.degree() + 1) / 2 + 1);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, half);
    return two_pow * norm2 * abs(g.leading());
}

// Linear Hensel lifting of a monic modular factorization
// g == lc * prod(factors) (mod l) up to a modulus l^K > target.
struct Lifted {
    std::vector<IntPoly> factors;   // monic, balanced coefficients mod l^K
    mpz_class modulus;              // l^K
};

Lifted hensel_lift(const IntPoly& g, const std::vector<fpu::Poly>& mod_factors,
                   std::uint64_t ell, const mpz_class& target) {
    const std::size_t r = mod_factors.size();
    // Bezout data over F_l: beta_i * prod_{t != i} f_t == 1 (mod f_i)
    std::vector<fpu::Poly> betas(r);
    for (std::size_t i = 0; i < r; ++i) {
        fpu::Poly prod{1};
        for (std::size_t t = 0; t < r; ++t)
            if (t != i) prod = fpu::mulmod(prod, mod_factors[t], mod_factors[i], ell);
        fpu::Poly r0 = mod_factors[i], r1 = prod, s0 = {}, s1 = {1};
        while (!fpu::is_zero(r1)) {
            fpu::Poly q, rem;
            fpu::divmod(r0, r1, ell, q, rem);
            fpu::Poly s = fpu::sub(s0, fpu::mul(q, s1, ell), ell);
            r0 = std::move(r1); r1 = std::move(rem);
            s0 = std::move(s1); s1 = std::move(s);
        }
        if (fpu::degree(r0) != 0)
            throw InternalInconsistencyError("hensel: modular factors are not coprime");
        betas[i] = fpu::scale(s0, fpu::inv_mod(r0[0], ell), ell);
    }

    Lifted lift;
    lift.modulus = static_cast<unsigned long>(ell);
    lift.factors.reserve(r);
    for (const auto& f : mod_factors) lift.factors.push_back(from_fp(f));

    mpz_class lc_mod = g.leading() % static_cast<unsigned long>(ell);
    if (lc_mod < 0) lc_mod += static_cast<unsigned long>(ell);
    const std::uint64_t lc_inv = fpu::inv_mod(lc_mod.get_ui(), ell);

    while (lift.modulus <= target) {
        mpz_class next = lift.modulus * static_cast<unsigned long>(ell);
        IntPoly prod = IntPoly::one();
        for (const auto& f : lift.factors) prod = prod * f;
        IntPoly err = g - prod.scaled(g.leading());
        IntPoly err_over;
        err_over.c.resize(err.c.size());
        for (std::size_t i = 0; i < err.c.size(); ++i) {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), err.c[i].get_mpz_t(),
                        lift.modulus.get_mpz_t());
            if (rem != 0)
                throw InternalInconsistencyError("hensel: error not divisible by modulus");
            err_over.c[i] = q;
        }
        err_over.trim();
        fpu::Poly e_mod = fpu::scale(to_fp(err_over, ell), lc_inv, ell);
        for (std::size_t i = 0; i < r; ++i) {
            fpu::Poly delta =
                fpu::mulmod(fpu::mod(e_mod, mod_factors[i], ell), betas[i], mod_factors[i], ell);
            IntPoly d = from_fp(delta);
            IntPoly bump;
            bump.c.resize(d.c.size());
            for (std::size_t t = 0; t < d.c.size(); ++t) bump.c[t] = d.c[t] * lift.modulus;
            bump.trim();
            lift.factors[i] = balanced_poly(lift.factors[i] + bump, next);
        }
        lift.modulus = next;
    }
    return lift;
}

// Reported-factor convention: constant term +1 when the constant term is a
// unit, otherwise primitive with positive leading coefficient.
IntPoly normalize_factor(IntPoly h) {
    h = h.primitive_part();
    if (h.constant_term() == -1) return -h;
    return h;
}

// Zassenhaus recombination, smallest subsets first, verified by exact trial
// division over Z.
void recombine(IntPoly g, const std::vector<IntPoly>& lifted, const mpz_class& modulus,
               unsigned mult, std::vector<std::pair<IntPoly, unsigned>>& out) {
    std::vector<std::size_t> avail(lifted.size());
    for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;

    bool extracted = true;
    while (extracted && !avail.empty()) {
        extracted = false;
        for (std::size_t size = 1; 2 * size <= avail.size() && !extracted; ++size) {
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                IntPoly cand = IntPoly({1}).scaled(g.leading());
                for (std::size_t i : idx) cand = cand * lifted[avail[i]];
                cand = balanced_poly(cand, modulus).primitive_part();
                IntPoly quotient;
                if (cand.degree() >= 1 && g.divide_exact(cand, quotient)) {
                    out.emplace_back(normalize_factor(cand), mult);
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0, t = 0; i < avail.size(); ++i) {
                        if (t < idx.size() && idx[t] == i) { ++t; continue; }
                        keep.push_back(avail[i]);
                    }
                    avail = std::move(keep);
                    g = std::move(quotient);
                    extracted = true;
                    break;
                }
                // next size-combination of positions in avail
                std::size_t pos = size;
                bool more = false;
                while (pos-- > 0) {
                    if (idx[pos] + (size - pos) < avail.size()) {
                        ++idx[pos];
                        for (std::size_t t = pos + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
                        more = true;
                        break;
                    }
                }
                if (!more) break;
            }
        }
    }
    if (g.degree() >= 1) out.emplace_back(normalize_factor(g), mult);
}

std::vector<std::pair<IntPoly, unsigned>> factor_squarefree(const IntPoly& g, unsigned mult) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (g.degree() == 1) {
        out.emplace_back(normalize_factor(g), mult);
        return out;
    }
    // smallest prime with invertible leading coefficient and squarefree image
    std::uint64_t ell = 0;
    for (std::uint64_t cand = 2; cand < 100000; ++cand) {
        if (!algebra::is_prime_u64(cand)) continue;
        if (g.leading() % static_cast<unsigned long>(cand) == 0) continue;
        fpu::Poly gm = to_fp(g, cand);
        if (fpu::degree(gm) != g.degree()) continue;
        fpu::Poly d = fpu::derivative(gm, cand);
        if (fpu::is_zero(d)) continue;
        if (fpu::degree(fpu::gcd(gm, d, cand)) == 0) { ell = cand; break; }
    }
    if (ell == 0)
        throw InternalInconsistencyError("no usable prime for modular factorization");
    std::mt19937_64 rng(0x5eedf00dULL + static_cast<std::uint64_t>(g.degree()));
    auto mod_factors_full = fpu::factor(fpu::monic(to_fp(g, ell), ell), ell, rng);
    std::vector<fpu::Poly> mod_factors;
    for (auto& [f, m] : mod_factors_full) {
        if (m != 1)
            throw InternalInconsistencyError("squarefree image factored with multiplicity");
        mod_factors.push_back(f);
    }
    if (mod_factors.size() == 1) {
        out.emplace_back(normalize_factor(g), mult);
        return out;
    }
    mpz_class target = 2 * mignotte_bound(g);
    Lifted lift = hensel_lift(g, mod_factors, ell, target);
    recombine(g, lift.factors, lift.modulus, mult, out);
    return out;
}

} // namespace

std::vector<std::pair<IntPoly, unsigned>> factor_integer_poly(const IntPoly& f) {
    if (f.is_zero()) throw InvalidParamsError("cannot factor the zero polynomial");
    if (f.degree() > kMaxFactorDegree)
        throw DegreeTooLargeError("factorization is limited to degree 64");
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f.degree() == 0) return out;

    IntPoly work = f.primitive_part();
    auto parts = squarefree_decompose(work);
    for (const auto& [part, mult] : parts) {
        auto factors = factor_squarefree(part, mult);
        out.insert(out.end(), factors.begin(), factors.end());
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (std::size_t i = a.first.c.size(); i-- > 0;)
            if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
        return a.second < b.second;
    });

    // defensive product check; the unit normalization may flip the global sign
    IntPoly prod = IntPoly::one();
    for (const auto& [fac, mult] : out)
        for (unsigned i = 0; i < mult; ++i) prod = prod * fac;
    mpz_class cont = f.content();
    if (f.leading() < 0) cont = -cont;
    if (prod.scaled(cont) != f && (-prod).scaled(cont) != f)
        throw InternalInconsistencyError("factor product does not reproduce the input");
    return out;
}

} // namespace zetadiv::zeta
