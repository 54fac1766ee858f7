#ifndef ZETADIV_TEST_HELPERS_HPP
#define ZETADIV_TEST_HELPERS_HPP

// Shared test utilities: spec construction from expression strings and
// independent brute-force oracles (naive enumeration through the public
// FieldElement/MultiPoly API, nothing from the counting kernels).

#include <string>
#include <vector>

#include "zetadiv/algebra.hpp"
#include "zetadiv/counting.hpp"

namespace zdt {

using namespace zetadiv;

inline algebra::VarietySpec make_spec(std::uint32_t p, std::uint32_t e,
                                      algebra::Ambient ambient, std::uint32_t n,
                                      const std::vector<std::string>& polys) {
    algebra::FieldSpec field = algebra::build_field(p, e);
    algebra::VarStyle style = ambient == algebra::Ambient::affine
                                  ? algebra::VarStyle::affine
                                  : algebra::VarStyle::projective;
    std::vector<algebra::IntMultiPoly> parsed;
    for (const auto& s : polys) parsed.push_back(algebra::parse_poly(s, n, style));
    return algebra::VarietySpec::make(field, ambient, n, parsed);
}

inline algebra::VarietySpec affine(std::uint32_t p, std::uint32_t n,
                                   const std::vector<std::string>& polys,
                                   std::uint32_t e = 1) {
    return make_spec(p, e, algebra::Ambient::affine, n, polys);
}

inline algebra::VarietySpec projective(std::uint32_t p, std::uint32_t n,
                                       const std::vector<std::string>& polys,
                                       std::uint32_t e = 1) {
    return make_spec(p, e, algebra::Ambient::projective, n, polys);
}

// Defining polynomials transported into F_{q^k} through the embedding.
inline std::vector<algebra::MultiPoly> polys_over_extension(
    const algebra::VarietySpec& spec, std::uint32_t k, algebra::FieldSpec& ext_out) {
    if (k == 1) {
        ext_out = spec.field;
        return spec.polys;
    }
    auto ext = algebra::extend_and_embed(spec.field, k);
    ext_out = ext.ext;
    std::vector<algebra::MultiPoly> out;
    for (const auto& f : spec.polys) {
        algebra::MultiPoly g(ext.ext, f.nvars());
        for (const auto& [e, c] : f.terms()) g.add_term(e, ext.embedding(c));
        out.push_back(std::move(g));
    }
    return out;
}

// Naive affine count: odometer over FieldElement tuples, MultiPoly::eval.
inline mpz_class naive_affine_count(const algebra::VarietySpec& spec, std::uint32_t k) {
    algebra::FieldSpec ext;
    auto polys = polys_over_extension(spec, k, ext);
    std::uint64_t q = ext.order_u64();
    std::uint32_t n = spec.n;
    mpz_class count = 0;
    std::vector<std::uint64_t> idx(n, 0);
    while (true) {
        std::vector<algebra::FieldElement> point;
        point.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i)
            point.push_back(algebra::FieldElement::from_index(ext, idx[i]));
        bool all_zero = true;
        for (const auto& f : polys)
            if (!f.eval(point).is_zero()) { all_zero = false; break; }
        if (all_zero) ++count;
        std::uint32_t pos = 0;
        while (pos < n && ++idx[pos] == q) idx[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

// Naive projective count over normalized representatives.
inline mpz_class naive_projective_count(const algebra::VarietySpec& spec, std::uint32_t k) {
    algebra::FieldSpec ext;
    auto polys = polys_over_extension(spec, k, ext);
    std::uint64_t q = ext.order_u64();
    std::uint32_t nv = spec.n + 1;
    mpz_class count = 0;
    for (std::uint32_t lead = 0; lead < nv; ++lead) {
        std::uint32_t free_vars = nv - lead - 1;
        std::vector<std::uint64_t> idx(free_vars, 0);
        while (true) {
            std::vector<algebra::FieldElement> point;
            for (std::uint32_t i = 0; i < lead; ++i)
                point.push_back(algebra::FieldElement::zero(ext));
            point.push_back(algebra::FieldElement::one(ext));
            for (std::uint32_t i = 0; i < free_vars; ++i)
                point.push_back(algebra::FieldElement::from_index(ext, idx[i]));
            bool all_zero = true;
            for (const auto& f : polys)
                if (!f.eval(point).is_zero()) { all_zero = false; break; }
            if (all_zero) ++count;
            if (free_vars == 0) break;
            std::uint32_t pos = 0;
            while (pos < free_vars && ++idx[pos] == q) idx[pos++] = 0;
            if (pos == free_vars) break;
        }
    }
    return count;
}

// Exhaustive irreducibility scan over F_p: trial division by every monic
// polynomial of degree 1..e/2 (independent of the library's Rabin test).
inline bool brute_force_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& lower) {
    std::uint32_t e = static_cast<std::uint32_t>(lower.size());
    std::vector<std::uint32_t> f(lower);
    f.push_back(1);   // monic degree e
    auto poly_mod = [&](std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
        // b monic
        while (a.size() >= b.size()) {
            std::uint32_t c = a.back();
            if (c != 0) {
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    std::uint64_t cur = a[shift + i];
                    std::uint64_t sub = (std::uint64_t(c) * b[i]) % p;
                    a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
                }
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() < b.size()) break;
        }
        return a;
    };
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        // all monic divisor candidates of degree d
        std::vector<std::uint32_t> g(d + 1, 0);
        g[d] = 1;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < d; ++i) { g[i] = c % p; c /= p; }
            if (poly_mod(f, g).empty()) return false;
        }
    }
    return true;
}

} // namespace zdt

#endif
