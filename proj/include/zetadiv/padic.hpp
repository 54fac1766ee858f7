#ifndef ZETADIV_PADIC_HPP
#define ZETADIV_PADIC_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/intpoly.hpp"

namespace zetadiv::padic {

// Lower Newton polygon of sum a_i T^i at the prime p. For a polynomial with
// constant term 1 the hull slopes are exactly the p-adic valuations of the
// reciprocal roots, over every embedding into the p-adic closure; this is
// what turns "divisible as algebraic integers" into a finite check.
struct NewtonPolygon {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> points;    // (i, v_p(a_i))
    std::vector<std::pair<std::uint32_t, std::uint32_t>> vertices;  // lower hull
    std::vector<std::pair<mpq_class, std::uint32_t>> slopes;        // (slope, multiplicity)

    mpq_class min_slope() const;    // requires degree >= 1
    std::uint32_t degree() const { return vertices.empty() ? 0 : vertices.back().first; }
};

NewtonPolygon newton_polygon(const IntPoly& f, std::uint32_t p);

// True iff every reciprocal root of f is divisible by q^mu = p^(e*mu) as an
// algebraic integer, i.e. every hull slope is >= mu*e in v_p-normalization.
bool check_divisibility(const IntPoly& f, std::uint32_t p, std::uint32_t e,
                        std::uint32_t mu);

// Weil weight of an irreducible factor: all complex reciprocal roots must
// share the modulus q^(w/2) for one integer w >= 0 within the snap window.
// tol is the root-finder accuracy target.
unsigned weight_of_factor(const IntPoly& f, std::uint64_t q, double tol = 1e-9);

// Complex root moduli (diagnostic; same root finder).
std::vector<double> root_moduli(const IntPoly& f, double tol = 1e-9);

// An irreducible zeta factor with its full valuation/weight profile: the
// purity-enforced weight, the q-normalized minimum Newton slope, and the
// reciprocal-root moduli kept as diagnostics.
struct WeightedFactor {
    IntPoly poly;
    std::string side;                  // "zero" | "pole"
    unsigned weight = 0;
    mpq_class min_vq;                  // min slope / e
    std::vector<double> root_moduli;
};

WeightedFactor weigh_factor(const IntPoly& f, const std::string& side, std::uint32_t p,
                            std::uint32_t e, double tol = 1e-9);

} // namespace zetadiv::padic

#endif
