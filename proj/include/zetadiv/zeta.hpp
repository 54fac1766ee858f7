#ifndef ZETADIV_ZETA_HPP
#define ZETADIV_ZETA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "zetadiv/counting.hpp"
#include "zetadiv/intpoly.hpp"

namespace zetadiv::zeta {

// Truncated power series 1 + z_1 T + ... + z_m T^m with integer entries.
// Integrality and nonnegativity are checked invariants, not assumptions.
struct SeriesPrefix {
    std::vector<mpz_class> z;   // z[0] = 1
    std::uint32_t order() const { return static_cast<std::uint32_t>(z.size()) - 1; }
};

// z_0 = 1 and m z_m = sum_{k=1..m} N_k z_{m-k}; exact, with divisibility and
// sign asserted at every step.
SeriesPrefix series_from_counts(const std::vector<mpz_class>& counts, std::uint32_t m);
SeriesPrefix series_from_counts(const counting::PointCounts& counts, std::uint32_t m);

struct PadeResult {
    IntPoly numerator;
    IntPoly denominator;
};

// [bound/bound] Pade approximant: P == Q * series mod T^(2*bound+1) with
// deg P, deg Q <= bound and Q(0) = 1, reduced to lowest terms over Z.
PadeResult pade_reconstruct(const SeriesPrefix& series, std::uint32_t bound);

struct ZetaFunction {
    IntPoly numerator;      // constant term 1
    IntPoly denominator;    // constant term 1
    std::uint32_t p = 0;
    std::uint32_t e = 1;

    std::uint64_t q() const;

    // coefficients z_0..z_m of the power series expansion
    std::vector<mpz_class> expand(std::uint32_t m) const;
    // N_1..N_kmax recovered through the logarithmic derivative
    std::vector<mpz_class> point_counts(std::uint32_t kmax) const;

    bool operator==(const ZetaFunction& o) const {
        return numerator == o.numerator && denominator == o.denominator && p == o.p && e == o.e;
    }

    std::string to_string() const;
    nlohmann::json to_json() const;    // {"q":, "num": [...], "den": [...]}
    static ZetaFunction from_json(const nlohmann::json& j);
};

struct ZetaOptions {
    std::uint32_t bound = 32;     // cap on deg P and deg Q
    std::uint32_t holdout = 2;    // certificate counts beyond the determining window
    counting::CountOptions counting;
};

// Reconstruct Z from brute-force counts: counts are extended one k at a time
// within the budget; the minimal-total-degree rational function matching
// every computed count is accepted once it carries `holdout` counts of slack
// beyond its determining window.
ZetaFunction zeta_of(const algebra::VarietySpec& spec, bool complement,
                     const ZetaOptions& opts = {});
ZetaFunction zeta_of(counting::CountProvider& provider, bool complement,
                     const ZetaOptions& opts = {});

// Irreducible factorization over Z (squarefree split, factorization modulo a
// well-chosen small prime, Hensel lifting past the Landau-Mignotte bound,
// subset recombination). Factors with unit constant term are normalized to
// constant term +1, others to primitive with positive leading coefficient.
std::vector<std::pair<IntPoly, unsigned>> factor_integer_poly(const IntPoly& f);

} // namespace zetadiv::zeta

#endif
