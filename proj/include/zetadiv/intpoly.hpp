#ifndef ZETADIV_INTPOLY_HPP
#define ZETADIV_INTPOLY_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/errors.hpp"

namespace zetadiv {

// Dense univariate polynomial over Z, constant term first, trailing zeros
// trimmed. Zeta numerators and denominators always have constant term 1.
struct IntPoly {
    std::vector<mpz_class> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly one() { return IntPoly({1}); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }   // -1 for zero
    const mpz_class& leading() const;
    mpz_class constant_term() const { return c.empty() ? mpz_class(0) : c[0]; }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const mpz_class& s) const;

    IntPoly derivative() const;
    mpz_class content() const;                 // nonnegative; 0 for zero poly
    IntPoly primitive_part() const;            // sign of leading made positive

    // Exact division over Z; returns false if o does not divide *this.
    bool divide_exact(const IntPoly& o, IntPoly& quotient) const;

    std::string to_string(const std::string& var = "T") const;
};

// Primitive gcd over Q (primitive polynomial remainder sequence); result is
// primitive with positive leading coefficient, gcd(0,0) = 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

} // namespace zetadiv

#endif
