#ifndef ZETADIV_FP_UNIVARIATE_HPP
#define ZETADIV_FP_UNIVARIATE_HPP

// Univariate polynomial arithmetic over a prime field F_p, p < 2^31.
// Coefficient vectors are constant-term first, no trailing zeros.
// Shared by the modulus search (irreducibility testing) and the
// distinct/equal-degree factorization stages of the integer factorizer.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace zetadiv::fpu {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;   // coefficients in [0, p)

inline u64 addm(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }   // p < 2^31

u64 inv_mod(u64 a, u64 p);

inline void trim(Poly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
inline bool is_zero(const Poly& f) { return f.empty(); }

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);

// Division with remainder; b nonzero.
void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& f, u64 p);
Poly gcd(Poly a, Poly b, u64 p);                       // monic gcd
Poly derivative(const Poly& f, u64 p);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p);
Poly powmod(Poly base, const mpz_class& exp, const Poly& m, u64 p);
Poly powmod_u64(Poly base, u64 exp, const Poly& m, u64 p);

// x^(p^k) mod m via k successive p-th powers.
Poly frobenius_power(const Poly& m, u64 p, unsigned k);

// Deterministic Rabin criterion: f (monic, degree e >= 1) is irreducible over
// F_p iff x^(p^e) == x mod f and gcd(x^(p^(e/l)) - x, f) = 1 for primes l | e.
bool is_irreducible(const Poly& f, u64 p);

struct FpFactor {
    Poly poly;       // monic irreducible
    unsigned mult;
};

// Full factorization of a nonzero polynomial over F_p (squarefree split,
// distinct-degree, then Cantor-Zassenhaus equal-degree; p = 2 uses the trace
// splitter). rng is seeded by the caller so runs are reproducible.
std::vector<FpFactor> factor(const Poly& f, u64 p, std::mt19937_64& rng);

} // namespace zetadiv::fpu

#endif
