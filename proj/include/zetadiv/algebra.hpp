#ifndef ZETADIV_ALGEBRA_HPP
#define ZETADIV_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetadiv/errors.hpp"

namespace zetadiv::algebra {

// ---------------------------------------------------------------------------
// Finite fields F_{p^e}, represented as F_p[t] / (modulus).
// ---------------------------------------------------------------------------

// The modulus stores the e lower coefficients c_0..c_{e-1} of the monic
// polynomial t^e + c_{e-1} t^{e-1} + ... + c_0; for e = 1 it is [0], i.e. t.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;

    mpz_class order() const;               // p^e
    std::uint64_t order_u64() const;       // requires p^e < 2^63
    bool fits_u64() const;

    bool operator==(const FieldSpec& o) const = default;
    std::string to_string() const;         // e.g. "F_9 = F_3[t]/(t^2 + 1)"
};

// build_field(p, e): the FieldSpec whose modulus is the lexicographically
// smallest monic irreducible of degree e over F_p, coefficient tuples
// (c_0, ..., c_{e-1}) compared entrywise from c_0. Deterministic.
FieldSpec build_field(std::uint32_t p, std::uint32_t e);

// Same field with a caller-chosen modulus (validated irreducible). Used for
// the embedding-independence checks.
FieldSpec field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

bool is_prime_u64(std::uint64_t n);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldSpec field, std::vector<std::uint32_t> coeffs);

    static FieldElement zero(const FieldSpec& f);
    static FieldElement one(const FieldSpec& f);
    static FieldElement generator(const FieldSpec& f);   // residue class of t
    static FieldElement from_int(const FieldSpec& f, const mpz_class& value);
    static FieldElement from_int(const FieldSpec& f, long value);

    const FieldSpec& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;    // DivisionByZero
    FieldElement inverse() const;
    FieldElement pow(const mpz_class& k) const;              // k >= 0
    FieldElement pow(std::uint64_t k) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Canonical index sum c_i p^i; doubles as the enumeration position.
    std::uint64_t index() const;
    static FieldElement from_index(const FieldSpec& f, std::uint64_t idx);

    std::string to_string() const;      // "0", "1", "t", "1 + 2*t", ...

private:
    void check_same_field(const FieldElement& o) const;
    FieldSpec field_;
    std::vector<std::uint32_t> coeffs_;
};

// All p^e elements exactly once, coefficient tuples in lexicographic order
// with c_0 varying fastest (i.e. ascending canonical index). Lazy: fields up
// to 2^26 elements are allowed and a materialized vector would not be.
class ElementRange {
public:
    explicit ElementRange(FieldSpec f);
    class iterator {
    public:
        iterator(const FieldSpec* f, std::uint64_t i) : f_(f), i_(i) {}
        FieldElement operator*() const { return FieldElement::from_index(*f_, i_); }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }
    private:
        const FieldSpec* f_;
        std::uint64_t i_;
    };
    iterator begin() const { return iterator(&field_, 0); }
    iterator end() const { return iterator(&field_, size_); }
    std::uint64_t size() const { return size_; }
private:
    FieldSpec field_;
    std::uint64_t size_;
};

ElementRange enumerate_elements(const FieldSpec& f);   // FieldTooLarge if p^e > 2^26

// Extension F_{p^e} -> F_{p^{e*k}} together with the embedding homomorphism.
// The base generator maps to the smallest root (in enumeration order) of the
// base modulus inside the extension; for e = 1 the embedding is the constant
// inclusion.
class Embedding {
public:
    Embedding(FieldSpec base, FieldSpec ext, FieldElement generator_image);
    FieldElement operator()(const FieldElement& a) const;
    const FieldSpec& base() const { return base_; }
    const FieldSpec& ext() const { return ext_; }
    const FieldElement& generator_image() const { return gen_image_; }
private:
    FieldSpec base_;
    FieldSpec ext_;
    FieldElement gen_image_;
};

struct ExtensionResult {
    FieldSpec ext;
    Embedding embedding;
};

ExtensionResult extend_and_embed(const FieldSpec& base, std::uint32_t k);

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials.
// ---------------------------------------------------------------------------

using ExponentVec = std::vector<std::uint32_t>;

// Integer-coefficient variant produced by the parser, before base-field
// reduction. Keeps coefficients exact so the parser stays field-agnostic.
class IntMultiPoly {
public:
    IntMultiPoly() = default;
    explicit IntMultiPoly(std::uint32_t nvars) : nvars_(nvars) {}

    std::uint32_t nvars() const { return nvars_; }
    const std::map<ExponentVec, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t total_degree() const;    // 0 for the zero polynomial

    void add_term(const ExponentVec& exps, const mpz_class& coeff);
    IntMultiPoly operator+(const IntMultiPoly& o) const;
    IntMultiPoly operator-() const;

    std::string to_string(bool projective_vars) const;

private:
    std::uint32_t nvars_ = 0;
    std::map<ExponentVec, mpz_class> terms_;
};

// Field-coefficient polynomial; no stored zero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(FieldSpec field, std::uint32_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    static MultiPoly reduce(const IntMultiPoly& f, const FieldSpec& field);

    const FieldSpec& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::map<ExponentVec, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t total_degree() const;
    bool is_homogeneous() const;

    void add_term(const ExponentVec& exps, const FieldElement& coeff);

    FieldElement eval(const std::vector<FieldElement>& point) const;   // ArityMismatch

    std::string to_string(bool projective_vars) const;

private:
    FieldSpec field_;
    std::uint32_t nvars_ = 0;
    std::map<ExponentVec, FieldElement> terms_;
};

enum class VarStyle { affine, projective };

// Grammar: expr := term (("+"|"-") term)* ; term := factor ("*" factor)* ;
// factor := atom ("^" uint)? ; atom := int | var | "(" expr ")" ; var := "x" uint.
// Whitespace ignored; unary minus allowed at expression head. Affine style
// uses x1..xn, projective x0..xn.
IntMultiPoly parse_poly(const std::string& text, std::uint32_t n, VarStyle style);

std::string print_poly(const IntMultiPoly& f, VarStyle style);

// Remark-style homogenization: each degree-m term of f gains a factor
// x0^(d-m). Variables shift from (x1..xn) slots to (x0,x1..xn) slots.
MultiPoly homogenize(const MultiPoly& f, std::uint32_t d);
MultiPoly homogenize(const MultiPoly& f);                  // d = total degree
MultiPoly dehomogenize(const MultiPoly& g);                // x0 := 1

// ---------------------------------------------------------------------------
// Varieties.
// ---------------------------------------------------------------------------

enum class Ambient { affine, projective };

struct VarietySpec {
    FieldSpec field;
    Ambient ambient = Ambient::affine;
    std::uint32_t n = 0;                      // A^n or P^n
    std::vector<MultiPoly> polys;             // affine: nvars = n; projective: nvars = n+1
    std::vector<std::uint32_t> degrees;       // derived total degrees d_1..d_r

    static VarietySpec make(const FieldSpec& field, Ambient ambient, std::uint32_t n,
                            const std::vector<IntMultiPoly>& polys);
    // Same validation for polynomials already reduced over the field.
    static VarietySpec from_polys(const FieldSpec& field, Ambient ambient, std::uint32_t n,
                                  std::vector<MultiPoly> polys);

    std::uint32_t r() const { return static_cast<std::uint32_t>(polys.size()); }
    std::uint32_t nvars() const { return ambient == Ambient::affine ? n : n + 1; }
    std::string describe() const;
};

} // namespace zetadiv::algebra

#endif
