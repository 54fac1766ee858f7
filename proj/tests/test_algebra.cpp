#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace zetadiv;
using namespace zetadiv::algebra;

TEST_CASE("prime field modulus is t") {
    FieldSpec f = build_field(3, 1);
    CHECK(f.p == 3);
    CHECK(f.e == 1);
    CHECK(f.modulus == std::vector<std::uint32_t>{0});
}

TEST_CASE("F_4 modulus is t^2 + t + 1") {
    // the only irreducible monic quadratic over F_2
    FieldSpec f = build_field(2, 2);
    CHECK(f.modulus == std::vector<std::uint32_t>{1, 1});
    CHECK(zdt::brute_force_irreducible(2, f.modulus));
}

TEST_CASE("build_field picks the lex-smallest irreducible (exhaustive scan oracle)") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {5, 2}, {3, 3}, {2, 8}, {7, 2}}) {
        FieldSpec f = build_field(p, e);
        CHECK(zdt::brute_force_irreducible(p, f.modulus));
        // nothing lexicographically smaller is irreducible
        std::vector<std::uint32_t> c(e, 0);
        bool done = false;
        while (!done && c != f.modulus) {
            CHECK_FALSE(zdt::brute_force_irreducible(p, c));
            std::uint32_t i = e;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) done = true;
            }
        }
    }
}

TEST_CASE("build_field rejects composite characteristic") {
    CHECK_THROWS_AS(build_field(6, 1), NotPrimeError);
    CHECK_THROWS_AS(build_field(1, 1), NotPrimeError);
    CHECK_THROWS_AS(build_field(3, 17), DegreeTooLargeError);
}

TEST_CASE("arithmetic in F_4: t * t = t + 1") {
    FieldSpec f = build_field(2, 2);
    FieldElement t = FieldElement::generator(f);
    CHECK(t * t == t + FieldElement::one(f));
}

TEST_CASE("arithmetic in F_3: 2 + 2 = 1") {
    FieldSpec f = build_field(3, 1);
    FieldElement two = FieldElement::from_int(f, 2);
    CHECK(two + two == FieldElement::one(f));
}

TEST_CASE("inverses: a * a^-1 = 1 for all nonzero a") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 4}, {7, 1}}) {
        FieldSpec f = build_field(p, e);
        for (const auto& a : enumerate_elements(f)) {
            if (a.is_zero()) {
                CHECK_THROWS_AS(a.inverse(), DivisionByZeroError);
                continue;
            }
            CHECK(a * a.inverse() == FieldElement::one(f));
        }
    }
}

TEST_CASE("field axioms hold exhaustively for every field of order <= 81") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;
    for (std::uint32_t p = 2; p <= 81; ++p) {
        if (!is_prime_u64(p)) continue;
        std::uint64_t q = p;
        for (std::uint32_t e = 1; q <= 81; ++e, q *= p) fields.emplace_back(p, e);
    }
    for (auto [p, e] : fields) {
        FieldSpec f = build_field(p, e);
        std::vector<FieldElement> elems;
        for (const auto& a : enumerate_elements(f)) elems.push_back(a);
        bool ok = true;
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                ok = ok && (a + b == b + a) && (a * b == b * a);
                for (const auto& c : elems) {
                    ok = ok && ((a + b) + c == a + (b + c)) &&
                         ((a * b) * c == a * (b * c)) &&
                         (a * (b + c) == a * b + a * c);
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        INFO("field F_", f.order_u64());
        CHECK(ok);
    }
}

TEST_CASE("pow is square-and-multiply over nonnegative exponents") {
    FieldSpec f = build_field(5, 2);
    FieldElement t = FieldElement::generator(f);
    FieldElement acc = FieldElement::one(f);
    for (std::uint64_t k = 0; k < 30; ++k) {
        CHECK(t.pow(k) == acc);
        acc = acc * t;
    }
    CHECK_THROWS_AS(t.pow(mpz_class(-1)), InvalidParamsError);
}

TEST_CASE("enumerate_elements order: F_3 and F_4") {
    FieldSpec f3 = build_field(3, 1);
    std::vector<std::string> got;
    for (const auto& a : enumerate_elements(f3)) got.push_back(a.to_string());
    CHECK(got == std::vector<std::string>{"0", "1", "2"});

    FieldSpec f4 = build_field(2, 2);
    got.clear();
    for (const auto& a : enumerate_elements(f4)) got.push_back(a.to_string());
    CHECK(got == std::vector<std::string>{"0", "1", "t", "1 + t"});
}

TEST_CASE("enumerate_elements yields exactly p^e elements, all distinct") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {3, 2}, {2, 5}, {5, 2}}) {
        FieldSpec f = build_field(p, e);
        std::uint64_t n = 0;
        std::uint64_t order = f.order_u64();
        for (const auto& a : enumerate_elements(f)) {
            CHECK(a.index() == n);   // ascending canonical index = no repeats
            ++n;
        }
        CHECK(n == order);
    }
}

TEST_CASE("embedding: prime subfield is fixed") {
    FieldSpec f2 = build_field(2, 1);
    auto ext = extend_and_embed(f2, 2);
    CHECK(ext.embedding(FieldElement::zero(f2)) == FieldElement::zero(ext.ext));
    CHECK(ext.embedding(FieldElement::one(f2)) == FieldElement::one(ext.ext));
}

TEST_CASE("embedding image satisfies the base modulus") {
    FieldSpec f4 = build_field(2, 2);
    auto ext = extend_and_embed(f4, 2);   // F_16
    CHECK(ext.ext.e == 4);
    FieldElement g = ext.embedding.generator_image();
    // evaluate t^2 + t + 1 at the image
    FieldElement v = g * g + g + FieldElement::one(ext.ext);
    CHECK(v.is_zero());
}

TEST_CASE("embedding is a ring homomorphism on all of F_9") {
    FieldSpec f9 = build_field(3, 2);
    auto ext = extend_and_embed(f9, 2);   // F_81
    std::vector<FieldElement> elems;
    for (const auto& a : enumerate_elements(f9)) elems.push_back(a);
    for (const auto& a : elems)
        for (const auto& b : elems) {
            CHECK(ext.embedding(a + b) == ext.embedding(a) + ext.embedding(b));
            CHECK(ext.embedding(a * b) == ext.embedding(a) * ext.embedding(b));
        }
}

TEST_CASE("Frobenius x -> x^(p^e) fixes exactly the embedded base field") {
    for (auto [p, e, k] : std::vector<std::array<std::uint32_t, 3>>{
             {{2, 2, 2}}, {{3, 1, 2}}, {{3, 2, 2}}}) {
        FieldSpec base = build_field(p, e);
        auto ext = extend_and_embed(base, k);
        std::uint64_t qbase = base.order_u64();
        std::uint64_t fixed = 0;
        for (const auto& a : enumerate_elements(ext.ext))
            if (a.pow(qbase) == a) ++fixed;
        CHECK(fixed == qbase);
        for (const auto& a : enumerate_elements(base))
            CHECK(ext.embedding(a).pow(qbase) == ext.embedding(a));
    }
}

TEST_CASE("extension degree over the prime field is capped at 16") {
    FieldSpec f9 = build_field(3, 2);
    CHECK_THROWS_AS(extend_and_embed(f9, 9), DegreeTooLargeError);
}

TEST_CASE("parse: projective example with explicit exponent vectors") {
    IntMultiPoly f = parse_poly("x0^3 + 2*x1*x2^2 - x3", 3, VarStyle::projective);
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms().at({3, 0, 0, 0}) == 1);
    CHECK(f.terms().at({0, 1, 2, 0}) == 2);
    CHECK(f.terms().at({0, 0, 0, 1}) == -1);
}

TEST_CASE("parse: like terms combine") {
    IntMultiPoly f = parse_poly("x1 + x1", 1, VarStyle::affine);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().at({1}) == 2);
}

TEST_CASE("parse: cancellation yields the zero polynomial, rejected as a definition") {
    IntMultiPoly f = parse_poly("x1^2 - x1^2", 1, VarStyle::affine);
    CHECK(f.is_zero());
    FieldSpec f3 = build_field(3, 1);
    CHECK_THROWS_AS(VarietySpec::make(f3, Ambient::affine, 1, {f}), ZeroPolynomialError);
}

TEST_CASE("parse: syntax errors carry a position") {
    try {
        parse_poly("x1 + + x2", 2, VarStyle::affine);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(parse_poly("x1 *", 2, VarStyle::affine), ParseError);
    CHECK_THROWS_AS(parse_poly("(x1", 2, VarStyle::affine), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2, VarStyle::affine), ParseError);
}

TEST_CASE("parse: variable indices are range-checked per style") {
    CHECK_THROWS_AS(parse_poly("x0", 2, VarStyle::affine), UnknownVariableError);
    CHECK_THROWS_AS(parse_poly("x3", 2, VarStyle::affine), UnknownVariableError);
    CHECK_THROWS_AS(parse_poly("x3", 2, VarStyle::projective), UnknownVariableError);
    CHECK_NOTHROW(parse_poly("x0", 2, VarStyle::projective));
}

TEST_CASE("parse: unary minus at expression head, parenthesized subexpressions") {
    IntMultiPoly f = parse_poly("-x1 + (-2 + x2)*x1", 2, VarStyle::affine);
    // -x1 + -2*x1 + x1*x2 = -3*x1 + x1*x2
    CHECK(f.terms().at({1, 0}) == -3);
    CHECK(f.terms().at({1, 1}) == 1);
}

TEST_CASE("projective definitions must be homogeneous") {
    FieldSpec f3 = build_field(3, 1);
    IntMultiPoly bad = parse_poly("x0^2 + x1", 1, VarStyle::projective);
    CHECK_THROWS_AS(VarietySpec::make(f3, Ambient::projective, 1, {bad}),
                    NonHomogeneousError);
    // homogeneity is judged after reduction: 3*x0^2 + x1 reduces to x1 over F_3
    IntMultiPoly reduced_ok = parse_poly("3*x0^2 + x1", 1, VarStyle::projective);
    CHECK_NOTHROW(VarietySpec::make(f3, Ambient::projective, 1, {reduced_ok}));
}

TEST_CASE("print-parse round trip on random polynomials") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t n = 1 + rng() % 3;
        VarStyle style = (rng() % 2) ? VarStyle::affine : VarStyle::projective;
        std::uint32_t slots = style == VarStyle::affine ? n : n + 1;
        IntMultiPoly f(slots);
        std::uint32_t terms = 1 + rng() % 5;
        for (std::uint32_t t = 0; t < terms; ++t) {
            ExponentVec e(slots);
            for (auto& x : e) x = rng() % 4;
            long coeff = static_cast<long>(rng() % 19) - 9;
            f.add_term(e, coeff);
        }
        if (f.is_zero()) continue;
        std::string text = print_poly(f, style);
        IntMultiPoly g = parse_poly(text, n, style);
        CHECK(g.terms() == f.terms());
    }
}

TEST_CASE("eval: x1*x2 at (2,2) over F_3 is 1") {
    FieldSpec f3 = build_field(3, 1);
    MultiPoly f = MultiPoly::reduce(parse_poly("x1*x2", 2, VarStyle::affine), f3);
    auto two = FieldElement::from_int(f3, 2);
    CHECK(f.eval({two, two}) == FieldElement::one(f3));
}

TEST_CASE("eval: the all-zeros point reads off the constant term") {
    FieldSpec f5 = build_field(5, 1);
    MultiPoly f =
        MultiPoly::reduce(parse_poly("x1^2*x2 + 3*x1 + 4", 2, VarStyle::affine), f5);
    auto z = FieldElement::zero(f5);
    CHECK(f.eval({z, z}) == FieldElement::from_int(f5, 4));
}

TEST_CASE("eval: sum of four squares at (1,1,1,0) over F_3 is 0") {
    FieldSpec f3 = build_field(3, 1);
    MultiPoly f = MultiPoly::reduce(
        parse_poly("x1^2+x2^2+x3^2+x4^2", 4, VarStyle::affine), f3);
    auto one = FieldElement::one(f3);
    auto zero = FieldElement::zero(f3);
    CHECK(f.eval({one, one, one, zero}).is_zero());
}

TEST_CASE("eval arity is checked") {
    FieldSpec f3 = build_field(3, 1);
    MultiPoly f = MultiPoly::reduce(parse_poly("x1", 2, VarStyle::affine), f3);
    CHECK_THROWS_AS(f.eval({FieldElement::one(f3)}), ArityMismatchError);
}

TEST_CASE("eval commutes with the embedding") {
    FieldSpec f9 = build_field(3, 2);
    auto ext = extend_and_embed(f9, 2);
    MultiPoly f =
        MultiPoly::reduce(parse_poly("x1^2*x2 + 2*x1 + 1", 2, VarStyle::affine), f9);
    MultiPoly fe(ext.ext, 2);
    for (const auto& [e, c] : f.terms()) fe.add_term(e, ext.embedding(c));
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = FieldElement::from_index(f9, rng() % 9);
        auto b = FieldElement::from_index(f9, rng() % 9);
        CHECK(fe.eval({ext.embedding(a), ext.embedding(b)}) == ext.embedding(f.eval({a, b})));
    }
}

TEST_CASE("homogenize the running example") {
    FieldSpec f5 = build_field(5, 1);
    MultiPoly f =
        MultiPoly::reduce(parse_poly("x1^2 + x2 - 1", 2, VarStyle::affine), f5);
    MultiPoly g = homogenize(f, 2);
    CHECK(g.nvars() == 3);
    CHECK(g.is_homogeneous());
    CHECK(g.total_degree() == 2);
    // x1^2 + x2*x0 - x0^2
    CHECK(g.terms().count({0, 2, 0}) == 1);
    CHECK(g.terms().count({1, 0, 1}) == 1);
    CHECK(g.terms().count({2, 0, 0}) == 1);
    CHECK(g.terms().at({2, 0, 0}) == -FieldElement::one(f5));
}

TEST_CASE("homogenize leaves already-homogeneous polynomials without x0") {
    FieldSpec f3 = build_field(3, 1);
    MultiPoly f = MultiPoly::reduce(parse_poly("x1^2 + x1*x2", 2, VarStyle::affine), f3);
    MultiPoly g = homogenize(f);
    for (const auto& [e, c] : g.terms()) CHECK(e[0] == 0);
    MultiPoly lin = MultiPoly::reduce(parse_poly("x1", 1, VarStyle::affine), f3);
    MultiPoly glin = homogenize(lin);
    REQUIRE(glin.terms().size() == 1);
    CHECK(glin.terms().count({0, 1}) == 1);
}

TEST_CASE("homogenize-dehomogenize round trip on random polynomials") {
    FieldSpec f7 = build_field(7, 1);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t n = 1 + rng() % 3;
        IntMultiPoly raw(n);
        std::uint32_t terms = 1 + rng() % 5;
        for (std::uint32_t t = 0; t < terms; ++t) {
            ExponentVec e(n);
            for (auto& x : e) x = rng() % 3;
            raw.add_term(e, static_cast<long>(rng() % 13) - 6);
        }
        MultiPoly f = MultiPoly::reduce(raw, f7);
        if (f.is_zero()) continue;
        CHECK(dehomogenize(homogenize(f)).terms() == f.terms());
    }
    CHECK_THROWS_AS(homogenize(MultiPoly(f7, 2)), ZeroPolynomialError);
}

TEST_CASE("custom modulus validation") {
    CHECK_NOTHROW(field_with_modulus(3, {2, 1}));            // t^2 + t + 2
    CHECK_THROWS_AS(field_with_modulus(3, {0, 0}), InvalidParamsError);   // t^2
    CHECK_THROWS_AS(field_with_modulus(3, {1}), InvalidParamsError);      // must be t
}

TEST_CASE("variety spec sanity") {
    CHECK_THROWS_AS(zdt::affine(3, 1, {"2"}), ZeroPolynomialError);
    CHECK_THROWS_AS(zdt::affine(3, 1, {"3*x1"}), ZeroPolynomialError);   // reduces to 0
    auto spec = zdt::affine(3, 2, {"x1*x2 - 1", "x1 + x2"});
    CHECK(spec.degrees == std::vector<std::uint32_t>{2, 1});
    CHECK(spec.r() == 2);
}
