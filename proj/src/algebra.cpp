#include "zetadiv/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "fp_univariate.hpp"
#include "packed_field.hpp"

namespace zetadiv::algebra {

namespace {

constexpr std::uint64_t kEnumerationLimit = std::uint64_t(1) << 26;
constexpr std::uint32_t kMaxPrime = std::uint32_t(1) << 20;
constexpr std::uint32_t kMaxExtensionDegree = 16;

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint32_t exp, bool& ok) {
    std::uint64_t r = 1;
    ok = true;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) { ok = false; return 0; }
        r *= base;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

mpz_class FieldSpec::order() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

bool FieldSpec::fits_u64() const {
    bool ok = false;
    pow_u64_checked(p, e, ok);
    return ok;
}

std::uint64_t FieldSpec::order_u64() const {
    bool ok = false;
    std::uint64_t r = pow_u64_checked(p, e, ok);
    if (!ok) throw FieldTooLargeError("field order exceeds 2^64");
    return r;
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    os << "F_" << order().get_str();
    if (e > 1) {
        os << " = F_" << p << "[t]/(t^" << e;
        for (std::uint32_t i = e; i-- > 0;) {
            if (modulus[i] == 0) continue;
            os << " + " << modulus[i];
            if (i == 1) os << "*t";
            else if (i > 1) os << "*t^" << i;
        }
        os << ")";
    }
    return os.str();
}

FieldSpec build_field(std::uint32_t p, std::uint32_t e) {
    if (!is_prime_u64(p) || p > kMaxPrime) throw NotPrimeError(p);
    if (e < 1 || e > kMaxExtensionDegree)
        throw DegreeTooLargeError("extension degree must be in [1, 16], got " +
                                  std::to_string(e));
    FieldSpec f;
    f.p = p;
    f.e = e;
    if (e == 1) {
        f.modulus = {0};   // the polynomial t
        return f;
    }
    // Scan coefficient tuples (c_0, ..., c_{e-1}) in lexicographic order,
    // c_0 most significant, until the monic polynomial is irreducible.
    std::vector<std::uint32_t> c(e, 0);
    while (true) {
        fpu::Poly cand(e + 1, 0);
        for (std::uint32_t i = 0; i < e; ++i) cand[i] = c[i];
        cand[e] = 1;
        if (fpu::is_irreducible(cand, p)) {
            f.modulus = c;
            return f;
        }
        // lexicographic increment: last coordinate varies fastest
        std::uint32_t i = e;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw NoModulusFoundError();
        }
    }
}

FieldSpec field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime_u64(p) || p > kMaxPrime) throw NotPrimeError(p);
    auto e = static_cast<std::uint32_t>(modulus.size());
    if (e < 1 || e > kMaxExtensionDegree)
        throw DegreeTooLargeError("modulus degree must be in [1, 16]");
    for (auto& c : modulus) c %= p;
    fpu::Poly cand(e + 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) cand[i] = modulus[i];
    cand[e] = 1;
    if (e > 1 && !fpu::is_irreducible(cand, p))
        throw InvalidParamsError("modulus is not irreducible over F_" + std::to_string(p));
    if (e == 1 && modulus[0] != 0)
        throw InvalidParamsError("degree-1 modulus must be the polynomial t");
    FieldSpec f;
    f.p = p;
    f.e = e;
    f.modulus = std::move(modulus);
    return f;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldSpec field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_.e)
        throw InvalidParamsError("coefficient vector length must equal the extension degree");
    for (auto& c : coeffs_) c %= field_.p;
}

FieldElement FieldElement::zero(const FieldSpec& f) {
    return FieldElement(f, std::vector<std::uint32_t>(f.e, 0));
}

FieldElement FieldElement::one(const FieldSpec& f) {
    std::vector<std::uint32_t> c(f.e, 0);
    c[0] = f.p > 1 ? 1 : 0;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::generator(const FieldSpec& f) {
    std::vector<std::uint32_t> c(f.e, 0);
    if (f.e == 1) {
        // t reduces to 0 modulo t
        return FieldElement(f, std::move(c));
    }
    c[1] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_int(const FieldSpec& f, const mpz_class& value) {
    mpz_class m = value % f.p;
    if (m < 0) m += f.p;
    std::vector<std::uint32_t> c(f.e, 0);
    c[0] = static_cast<std::uint32_t>(m.get_ui());
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_int(const FieldSpec& f, long value) {
    return from_int(f, mpz_class(value));
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    std::vector<std::uint32_t> c(field_.e);
    for (std::uint32_t i = 0; i < field_.e; ++i) {
        std::uint32_t s = coeffs_[i] + o.coeffs_[i];
        c[i] = s >= field_.p ? s - field_.p : s;
    }
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    std::vector<std::uint32_t> c(field_.e);
    for (std::uint32_t i = 0; i < field_.e; ++i)
        c[i] = coeffs_[i] >= o.coeffs_[i] ? coeffs_[i] - o.coeffs_[i]
                                          : coeffs_[i] + field_.p - o.coeffs_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    return zero(field_) - *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    const std::uint32_t e = field_.e, p = field_.p;
    if (e == 1)
        return FieldElement(field_, {static_cast<std::uint32_t>(
            (std::uint64_t(coeffs_[0]) * o.coeffs_[0]) % p)});
    // schoolbook product, then reduce by the monic modulus
    std::vector<std::uint64_t> prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(coeffs_[i]) * o.coeffs_[j]) % p;
    }
    for (std::uint32_t k = 2 * e - 2; k >= e; --k) {
        std::uint64_t top = prod[k] % p;
        if (top) {
            // t^k = t^(k-e) * (-modulus lower part)
            for (std::uint32_t i = 0; i < e; ++i) {
                std::uint64_t sub = (top * field_.modulus[i]) % p;
                std::uint64_t cur = prod[k - e + i] % p;
                prod[k - e + i] = (cur + p - sub) % p;
            }
        }
        prod[k] = 0;
        if (k == e) break;
    }
    std::vector<std::uint32_t> c(e);
    for (std::uint32_t i = 0; i < e; ++i) c[i] = static_cast<std::uint32_t>(prod[i] % p);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    const std::uint64_t p = field_.p;
    if (field_.e == 1)
        return FieldElement(field_, {static_cast<std::uint32_t>(fpu::inv_mod(coeffs_[0], p))});
    // extended Euclid in F_p[t] against the modulus
    fpu::Poly m(field_.e + 1, 0);
    for (std::uint32_t i = 0; i < field_.e; ++i) m[i] = field_.modulus[i];
    m[field_.e] = 1;
    fpu::Poly a(coeffs_.begin(), coeffs_.end());
    fpu::trim(a);
    fpu::Poly r0 = m, r1 = a, s0 = {}, s1 = {1};
    while (!fpu::is_zero(r1)) {
        fpu::Poly q, r;
        fpu::divmod(r0, r1, p, q, r);
        fpu::Poly s = fpu::sub(s0, fpu::mul(q, s1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
    }
    assert(fpu::degree(r0) == 0);
    fpu::Poly inv = fpu::scale(s0, fpu::inv_mod(r0[0], p), p);
    std::vector<std::uint32_t> c(field_.e, 0);
    for (std::size_t i = 0; i < inv.size(); ++i) c[i] = static_cast<std::uint32_t>(inv[i]);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t k) const {
    FieldElement result = one(field_);
    FieldElement base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

FieldElement FieldElement::pow(const mpz_class& k) const {
    if (k < 0) throw InvalidParamsError("pow exponent must be nonnegative");
    FieldElement result = one(field_);
    FieldElement base = *this;
    mpz_class e = k;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::uint64_t FieldElement::index() const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = field_.e; i-- > 0;) idx = idx * field_.p + coeffs_[i];
    return idx;
}

FieldElement FieldElement::from_index(const FieldSpec& f, std::uint64_t idx) {
    std::vector<std::uint32_t> c(f.e);
    for (std::uint32_t i = 0; i < f.e; ++i) {
        c[i] = static_cast<std::uint32_t>(idx % f.p);
        idx /= f.p;
    }
    return FieldElement(f, std::move(c));
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < field_.e; ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        if (i == 0) os << coeffs_[i];
        else {
            if (coeffs_[i] != 1) os << coeffs_[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ElementRange::ElementRange(FieldSpec f) : field_(std::move(f)) {
    size_ = field_.order_u64();
}

ElementRange enumerate_elements(const FieldSpec& f) {
    if (!f.fits_u64() || f.order_u64() > kEnumerationLimit)
        throw FieldTooLargeError("field too large to enumerate (limit 2^26)");
    return ElementRange(f);
}

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

Embedding::Embedding(FieldSpec base, FieldSpec ext, FieldElement generator_image)
    : base_(std::move(base)), ext_(std::move(ext)), gen_image_(std::move(generator_image)) {}

FieldElement Embedding::operator()(const FieldElement& a) const {
    if (a.field() != base_) throw FieldMismatchError();
    // a = sum a_i t^i maps to sum a_i * image^i (Horner, highest term first)
    FieldElement acc = FieldElement::zero(ext_);
    const auto& c = a.coeffs();
    for (std::uint32_t i = base_.e; i-- > 0;) {
        acc = acc * gen_image_ + FieldElement::from_int(ext_, static_cast<long>(c[i]));
    }
    return acc;
}

ExtensionResult extend_and_embed(const FieldSpec& base, std::uint32_t k) {
    if (k < 1) throw InvalidParamsError("extension multiplier must be positive");
    std::uint64_t total = std::uint64_t(base.e) * k;
    if (total > kMaxExtensionDegree)
        throw DegreeTooLargeError("extension degree " + std::to_string(total) +
                                  " over the prime field exceeds 16");
    FieldSpec ext = build_field(base.p, static_cast<std::uint32_t>(total));
    if (base.e == 1) {
        return {ext, Embedding(base, ext, FieldElement::one(ext))};
    }
    // Smallest root of the base modulus inside ext, in enumeration order.
    // The base modulus has coefficients in F_p, so evaluate it directly.
    const PackedField& pf = PackedField::get(ext);
    std::vector<std::uint32_t> mod_reps;   // constant-first, degree e
    mod_reps.reserve(base.e + 1);
    for (std::uint32_t i = 0; i < base.e; ++i)
        mod_reps.push_back(pf.from_index(base.modulus[i]));
    mod_reps.push_back(pf.from_index(1));
    std::uint64_t q = ext.order_u64();
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint32_t x = pf.from_index(idx);
        std::uint32_t acc = pf.zero();
        for (std::uint32_t i = base.e + 1; i-- > 0;)
            acc = pf.add(pf.mul(acc, x), mod_reps[i]);
        if (pf.is_zero(acc)) {
            FieldElement img = FieldElement::from_index(ext, pf.to_index(x));
            return {ext, Embedding(base, ext, img)};
        }
    }
    throw InternalInconsistencyError("base modulus has no root in the extension field");
}

// ---------------------------------------------------------------------------
// IntMultiPoly / MultiPoly
// ---------------------------------------------------------------------------

std::uint32_t IntMultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void IntMultiPoly::add_term(const ExponentVec& exps, const mpz_class& coeff) {
    if (exps.size() != nvars_)
        throw ArityMismatchError("exponent vector length does not match variable count");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

IntMultiPoly IntMultiPoly::operator+(const IntMultiPoly& o) const {
    IntMultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntMultiPoly IntMultiPoly::operator-() const {
    IntMultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {

std::string render_terms(std::uint32_t nvars, bool projective_vars,
                         const std::vector<std::pair<ExponentVec, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff_str] : parts) {
        std::string cs = coeff_str;
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        std::ostringstream vs;
        for (std::uint32_t i = 0; i < nvars; ++i) {
            if (exps[i] == 0) continue;
            if (has_var) vs << "*";
            vs << "x" << (projective_vars ? i : i + 1);
            if (exps[i] > 1) vs << "^" << exps[i];
            has_var = true;
        }
        if (!has_var) {
            os << cs;
        } else if (cs == "1") {
            os << vs.str();
        } else {
            os << cs << "*" << vs.str();
        }
    }
    return os.str();
}

} // namespace

std::string IntMultiPoly::to_string(bool projective_vars) const {
    std::vector<std::pair<ExponentVec, std::string>> parts;
    for (const auto& [e, c] : terms_) parts.emplace_back(e, c.get_str());
    return render_terms(nvars_, projective_vars, parts);
}

MultiPoly MultiPoly::reduce(const IntMultiPoly& f, const FieldSpec& field) {
    MultiPoly r(field, f.nvars());
    for (const auto& [e, c] : f.terms()) {
        FieldElement fc = FieldElement::from_int(field, c);
        if (!fc.is_zero()) r.terms_.emplace(e, fc);
    }
    return r;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::is_homogeneous() const {
    std::optional<std::uint32_t> deg;
    for (const auto& [e, c] : terms_) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        if (!deg) deg = s;
        else if (*deg != s) return false;
    }
    return true;
}

void MultiPoly::add_term(const ExponentVec& exps, const FieldElement& coeff) {
    if (exps.size() != nvars_)
        throw ArityMismatchError("exponent vector length does not match variable count");
    if (coeff.field() != field_) throw FieldMismatchError();
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exps, coeff);
    } else {
        FieldElement s = it->second + coeff;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_)
        throw ArityMismatchError("point arity " + std::to_string(point.size()) +
                                 " does not match " + std::to_string(nvars_) + " variables");
    for (const auto& x : point)
        if (x.field() != field_) throw FieldMismatchError();
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * point[i].pow(std::uint64_t(e[i]));
        acc = acc + term;
    }
    return acc;
}

std::string MultiPoly::to_string(bool projective_vars) const {
    std::vector<std::pair<ExponentVec, std::string>> parts;
    for (const auto& [e, c] : terms_) {
        // render extension-field coefficients in parens
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos || cs.find('t') != std::string::npos)
            cs = "(" + cs + ")";
        parts.emplace_back(e, cs);
    }
    return render_terms(nvars_, projective_vars, parts);
}

MultiPoly homogenize(const MultiPoly& f, std::uint32_t d) {
    if (f.is_zero())
        throw ZeroPolynomialError("cannot homogenize the zero polynomial");
    if (d < f.total_degree())
        throw InvalidParamsError("homogenization degree below total degree");
    MultiPoly g(f.field(), f.nvars() + 1);
    for (const auto& [e, c] : f.terms()) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        ExponentVec ge(f.nvars() + 1);
        ge[0] = d - s;
        std::copy(e.begin(), e.end(), ge.begin() + 1);
        g.add_term(ge, c);
    }
    return g;
}

MultiPoly homogenize(const MultiPoly& f) { return homogenize(f, f.total_degree()); }

MultiPoly dehomogenize(const MultiPoly& g) {
    if (g.nvars() == 0) throw InvalidParamsError("no variables to dehomogenize");
    MultiPoly f(g.field(), g.nvars() - 1);
    for (const auto& [e, c] : g.terms()) {
        ExponentVec fe(e.begin() + 1, e.end());
        f.add_term(fe, c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// VarietySpec
// ---------------------------------------------------------------------------

VarietySpec VarietySpec::make(const FieldSpec& field, Ambient ambient, std::uint32_t n,
                              const std::vector<IntMultiPoly>& polys) {
    std::vector<MultiPoly> reduced;
    std::uint32_t want_vars = ambient == Ambient::affine ? n : n + 1;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].nvars() != want_vars)
            throw ArityMismatchError("polynomial " + std::to_string(i + 1) +
                                     " has wrong variable count");
        reduced.push_back(MultiPoly::reduce(polys[i], field));
    }
    return from_polys(field, ambient, n, std::move(reduced));
}

VarietySpec VarietySpec::from_polys(const FieldSpec& field, Ambient ambient, std::uint32_t n,
                                    std::vector<MultiPoly> polys) {
    if (n < 1) throw InvalidParamsError("ambient dimension n must be >= 1");
    if (polys.empty()) throw InvalidParamsError("at least one defining polynomial required");
    VarietySpec spec;
    spec.field = field;
    spec.ambient = ambient;
    spec.n = n;
    std::uint32_t want_vars = ambient == Ambient::affine ? n : n + 1;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].nvars() != want_vars)
            throw ArityMismatchError("polynomial " + std::to_string(i + 1) +
                                     " has wrong variable count");
        if (polys[i].field() != field)
            throw FieldMismatchError();
        if (polys[i].is_zero() || polys[i].total_degree() < 1)
            throw ZeroPolynomialError(
                "defining polynomial " + std::to_string(i + 1) +
                " is zero or constant after reduction; positive degree required");
        if (ambient == Ambient::projective && !polys[i].is_homogeneous())
            throw NonHomogeneousError("projective polynomial " + std::to_string(i + 1) +
                                      " is not homogeneous after reduction");
        spec.degrees.push_back(polys[i].total_degree());
        spec.polys.push_back(std::move(polys[i]));
    }
    return spec;
}

std::string VarietySpec::describe() const {
    std::ostringstream os;
    os << "V(";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) os << ", ";
        os << polys[i].to_string(ambient == Ambient::projective);
    }
    os << ") in " << (ambient == Ambient::affine ? "A^" : "P^") << n
       << " over " << field.to_string();
    return os.str();
}

} // namespace zetadiv::algebra
