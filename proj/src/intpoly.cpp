#include "zetadiv/intpoly.hpp"

#include <sstream>

namespace zetadiv {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const mpz_class& IntPoly::leading() const {
    if (c.empty()) throw InvalidParamsError("zero polynomial has no leading coefficient");
    return c.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < c.size()) r.c[i] += c[i];
        if (i < o.c.size()) r.c[i] += o.c[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
    IntPoly r = *this;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * static_cast<long>(i);
    r.trim();
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    IntPoly r;
    r.c.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        mpz_divexact(r.c[i].get_mpz_t(), c[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

bool IntPoly::divide_exact(const IntPoly& o, IntPoly& quotient) const {
    if (o.is_zero()) return false;
    if (is_zero()) { quotient = IntPoly(); return true; }
    if (degree() < o.degree()) return false;
    IntPoly rem = *this;
    quotient.c.assign(static_cast<std::size_t>(degree() - o.degree()) + 1, mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    o.leading().get_mpz_t());
        if (r != 0) return false;
        std::size_t shift = static_cast<std::size_t>(rem.degree() - o.degree());
        quotient.c[shift] = q;
        for (std::size_t i = 0; i < o.c.size(); ++i)
            rem.c[shift + i] -= q * o.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) return false;
    quotient.trim();
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class a = c[i];
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int d = a.degree() - b.degree();
    mpz_class lb = b.leading();
    for (int step = 0; step <= d; ++step) {
        if (a.is_zero() || a.degree() < b.degree()) {
            // keep scaling so the pseudo-remainder definition stays exact
            a = a.scaled(lb);
            continue;
        }
        mpz_class la = a.leading();
        std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        IntPoly scaled_a = a.scaled(lb);
        for (std::size_t i = 0; i < b.c.size(); ++i)
            scaled_a.c[shift + i] -= la * b.c[i];
        scaled_a.trim();
        a = std::move(scaled_a);
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

} // namespace zetadiv
