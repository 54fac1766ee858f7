#include "zetadiv/zeta.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace zetadiv::zeta {

using counting::CountProvider;

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

SeriesPrefix series_from_counts(const std::vector<mpz_class>& counts, std::uint32_t m) {
    if (counts.size() < m)
        throw InvalidParamsError("need " + std::to_string(m) + " counts, have " +
                                 std::to_string(counts.size()));
    SeriesPrefix s;
    s.z.reserve(m + 1);
    s.z.emplace_back(1);
    for (std::uint32_t i = 1; i <= m; ++i) {
        mpz_class sum = 0;
        for (std::uint32_t k = 1; k <= i; ++k) sum += counts[k - 1] * s.z[i - k];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(),
                    mpz_class(i).get_mpz_t());
        if (r != 0)
            throw NonIntegralCoefficientError(
                "series coefficient z_" + std::to_string(i) +
                " is not an integer; the counts are inconsistent");
        if (q < 0)
            throw NegativeCoefficientError("series coefficient z_" + std::to_string(i) +
                                           " is negative; the counts are inconsistent");
        s.z.push_back(std::move(q));
    }
    return s;
}

SeriesPrefix series_from_counts(const counting::PointCounts& counts, std::uint32_t m) {
    return series_from_counts(counts.counts, m);
}

// ---------------------------------------------------------------------------
// rational reconstruction via the extended Euclidean remainder sequence
// ---------------------------------------------------------------------------

namespace {

// dense polynomial over Q, constant first
struct RatPoly {
    std::vector<mpq_class> c;
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    q = RatPoly{};
    r = a;
    q.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, mpq_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        mpq_class coef = r.c.back() / b.c.back();
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        q.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= coef * b.c[i];
        r.trim();
    }
    q.trim();
}

struct Candidate {
    RatPoly num, den;       // num == den * series mod T^(m+1)
};

// Remainder sequence of (T^(m+1), series): every step (r_i, v_i) satisfies
// r_i == v_i * S mod T^(m+1), and the antidiagonal of the Pade table of S
// is exactly this sequence.
std::vector<Candidate> euclid_candidates(const SeriesPrefix& series) {
    const std::uint32_t m = series.order();
    RatPoly r0;
    r0.c.assign(m + 2, mpq_class(0));
    r0.c[m + 1] = 1;
    RatPoly r1;
    r1.c.reserve(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) r1.c.emplace_back(series.z[i]);
    r1.trim();
    RatPoly v0, v1;
    v1.c = {mpq_class(1)};
    std::vector<Candidate> out;
    out.push_back({r1, v1});
    while (!r1.is_zero()) {
        RatPoly q, r2;
        rp_divmod(r0, r1, q, r2);
        RatPoly v2 = rp_sub(v0, rp_mul(q, v1));
        if (r2.is_zero()) break;
        out.push_back({r2, v2});
        r0 = std::move(r1); r1 = std::move(r2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    return out;
}

struct Reduced {
    IntPoly num, den;   // constant terms 1, coprime
    int total_degree;
};

// Normalize a candidate: reduce by the rational gcd, force constant terms to
// 1, clear denominators, and demand integer output.
std::optional<Reduced> normalize_candidate(const Candidate& cand) {
    if (cand.den.is_zero()) return std::nullopt;
    if (cand.den.c[0] == 0) return std::nullopt;
    // scale to integer polynomials first
    mpz_class lcm_den = 1;
    for (const auto& x : cand.num.c)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : cand.den.c)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    IntPoly P, Q;
    P.c.reserve(cand.num.c.size());
    Q.c.reserve(cand.den.c.size());
    for (const auto& x : cand.num.c)
        P.c.emplace_back(mpz_class(x.get_num() * (lcm_den / x.get_den())));
    for (const auto& x : cand.den.c)
        Q.c.emplace_back(mpz_class(x.get_num() * (lcm_den / x.get_den())));
    P.trim(); Q.trim();
    IntPoly g = poly_gcd(P, Q);
    if (!g.is_zero() && g.degree() >= 1) {
        IntPoly qp, qq;
        if (!P.divide_exact(g, qp) || !Q.divide_exact(g, qq)) return std::nullopt;
        P = std::move(qp);
        Q = std::move(qq);
    }
    if (Q.is_zero() || Q.constant_term() == 0) return std::nullopt;
    // force Q(0) = 1; the scale must leave both sides integral
    mpz_class q0 = Q.constant_term();
    if (q0 != 1) {
        if (P.is_zero()) return std::nullopt;
        for (auto& x : Q.c) {
            mpz_class r;
            mpz_tdiv_r(r.get_mpz_t(), x.get_mpz_t(), q0.get_mpz_t());
            if (r != 0) return std::nullopt;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q0.get_mpz_t());
        }
        for (auto& x : P.c) {
            mpz_class r;
            mpz_tdiv_r(r.get_mpz_t(), x.get_mpz_t(), q0.get_mpz_t());
            if (r != 0) return std::nullopt;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q0.get_mpz_t());
        }
    }
    if (P.is_zero() || P.constant_term() != 1) return std::nullopt;
    return Reduced{P, Q, P.degree() + Q.degree()};
}

std::vector<mpz_class> expand_fraction(const IntPoly& num, const IntPoly& den,
                                       std::uint32_t m) {
    // P = Q * Z with Q(0) = 1: z_i = P_i - sum_{j>=1} Q_j z_{i-j}
    std::vector<mpz_class> z(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) {
        mpz_class v = i < num.c.size() ? num.c[i] : mpz_class(0);
        for (std::uint32_t j = 1; j <= i && j < den.c.size(); ++j)
            v -= den.c[j] * z[i - j];
        z[i] = v;
    }
    return z;
}

} // namespace

PadeResult pade_reconstruct(const SeriesPrefix& series, std::uint32_t bound) {
    if (series.z.size() < 2 * static_cast<std::size_t>(bound) + 1)
        throw InvalidParamsError("pade_reconstruct needs series length >= 2*bound + 1");
    if (series.z.empty() || series.z[0] != 1)
        throw InvalidParamsError("series must start with z_0 = 1");
    SeriesPrefix trunc;
    trunc.z.assign(series.z.begin(), series.z.begin() + 2 * bound + 1);
    auto cands = euclid_candidates(trunc);
    bool saw_in_bounds = false;
    for (const auto& cand : cands) {
        if (cand.num.degree() > static_cast<int>(bound) ||
            cand.den.degree() > static_cast<int>(bound))
            continue;
        saw_in_bounds = true;
        auto red = normalize_candidate(cand);
        if (!red) continue;
        if (red->num.degree() > static_cast<int>(bound) ||
            red->den.degree() > static_cast<int>(bound))
            continue;
        // confirm the congruence after reduction
        auto z = expand_fraction(red->num, red->den, 2 * bound);
        bool ok = true;
        for (std::uint32_t i = 0; i <= 2 * bound; ++i)
            if (z[i] != trunc.z[i]) { ok = false; break; }
        if (!ok) continue;
        return PadeResult{red->num, red->den};
    }
    if (saw_in_bounds)
        throw NonIntegerOutputError(
            "the degree-" + std::to_string(bound) +
            " approximant does not normalize to integer polynomials with unit "
            "constant terms; the bound is too small or the series is corrupted");
    throw NoApproximantError("no [" + std::to_string(bound) + "/" + std::to_string(bound) +
                             "] approximant with unit constant terms exists");
}

// ---------------------------------------------------------------------------
// ZetaFunction
// ---------------------------------------------------------------------------

std::uint64_t ZetaFunction::q() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) throw FieldTooLargeError("q = p^e exceeds 2^64");
        r *= p;
    }
    return r;
}

std::vector<mpz_class> ZetaFunction::expand(std::uint32_t m) const {
    return expand_fraction(numerator, denominator, m);
}

std::vector<mpz_class> ZetaFunction::point_counts(std::uint32_t kmax) const {
    auto z = expand(kmax);
    std::vector<mpz_class> n(kmax);
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        mpz_class v = z[k] * static_cast<long>(k);
        for (std::uint32_t j = 1; j < k; ++j) v -= n[j - 1] * z[k - j];
        n[k - 1] = v;
    }
    return n;
}

std::string ZetaFunction::to_string() const {
    std::string num = numerator.to_string();
    std::string den = denominator.to_string();
    if (den == "1") return num == "1" ? "1" : "(" + num + ")";
    return "(" + num + ")/(" + den + ")";
}

nlohmann::json ZetaFunction::to_json() const {
    auto coeff = [](const mpz_class& x) -> nlohmann::json {
        if (x.fits_slong_p()) return x.get_si();
        return x.get_str();   // decimal string beyond 64 bits
    };
    nlohmann::json num = nlohmann::json::array();
    for (const auto& x : numerator.c) num.push_back(coeff(x));
    nlohmann::json den = nlohmann::json::array();
    for (const auto& x : denominator.c) den.push_back(coeff(x));
    return nlohmann::json{{"q", q()}, {"num", num}, {"den", den}};
}

ZetaFunction ZetaFunction::from_json(const nlohmann::json& j) {
    ZetaFunction z;
    std::uint64_t q = j.at("q").get<std::uint64_t>();
    // decompose q = p^e; valid field characteristics stay below 2^20
    for (std::uint64_t p = 2; p * p <= q && p <= (1u << 20); ++p) {
        if (q % p == 0) {
            z.p = static_cast<std::uint32_t>(p);
            std::uint64_t r = q;
            z.e = 0;
            while (r > 1) { r /= p; ++z.e; }
            break;
        }
    }
    if (z.p == 0) {
        if (q > (1u << 20))
            throw InvalidParamsError("q is not a valid small prime power");
        z.p = static_cast<std::uint32_t>(q);
        z.e = 1;
    }
    std::uint64_t check = 1;
    for (std::uint32_t i = 0; i < z.e; ++i) check *= z.p;
    if (check != q) throw InvalidParamsError("q is not a prime power");
    auto read_poly = [](const nlohmann::json& arr) {
        IntPoly f;
        for (const auto& v : arr) {
            if (v.is_string()) f.c.emplace_back(v.get<std::string>());
            else f.c.emplace_back(static_cast<long>(v.get<std::int64_t>()));
        }
        f.trim();
        return f;
    };
    z.numerator = read_poly(j.at("num"));
    z.denominator = read_poly(j.at("den"));
    return z;
}

// ---------------------------------------------------------------------------
// adaptive reconstruction from counts
// ---------------------------------------------------------------------------

namespace {

struct FitResult {
    IntPoly num, den;
    std::uint32_t slack;   // counts beyond the determining window
};

// Classical [L/M] rational reconstruction from z_0..z_{L+M}: run the
// extended Euclidean algorithm on (T^(L+M+1), S) and stop at the first
// remainder of degree <= L. Unique when it exists.
std::optional<Candidate> reconstruct_split(const SeriesPrefix& series, std::uint32_t L,
                                           std::uint32_t M) {
    const std::uint32_t window = L + M + 1;
    RatPoly r0;
    r0.c.assign(window + 1, mpq_class(0));
    r0.c[window] = 1;
    RatPoly r1;
    for (std::uint32_t i = 0; i < window && i < series.z.size(); ++i)
        r1.c.emplace_back(series.z[i]);
    r1.trim();
    RatPoly v0, v1;
    v1.c = {mpq_class(1)};
    while (!r1.is_zero() && r1.degree() > static_cast<int>(L)) {
        RatPoly q, r2;
        rp_divmod(r0, r1, q, r2);
        RatPoly v2 = rp_sub(v0, rp_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (v1.is_zero() || v1.degree() > static_cast<int>(M)) return std::nullopt;
    if (v1.c[0] == 0) return std::nullopt;
    return Candidate{r1, v1};
}

// Minimal-total-degree rational function that reproduces every computed
// series coefficient: scan total degrees ascending and splits within each,
// reconstruct from the smallest determining window, then demand agreement
// with the full series. Degenerate Pade blocks (e.g. even series) are no
// obstacle because every split gets its own Euclid run.
std::optional<FitResult> best_fit(const SeriesPrefix& series, std::uint32_t bound,
                                  std::uint32_t max_total_degree) {
    const std::uint32_t m = series.order();
    for (std::uint32_t D = 0; D <= std::min(max_total_degree, m); ++D) {
        for (std::uint32_t L = 0; L <= D; ++L) {
            std::uint32_t M = D - L;
            if (L > bound || M > bound) continue;
            auto cand = reconstruct_split(series, L, M);
            if (!cand) continue;
            auto red = normalize_candidate(*cand);
            if (!red) continue;
            if (red->num.degree() > static_cast<int>(bound) ||
                red->den.degree() > static_cast<int>(bound))
                continue;
            auto z = expand_fraction(red->num, red->den, m);
            bool ok = true;
            for (std::uint32_t i = 0; i <= m; ++i)
                if (z[i] != series.z[i]) { ok = false; break; }
            if (!ok) continue;
            std::uint32_t total = static_cast<std::uint32_t>(red->total_degree);
            return FitResult{red->num, red->den, m - total};
        }
    }
    return std::nullopt;
}

} // namespace

ZetaFunction zeta_of(CountProvider& provider, bool complement, const ZetaOptions& opts) {
    const auto& spec = provider.spec();
    const std::uint32_t m_cap = 2 * opts.bound + 1 + opts.holdout;
    std::vector<mpz_class> counts;
    std::uint32_t m = 0;
    std::optional<FitResult> accepted;
    bool budget_stopped = false;

    while (m < m_cap) {
        std::uint32_t k = m + 1;
        if (!provider.within_budget(k)) { budget_stopped = true; break; }
        try {
            counts.push_back(provider.count(k, complement));
        } catch (const DegreeTooLargeError&) {
            budget_stopped = true;   // extension tower ran out; same as a budget stop
            break;
        } catch (const FieldTooLargeError&) {
            budget_stopped = true;
            break;
        }
        ++m;
        if (m < opts.holdout && m < m_cap) continue;   // cannot certify yet
        SeriesPrefix s = series_from_counts(counts, m);
        auto fit = best_fit(s, opts.bound, m - std::min(m, opts.holdout));
        if (fit && fit->slack >= opts.holdout) { accepted = fit; break; }
    }

    if (!accepted && m >= 1) {
        // final attempt with whatever was computed (covers m == m_cap)
        SeriesPrefix s = series_from_counts(counts, m);
        auto fit = best_fit(s, opts.bound, m - std::min(m, opts.holdout));
        if (fit && fit->slack >= opts.holdout) accepted = fit;
    }
    if (!accepted) {
        if (budget_stopped)
            throw BudgetExceededError(
                m, "zeta reconstruction ran out of budget after " + std::to_string(m) +
                       " counts without a certified fit");
        throw NotStabilizedError(opts.bound);
    }

    ZetaFunction z;
    z.numerator = accepted->num;
    z.denominator = accepted->den;
    z.p = spec.field.p;
    z.e = spec.field.e;

    // round trip: the reconstruction must reproduce every computed count
    auto back = z.point_counts(m);
    for (std::uint32_t k = 1; k <= m; ++k)
        if (back[k - 1] != counts[k - 1])
            throw InternalInconsistencyError("zeta round-trip mismatch at k=" +
                                             std::to_string(k));
    // reduction check
    IntPoly g = poly_gcd(z.numerator, z.denominator);
    if (g.degree() >= 1)
        throw InternalInconsistencyError("zeta numerator and denominator share a factor");
    return z;
}

ZetaFunction zeta_of(const algebra::VarietySpec& spec, bool complement,
                     const ZetaOptions& opts) {
    CountProvider provider(spec, opts.counting);
    return zeta_of(provider, complement, opts);
}

} // namespace zetadiv::zeta
