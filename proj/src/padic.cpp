#include "zetadiv/padic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace zetadiv::padic {

namespace {

std::uint32_t valuation(const mpz_class& a, std::uint32_t p) {
    mpz_class v = a;
    std::uint32_t count = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++count;
    }
    return count;
}

} // namespace

mpq_class NewtonPolygon::min_slope() const {
    if (slopes.empty())
        throw InvalidParamsError("degree-0 polygon has no slopes");
    return slopes.front().first;
}

NewtonPolygon newton_polygon(const IntPoly& f, std::uint32_t p) {
    if (f.is_zero() || f.constant_term() == 0) throw ZeroConstantTermError();
    NewtonPolygon np;
    for (std::uint32_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0) np.points.emplace_back(i, valuation(f.c[i], p));
    // monotone chain, keeping the lower hull
    for (const auto& pt : np.points) {
        auto& hull = np.vertices;
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull[hull.size() - 1];
            // keep (x2,y2) only if (x1,y1)->(x2,y2)->pt turns strictly left
            long long cross = static_cast<long long>(x2 - x1) * (static_cast<long long>(pt.second) - y1) -
                              static_cast<long long>(pt.first - x1) * (static_cast<long long>(y2) - y1);
            if (cross > 0) break;
            hull.pop_back();
        }
        np.vertices.push_back(pt);
    }
    for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        auto [x1, y1] = np.vertices[i];
        auto [x2, y2] = np.vertices[i + 1];
        mpq_class slope(static_cast<long>(y2) - static_cast<long>(y1),
                        static_cast<long>(x2) - static_cast<long>(x1));
        slope.canonicalize();
        np.slopes.emplace_back(slope, x2 - x1);
    }
    return np;
}

bool check_divisibility(const IntPoly& f, std::uint32_t p, std::uint32_t e,
                        std::uint32_t mu) {
    NewtonPolygon np = newton_polygon(f, p);
    if (np.slopes.empty()) return true;   // degree 0: no reciprocal roots
    mpq_class required(static_cast<long>(mu) * e);
    return np.min_slope() >= required;
}

// ---------------------------------------------------------------------------
// weights via simultaneous-iteration (Durand-Kerner) root finding
// ---------------------------------------------------------------------------

namespace {

using cplx = std::complex<long double>;

std::vector<cplx> to_complex(const IntPoly& f) {
    std::vector<cplx> c(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = cplx(f.c[i].get_d(), 0.0L);
    return c;
}

cplx horner(const std::vector<cplx>& c, cplx x) {
    cplx acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<cplx> find_roots(const IntPoly& f, double tol) {
    const int d = f.degree();
    auto c = to_complex(f);
    // Cauchy-style initial radius
    long double maxratio = 0.0L;
    for (int i = 0; i < d; ++i)
        maxratio = std::max(maxratio, std::abs(c[i]) / std::abs(c[d]));
    long double radius = 1.0L + maxratio;
    constexpr long double kPi = 3.141592653589793238462643383279502884L;
    std::vector<cplx> z(d);
    for (int i = 0; i < d; ++i) {
        long double angle = 2.0L * kPi * (static_cast<long double>(i) + 0.354L) / d;
        z[i] = std::polar(radius * 0.7L + 0.2L, angle);
    }
    const long double eps = std::max<long double>(tol * 1e-4L, 1e-17L);
    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0.0L;
        for (int i = 0; i < d; ++i) {
            cplx num = horner(c, z[i]) / c[d];
            cplx den(1.0L, 0.0L);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (z[i] - z[j]);
            cplx delta = num / den;
            z[i] -= delta;
            long double rel = std::abs(delta) / std::max<long double>(std::abs(z[i]), 1e-30L);
            worst = std::max(worst, rel);
        }
        if (worst < eps) break;
    }
    // residual verification: backward-error style bound
    for (int i = 0; i < d; ++i) {
        long double scale = 0.0L, xp = 1.0L;
        for (std::size_t k = 0; k < c.size(); ++k) {
            scale += std::abs(c[k]) * xp;
            xp *= std::abs(z[i]);
        }
        long double resid = std::abs(horner(c, z[i]));
        if (!(resid <= 1e-7L * std::max<long double>(scale, 1e-30L)))
            throw RootFindingFailedError("root residual too large at degree " +
                                         std::to_string(d));
    }
    return z;
}

} // namespace

std::vector<double> root_moduli(const IntPoly& f, double tol) {
    if (f.degree() < 1) return {};
    auto roots = find_roots(f, tol);
    std::vector<double> m(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        m[i] = static_cast<double>(std::abs(roots[i]));
    std::sort(m.begin(), m.end());
    return m;
}

WeightedFactor weigh_factor(const IntPoly& f, const std::string& side, std::uint32_t p,
                            std::uint32_t e, double tol) {
    WeightedFactor wf;
    wf.poly = f;
    wf.side = side;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    wf.weight = weight_of_factor(f, q, tol);
    wf.min_vq = newton_polygon(f, p).min_slope() / e;
    auto moduli = root_moduli(f, tol);
    wf.root_moduli.reserve(moduli.size());
    for (double m : moduli) wf.root_moduli.push_back(m > 0 ? 1.0 / m : 0.0);
    std::sort(wf.root_moduli.begin(), wf.root_moduli.end());
    return wf;
}

unsigned weight_of_factor(const IntPoly& f, std::uint64_t q, double tol) {
    if (f.degree() < 1)
        throw InvalidParamsError("weight is defined for factors of degree >= 1");
    if (f.degree() > 64)
        throw DegreeTooLargeError("weight detection is limited to degree 64");
    mpz_class c0 = f.constant_term();
    if (c0 != 1 && c0 != -1)
        throw InvalidParamsError("factor must be normalized to unit constant term");
    auto roots = find_roots(f, tol);
    // reciprocal roots alpha = 1/z; w_est = 2 log|alpha| / log q
    const long double logq = std::log(static_cast<long double>(q));
    std::vector<long double> w_est(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        long double mod = std::abs(roots[i]);
        if (mod <= 0.0L) throw RootFindingFailedError("zero root modulus");
        w_est[i] = -2.0L * std::log(mod) / logq;
    }
    long double mean = 0.0L;
    for (auto w : w_est) mean += w;
    mean /= static_cast<long double>(w_est.size());
    long long snapped = std::llround(static_cast<double>(mean));
    constexpr long double kSnapWindow = 0.01L;
    std::ostringstream detail;
    if (snapped < 0) {
        detail << "negative snapped weight " << snapped << " for " << f.to_string();
        throw ImpureFactorError(detail.str());
    }
    for (std::size_t i = 0; i < w_est.size(); ++i) {
        if (std::abs(w_est[i] - static_cast<long double>(snapped)) > kSnapWindow) {
            detail << "factor " << f.to_string() << " is not pure: root modulus exponents [";
            for (std::size_t t = 0; t < w_est.size(); ++t) {
                if (t) detail << ", ";
                detail << static_cast<double>(w_est[t]);
            }
            detail << "] do not snap to one integer weight";
            throw ImpureFactorError(detail.str());
        }
    }
    return static_cast<unsigned>(snapped);
}

} // namespace zetadiv::padic
