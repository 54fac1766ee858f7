#include "zetadiv/counting.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstring>
#include <thread>

#include "packed_field.hpp"

namespace zetadiv::counting {

using algebra::Ambient;
using algebra::FieldSpec;

namespace {

constexpr std::uint32_t kMaxKernelVars = 40;

// Kernel polynomials: exponent rows are fixed-size so substitution never
// allocates per term.
struct KTerm {
    std::array<std::uint16_t, kMaxKernelVars> e;
    std::uint32_t c;   // PackedField rep
};

struct KPoly {
    std::vector<KTerm> terms;
};

// Substitute variable 0 with the given rep; remaining variables shift down.
KPoly substitute_first(const PackedField& F, const KPoly& f, std::uint32_t nvars,
                       std::uint32_t value) {
    KPoly out;
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        std::uint32_t c = t.c;
        if (t.e[0] > 0) {
            if (F.is_zero(value)) continue;
            c = F.mul(c, F.pow(value, t.e[0]));
        }
        if (F.is_zero(c)) continue;
        KTerm nt;
        nt.e.fill(0);
        for (std::uint32_t i = 1; i < nvars; ++i) nt.e[i - 1] = t.e[i];
        nt.c = c;
        out.terms.push_back(nt);
    }
    // merge duplicate exponent rows
    std::sort(out.terms.begin(), out.terms.end(), [](const KTerm& a, const KTerm& b) {
        return std::memcmp(a.e.data(), b.e.data(), sizeof(a.e)) < 0;
    });
    std::vector<KTerm> merged;
    merged.reserve(out.terms.size());
    for (const auto& t : out.terms) {
        if (!merged.empty() &&
            std::memcmp(merged.back().e.data(), t.e.data(), sizeof(t.e)) == 0) {
            merged.back().c = F.add(merged.back().c, t.c);
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [&](const KTerm& t) { return F.is_zero(t.c); });
    out.terms = std::move(merged);
    return out;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Classify a specialized system before enumerating:
//   - identically-zero polynomials impose nothing and are dropped
//   - a nonzero constant polynomial kills the whole block
enum class BlockState { empty, full, sweep };

BlockState classify(const PackedField& F, std::vector<KPoly>& polys) {
    for (auto& f : polys) {
        if (f.terms.empty()) continue;   // zero polynomial: satisfied everywhere
        bool constant = true;
        for (const auto& t : f.terms) {
            for (std::uint32_t i = 0; i < kMaxKernelVars; ++i)
                if (t.e[i]) { constant = false; break; }
            if (!constant) break;
        }
        if (constant) return BlockState::empty;   // nonzero constant
    }
    std::erase_if(polys, [](const KPoly& f) { return f.terms.empty(); });
    if (polys.empty()) return BlockState::full;
    return BlockState::sweep;
}



// One-variable sweep with dense univariate coefficients and short-circuit
// across polynomials.
std::uint64_t sweep_univariate(const PackedField& F, const std::vector<KPoly>& polys) {
    const std::uint64_t Q = F.order();
    std::vector<std::vector<std::uint32_t>> univ(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        std::uint32_t deg = 0;
        for (const auto& t : polys[i].terms) deg = std::max<std::uint32_t>(deg, t.e[0]);
        univ[i].assign(deg + 1, F.zero());
        for (const auto& t : polys[i].terms)
            univ[i][t.e[0]] = F.add(univ[i][t.e[0]], t.c);
    }
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < Q; ++x) {
        const std::uint32_t xr = static_cast<std::uint32_t>(x);
        bool all_zero = true;
        for (const auto& u : univ) {
            std::uint32_t acc = u.back();
            for (std::size_t j = u.size() - 1; j-- > 0;)
                acc = F.add(F.mul(acc, xr), u[j]);
            if (!F.is_zero(acc)) { all_zero = false; break; }
        }
        if (all_zero) ++count;
    }
    return count;
}

// Two-variable case: iterate the first coordinate, collapsing each
// polynomial to a univariate in the second, then sweep.
std::uint64_t sweep_bivariate(const PackedField& F, const std::vector<KPoly>& polys) {
    const std::uint64_t Q = F.order();
    std::size_t np = polys.size();
    std::vector<std::uint32_t> maxdeg(np, 0);
    for (std::size_t i = 0; i < np; ++i)
        for (const auto& t : polys[i].terms)
            maxdeg[i] = std::max<std::uint32_t>(maxdeg[i], t.e[1]);
    std::vector<std::vector<std::uint32_t>> univ(np);
    for (std::size_t i = 0; i < np; ++i) univ[i].assign(maxdeg[i] + 1, F.zero());

    std::uint64_t count = 0;
    for (std::uint64_t x0 = 0; x0 < Q; ++x0) {
        const std::uint32_t x0r = static_cast<std::uint32_t>(x0);
        bool block_empty = false;
        bool any_constraint = false;
        for (std::size_t i = 0; i < np; ++i) {
            auto& u = univ[i];
            std::fill(u.begin(), u.end(), F.zero());
            for (const auto& t : polys[i].terms) {
                std::uint32_t c = t.c;
                if (t.e[0] > 0) {
                    if (F.is_zero(x0r)) continue;
                    c = F.mul(c, F.pow(x0r, t.e[0]));
                }
                u[t.e[1]] = F.add(u[t.e[1]], c);
            }
            std::uint32_t deg = 0;
            for (std::uint32_t j = maxdeg[i]; j > 0; --j)
                if (!F.is_zero(u[j])) { deg = j; break; }
            if (deg == 0) {
                if (!F.is_zero(u[0])) { block_empty = true; break; }
                // identically zero after specialization: no constraint
            } else {
                any_constraint = true;
            }
        }
        if (block_empty) continue;
        if (!any_constraint) { count += Q; continue; }
        for (std::uint64_t x1 = 0; x1 < Q; ++x1) {
            const std::uint32_t x1r = static_cast<std::uint32_t>(x1);
            bool all_zero = true;
            for (std::size_t i = 0; i < np; ++i) {
                const auto& u = univ[i];
                std::uint32_t acc = u[maxdeg[i]];
                for (std::uint32_t j = maxdeg[i]; j-- > 0;)
                    acc = F.add(F.mul(acc, x1r), u[j]);
                if (!F.is_zero(acc)) { all_zero = false; break; }
            }
            if (all_zero) ++count;
        }
    }
    return count;
}

std::uint64_t count_serial(const PackedField& F, std::vector<KPoly> polys,
                           std::uint32_t nvars) {
    switch (classify(F, polys)) {
    case BlockState::empty: return 0;
    case BlockState::full: return pow_u64(F.order(), nvars);
    case BlockState::sweep: break;
    }
    if (nvars == 0) return 0;   // unreachable: constants were classified
    if (nvars == 1) return sweep_univariate(F, polys);
    if (nvars == 2) return sweep_bivariate(F, polys);
    std::uint64_t count = 0;
    const std::uint64_t Q = F.order();
    for (std::uint64_t x = 0; x < Q; ++x) {
        std::vector<KPoly> specialized;
        specialized.reserve(polys.size());
        for (const auto& f : polys)
            specialized.push_back(substitute_first(F, f, nvars, static_cast<std::uint32_t>(x)));
        count += count_serial(F, std::move(specialized), nvars - 1);
    }
    return count;
}

std::uint64_t count_recursive(const PackedField& F, std::vector<KPoly> polys,
                              std::uint32_t nvars, const CountOptions& opts) {
    switch (classify(F, polys)) {
    case BlockState::empty: return 0;
    case BlockState::full: return pow_u64(F.order(), nvars);
    case BlockState::sweep: break;
    }
    const std::uint64_t Q = F.order();
    unsigned threads = opts.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t total_points = 1;
    for (std::uint32_t i = 0; i < nvars && total_points < (std::uint64_t(1) << 62); ++i)
        total_points *= Q;
    if (threads <= 1 || nvars < 2 || total_points < opts.parallel_threshold)
        return count_serial(F, std::move(polys), nvars);

    // partition on the first coordinate; each chunk is independent
    unsigned nchunks = std::min<std::uint64_t>(threads, Q);
    std::vector<std::uint64_t> partial(nchunks, 0);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nchunks; ++t) {
        workers.emplace_back([&, t]() {
            std::uint64_t local = 0;
            for (std::uint64_t x = t; x < Q; x += nchunks) {
                std::vector<KPoly> specialized;
                specialized.reserve(polys.size());
                for (const auto& f : polys)
                    specialized.push_back(
                        substitute_first(F, f, nvars, static_cast<std::uint32_t>(x)));
                local += count_serial(F, std::move(specialized), nvars - 1);
            }
            partial[t] = local;
        });
    }
    for (auto& w : workers) w.join();
    std::uint64_t count = 0;
    for (auto v : partial) count += v;
    return count;
}

// Build kernel polynomials over F_{q^k}: embed every coefficient and pack.
struct KernelSetup {
    const PackedField* field;
    std::vector<KPoly> polys;
};

KernelSetup make_kernel(const VarietySpec& spec, std::uint32_t k) {
    const FieldSpec& base = spec.field;
    KernelSetup out;
    if (spec.nvars() > kMaxKernelVars)
        throw InvalidParamsError("too many variables for the enumeration kernel");
    if (k == 1) {
        const PackedField& F = PackedField::get(base);
        out.field = &F;
        for (const auto& poly : spec.polys) {
            KPoly kp;
            for (const auto& [e, c] : poly.terms()) {
                KTerm t;
                t.e.fill(0);
                for (std::size_t i = 0; i < e.size(); ++i)
                    t.e[i] = static_cast<std::uint16_t>(e[i]);
                t.c = F.from_index(c.index());
                kp.terms.push_back(t);
            }
            out.polys.push_back(std::move(kp));
        }
        return out;
    }
    auto ext = algebra::extend_and_embed(base, k);
    const PackedField& F = PackedField::get(ext.ext);
    out.field = &F;
    for (const auto& poly : spec.polys) {
        KPoly kp;
        for (const auto& [e, c] : poly.terms()) {
            KTerm t;
            t.e.fill(0);
            for (std::size_t i = 0; i < e.size(); ++i)
                t.e[i] = static_cast<std::uint16_t>(e[i]);
            t.c = F.from_index(ext.embedding(c).index());
            kp.terms.push_back(t);
        }
        out.polys.push_back(std::move(kp));
    }
    return out;
}

void check_budget(const VarietySpec& spec, std::uint32_t k, const CountOptions& opts) {
    mpz_class cost;
    std::uint32_t exponent =
        spec.ambient == Ambient::affine ? k * spec.n : k * (spec.n + 1);
    mpz_ui_pow_ui(cost.get_mpz_t(), spec.field.order_u64(), exponent);
    if (cost > mpz_class(opts.budget))
        throw BudgetExceededError(
            k > 0 ? k - 1 : 0,
            "counting over F_{q^" + std::to_string(k) + "} needs " + cost.get_str() +
                " ambient points; budget is " + std::to_string(opts.budget));
}

} // namespace

mpz_class ambient_count(const VarietySpec& spec, std::uint32_t k) {
    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), spec.field.order_u64(), k);
    mpz_class r;
    if (spec.ambient == Ambient::affine) {
        mpz_pow_ui(r.get_mpz_t(), qk.get_mpz_t(), spec.n);
    } else {
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), qk.get_mpz_t(), spec.n + 1);
        num -= 1;
        mpz_class den = qk - 1;
        mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return r;
}

mpz_class count_affine(const VarietySpec& spec, std::uint32_t k, const CountOptions& opts) {
    if (spec.ambient != Ambient::affine)
        throw InvalidParamsError("count_affine requires an affine spec");
    if (k < 1) throw InvalidParamsError("k must be >= 1");
    check_budget(spec, k, opts);
    KernelSetup ks = make_kernel(spec, k);
    return mpz_class(static_cast<unsigned long>(
        count_recursive(*ks.field, std::move(ks.polys), spec.n, opts)));
}

mpz_class count_projective(const VarietySpec& spec, std::uint32_t k, const CountOptions& opts) {
    if (spec.ambient != Ambient::projective)
        throw InvalidParamsError("count_projective requires a projective spec");
    if (k < 1) throw InvalidParamsError("k must be >= 1");
    check_budget(spec, k, opts);
    KernelSetup ks = make_kernel(spec, k);
    const PackedField& F = *ks.field;
    // Normalized representatives: scan for the first nonzero coordinate,
    // fix it to 1. Block l has x_0..x_{l-1} = 0, x_l = 1, the rest free.
    std::uint64_t total = 0;
    std::uint32_t nv = spec.n + 1;
    for (std::uint32_t lead = 0; lead < nv; ++lead) {
        std::vector<KPoly> block;
        block.reserve(ks.polys.size());
        for (const auto& f : ks.polys) {
            KPoly g;
            for (const auto& t : f.terms) {
                bool dead = false;
                for (std::uint32_t i = 0; i < lead; ++i)
                    if (t.e[i] > 0) { dead = true; break; }
                if (dead) continue;
                KTerm nt;
                nt.e.fill(0);
                for (std::uint32_t i = lead + 1; i < nv; ++i) nt.e[i - lead - 1] = t.e[i];
                nt.c = t.c;   // x_lead = 1 contributes nothing
                g.terms.push_back(nt);
            }
            // merge duplicates created by dropping x_lead
            std::sort(g.terms.begin(), g.terms.end(), [](const KTerm& a, const KTerm& b) {
                return std::memcmp(a.e.data(), b.e.data(), sizeof(a.e)) < 0;
            });
            KPoly merged;
            for (const auto& t : g.terms) {
                if (!merged.terms.empty() &&
                    std::memcmp(merged.terms.back().e.data(), t.e.data(), sizeof(t.e)) == 0)
                    merged.terms.back().c = F.add(merged.terms.back().c, t.c);
                else
                    merged.terms.push_back(t);
            }
            std::erase_if(merged.terms, [&](const KTerm& t) { return F.is_zero(t.c); });
            block.push_back(std::move(merged));
        }
        total += count_recursive(F, std::move(block), nv - lead - 1, opts);
    }
    return mpz_class(static_cast<unsigned long>(total));
}

mpz_class count_variety(const VarietySpec& spec, std::uint32_t k, const CountOptions& opts) {
    return spec.ambient == Ambient::affine ? count_affine(spec, k, opts)
                                           : count_projective(spec, k, opts);
}

mpz_class count_projective_via_cone(const VarietySpec& spec, std::uint32_t k,
                                    const CountOptions& opts) {
    if (spec.ambient != Ambient::projective)
        throw InvalidParamsError("cone route requires a projective spec");
    check_budget(spec, k, opts);
    KernelSetup ks = make_kernel(spec, k);
    std::uint64_t cone =
        count_recursive(*ks.field, std::move(ks.polys), spec.n + 1, opts);
    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), spec.field.order_u64(), k);
    mpz_class num = mpz_class(static_cast<unsigned long>(cone)) - 1;
    mpz_class den = qk - 1;
    if (num % den != 0)
        throw InternalInconsistencyError("affine cone count is not 1 mod q^k - 1");
    return num / den;
}

PointCounts count_sequence(const VarietySpec& spec, std::uint32_t kmax, bool complement,
                           const CountOptions& opts) {
    PointCounts pc{spec, complement, {}};
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        mpz_class n;
        try {
            n = count_variety(spec, k, opts);
        } catch (const BudgetExceededError&) {
            throw BudgetExceededError(k - 1, "budget exceeded at k=" + std::to_string(k) +
                                                 "; completed k=" + std::to_string(k - 1));
        }
        if (complement) n = ambient_count(spec, k) - n;
        pc.counts.push_back(std::move(n));
    }
    return pc;
}

CountProvider::CountProvider(VarietySpec spec, CountOptions opts)
    : spec_(std::move(spec)), opts_(opts) {}

bool CountProvider::within_budget(std::uint32_t k) const {
    mpz_class cost;
    std::uint32_t exponent =
        spec_.ambient == Ambient::affine ? k * spec_.n : k * (spec_.n + 1);
    mpz_ui_pow_ui(cost.get_mpz_t(), spec_.field.order_u64(), exponent);
    return cost <= mpz_class(opts_.budget);
}

const mpz_class& CountProvider::variety_count(std::uint32_t k) {
    if (k == 0) throw InvalidParamsError("k must be >= 1");
    if (cache_.size() < k) cache_.resize(k);
    if (!cache_[k - 1]) cache_[k - 1] = count_variety(spec_, k, opts_);
    return *cache_[k - 1];
}

mpz_class CountProvider::count(std::uint32_t k, bool complement) {
    mpz_class n = variety_count(k);
    if (complement) n = ambient_count(spec_, k) - n;
    return n;
}

std::uint32_t CountProvider::largest_computed() const {
    std::uint32_t k = 0;
    for (std::uint32_t i = 0; i < cache_.size(); ++i)
        if (cache_[i]) k = i + 1;
    return k;
}

} // namespace zetadiv::counting
