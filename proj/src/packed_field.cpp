#include "packed_field.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <tuple>

namespace zetadiv {

namespace {

constexpr std::uint64_t kDirectLimit = 2048;
constexpr std::uint64_t kZechLimit = std::uint64_t(1) << 22;
constexpr std::uint64_t kGenericLimit = std::uint64_t(1) << 26;

} // namespace

std::uint64_t PackedField::idx_add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        std::uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * mul;
        mul *= p_;
    }
    return r;
}

std::uint64_t PackedField::idx_mul(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a * b) % p_;
    std::uint32_t da[32], db[32];
    for (std::uint32_t i = 0; i < m_; ++i) {
        da[i] = static_cast<std::uint32_t>(a % p_); a /= p_;
        db[i] = static_cast<std::uint32_t>(b % p_); b /= p_;
    }
    std::uint64_t prod[63] = {0};
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    }
    for (std::uint32_t k = 2 * m_ - 2; k >= m_; --k) {
        std::uint64_t top = prod[k];
        if (top) {
            for (std::uint32_t i = 0; i < m_; ++i) {
                std::uint64_t sub = (top * spec_.modulus[i]) % p_;
                prod[k - m_ + i] = (prod[k - m_ + i] + p_ - sub) % p_;
            }
            prod[k] = 0;
        }
        if (k == m_) break;
    }
    std::uint64_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += prod[i] * mul;
        mul *= p_;
    }
    return r;
}

PackedField::PackedField(const algebra::FieldSpec& spec) : spec_(spec) {
    p_ = spec.p;
    m_ = spec.e;
    q_ = spec.order_u64();
    if (q_ > kGenericLimit)
        throw FieldTooLargeError("field too large for enumeration kernels (limit 2^26)");

    if (q_ <= kDirectLimit) {
        mode_ = Mode::direct;
        zero_ = 0;
        one_ = 1;
        const std::uint32_t Q = static_cast<std::uint32_t>(q_);
        add_table_.resize(std::size_t(Q) * Q);
        mul_table_.resize(std::size_t(Q) * Q);
        for (std::uint32_t a = 0; a < Q; ++a)
            for (std::uint32_t b = a; b < Q; ++b) {
                rep s = static_cast<rep>(idx_add(a, b));
                add_table_[std::size_t(a) * Q + b] = s;
                add_table_[std::size_t(b) * Q + a] = s;
            }
        for (std::uint32_t a = 0; a < Q; ++a) {
            // row built from a * t^i (index of t is p when m_ >= 2), digits
            // combined through the add table
            std::uint32_t shifted[16];
            if (m_ >= 2) {
                std::uint64_t cur = a;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    shifted[i] = static_cast<std::uint32_t>(cur);
                    if (i + 1 < m_) cur = idx_mul(cur, p_);
                }
            }
            for (std::uint32_t b = 0; b < Q; ++b) {
                std::uint64_t r;
                if (m_ == 1) {
                    r = (std::uint64_t(a) * b) % p_;
                } else {
                    r = 0;
                    std::uint64_t bb = b;
                    for (std::uint32_t i = 0; i < m_ && bb; ++i) {
                        std::uint32_t digit = static_cast<std::uint32_t>(bb % p_);
                        bb /= p_;
                        std::uint32_t part = shifted[i];
                        for (std::uint32_t d = 0; d < digit; ++d)
                            r = add_table_[r * Q + part];
                    }
                }
                mul_table_[std::size_t(a) * Q + b] = static_cast<rep>(r);
            }
        }
        return;
    }

    if (q_ <= kZechLimit) {
        mode_ = Mode::zech;
        zero_ = 0;
        const std::uint64_t Q = q_;
        // find a generator of the multiplicative group
        std::uint64_t n = Q - 1;
        std::vector<std::uint64_t> prime_factors;
        {
            std::uint64_t t = n;
            for (std::uint64_t d = 2; d * d <= t; ++d)
                if (t % d == 0) {
                    prime_factors.push_back(d);
                    while (t % d == 0) t /= d;
                }
            if (t > 1) prime_factors.push_back(t);
        }
        auto idx_pow = [&](std::uint64_t base, std::uint64_t k) {
            std::uint64_t r = 1;
            while (k) {
                if (k & 1) r = idx_mul(r, base);
                k >>= 1;
                if (k) base = idx_mul(base, base);
            }
            return r;
        };
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < Q; ++cand) {
            bool ok = true;
            for (auto f : prime_factors)
                if (idx_pow(cand, n / f) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        assert(g != 0);
        exp_.resize(n);
        log_.assign(Q, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t l = 0; l < n; ++l) {
            exp_[l] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<rep>(l + 1);
            cur = idx_mul(cur, g);
        }
        one_ = log_[1];
        zech_.assign(n, kZechZero);
        for (std::uint64_t l = 0; l < n; ++l) {
            std::uint64_t idx = exp_[l];
            // add one: increment the c_0 digit mod p
            std::uint64_t c0 = idx % p_;
            std::uint64_t bumped = idx - c0 + (c0 + 1) % p_;
            if (bumped != 0) zech_[l] = log_[bumped] - 1;
        }
        return;
    }

    mode_ = Mode::generic;
    zero_ = 0;
    one_ = 1;
}

PackedField::rep PackedField::add(rep a, rep b) const {
    switch (mode_) {
    case Mode::direct:
        return add_table_[std::size_t(a) * q_ + b];
    case Mode::zech: {
        if (a == zero_) return b;
        if (b == zero_) return a;
        std::uint32_t la = a - 1, lb = b - 1;
        if (la > lb) std::swap(la, lb);
        std::uint32_t z = zech_[lb - la];
        if (z == kZechZero) return zero_;
        std::uint64_t l = la + z;
        std::uint64_t n = q_ - 1;
        if (l >= n) l -= n;
        return static_cast<rep>(l + 1);
    }
    default:
        return static_cast<rep>(idx_add(a, b));
    }
}

PackedField::rep PackedField::mul(rep a, rep b) const {
    switch (mode_) {
    case Mode::direct:
        return mul_table_[std::size_t(a) * q_ + b];
    case Mode::zech: {
        if (a == zero_ || b == zero_) return zero_;
        std::uint64_t l = std::uint64_t(a - 1) + (b - 1);
        std::uint64_t n = q_ - 1;
        if (l >= n) l -= n;
        return static_cast<rep>(l + 1);
    }
    default:
        return static_cast<rep>(idx_mul(a, b));
    }
}

PackedField::rep PackedField::pow(rep a, std::uint32_t k) const {
    if (k == 0) return one_;
    if (mode_ == Mode::zech) {
        if (a == zero_) return zero_;
        std::uint64_t l = (std::uint64_t(a - 1) * k) % (q_ - 1);
        return static_cast<rep>(l + 1);
    }
    rep r = one_, base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return r;
}

PackedField::rep PackedField::from_index(std::uint64_t idx) const {
    if (mode_ == Mode::zech) return log_[idx];
    return static_cast<rep>(idx);
}

std::uint64_t PackedField::to_index(rep a) const {
    if (mode_ == Mode::zech) return a == zero_ ? 0 : exp_[a - 1];
    return a;
}

const PackedField& PackedField::get(const algebra::FieldSpec& spec) {
    struct Key {
        std::uint32_t p, e;
        std::vector<std::uint32_t> mod;
        bool operator<(const Key& o) const {
            return std::tie(p, e, mod) < std::tie(o.p, o.e, o.mod);
        }
    };
    static std::mutex mutex;
    static std::map<Key, std::unique_ptr<PackedField>> registry;
    Key key{spec.p, spec.e, spec.modulus};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<PackedField>(new PackedField(spec))).first;
    return *it->second;
}

} // namespace zetadiv
