#ifndef ZETADIV_PACKED_FIELD_HPP
#define ZETADIV_PACKED_FIELD_HPP

// Table-backed finite field arithmetic for the enumeration kernels.
// Elements are uint32 "reps"; the canonical index of an element is
// sum c_i p^i for its coefficient tuple.  Three backends:
//   direct  (Q <= 2048):  full add/mul tables, rep == canonical index
//   zech    (Q <= 2^22):  logarithm tables, rep 0 = zero, rep r = g^(r-1)
//   generic (Q <= 2^26):  digit arithmetic per call, rep == canonical index
// Enumerating reps 0..Q-1 visits every element exactly once in all modes.

#include <cstdint>
#include <memory>
#include <vector>

#include "zetadiv/algebra.hpp"

namespace zetadiv {

class PackedField {
public:
    using rep = std::uint32_t;

    // Memoized per FieldSpec; references stay valid for the program lifetime.
    static const PackedField& get(const algebra::FieldSpec& spec);

    std::uint64_t order() const { return q_; }
    const algebra::FieldSpec& spec() const { return spec_; }

    rep zero() const { return zero_; }
    rep one() const { return one_; }
    bool is_zero(rep a) const { return a == zero_; }

    rep add(rep a, rep b) const;
    rep mul(rep a, rep b) const;
    rep pow(rep a, std::uint32_t k) const;

    rep from_index(std::uint64_t idx) const;
    std::uint64_t to_index(rep a) const;

private:
    explicit PackedField(const algebra::FieldSpec& spec);

    enum class Mode { direct, zech, generic };

    std::uint64_t idx_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t idx_mul(std::uint64_t a, std::uint64_t b) const;

    algebra::FieldSpec spec_;
    std::uint64_t q_ = 0;
    std::uint32_t p_ = 0, m_ = 1;
    Mode mode_ = Mode::generic;
    rep zero_ = 0, one_ = 0;

    // direct
    std::vector<rep> add_table_, mul_table_;

    // zech
    std::vector<rep> log_;                 // canonical index -> rep
    std::vector<std::uint32_t> exp_;       // l -> canonical index of g^l
    std::vector<std::uint32_t> zech_;      // l -> log(1 + g^l), or kZechZero
    static constexpr std::uint32_t kZechZero = 0xffffffffu;
};

} // namespace zetadiv

#endif
