#ifndef P1CODES_FIELD_HPP
#define P1CODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "p1codes/config.hpp"

namespace p1codes {

class FieldElement;

// GF(p^k) with an explicit monic irreducible modulus over Z_p.
//
// Elements are stored as indices in [0, q): the element with coefficient
// sequence (c_0, ..., c_{k-1}) (constant term first) has index
// sum c_i p^i.  Multiplicative structure is table-driven (discrete
// exp/log against a fixed generator), so mul/inv/pow are O(1); addition is
// digitwise mod p.  All arithmetic is exact.
//
// The canonical element ordering used everywhere for "smallest" choices is
// lexicographic on the coefficient sequence, constant term first.  For prime
// fields this is the usual 0 < 1 < ... < p-1.
class Field {
  public:
    // GF(p^k) with the lexicographically smallest irreducible monic modulus
    // (deterministic across runs).  For k = 1 the modulus is x.
    static std::shared_ptr<const Field> make(std::uint64_t p, unsigned k,
                                             std::uint64_t order_budget = Budgets{}.field_order_budget);

    // Same, but with a caller-supplied modulus (length k+1, constant term
    // first, leading coefficient 1).  Irreducibility is verified.
    static std::shared_ptr<const Field> with_modulus(std::uint64_t p, unsigned k,
                                                     const std::vector<std::uint32_t>& modulus,
                                                     std::uint64_t order_budget = Budgets{}.field_order_budget);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    // Two Field objects describe the same field iff (p, k, modulus) agree.
    bool same(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    // Raw index arithmetic (unchecked; hot paths use these directly).
    // Prime fields reduce directly; extensions go through discrete-log
    // tables, with addition via Zech logarithms: a + b = a (1 + b/a).
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return std::uint32_t(s >= p_ ? s - p_ : s);
        }
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint64_t la = log_[a], lb = log_[b];
        std::uint64_t t = lb >= la ? lb - la : lb + (q_ - 1) - la;
        std::uint32_t z = zech_[t];
        if (z == kZechZero) return 0;
        std::uint64_t s = la + z;
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (k_ == 1) return a == 0 ? 0 : std::uint32_t(p_ - a);
        if (p_ == 2 || a == 0) return a;
        std::uint64_t s = log_[a] + (q_ - 1) / 2;
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) return std::uint32_t((std::uint64_t(a) * b) % p_);
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t inv(std::uint32_t a) const;  // throws on 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint64_t element_order(std::uint32_t a) const;  // multiplicative order; throws on 0

    // Canonical ordering and ranking.
    bool less(std::uint32_t a, std::uint32_t b) const;
    std::uint64_t rank_of(std::uint32_t a) const;
    std::uint32_t element_at_rank(std::uint64_t r) const;

    std::vector<std::uint32_t> coeffs_of(std::uint32_t a) const;
    std::uint32_t index_of(const std::vector<std::uint32_t>& coeffs) const;

    // Embedding of integers via n * 1 (lands in the prime subfield).
    std::uint32_t from_int(std::int64_t n) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::uint32_t index) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);
    void build_tables();
    std::uint32_t add_ext(std::uint32_t a, std::uint32_t b) const;  // digitwise, used while building
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;

    static constexpr std::uint32_t kZechZero = ~0u;  // marks 1 + g^t = 0

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;     // length k+1, constant first, monic
    std::vector<std::uint32_t> pow_p_;       // p^0 .. p^k
    std::vector<std::uint32_t> xk_red_;      // x^k .. x^(2k-2) reduced, as k digits each
    std::vector<std::uint32_t> exp_;         // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;         // log_[exp_[i]] = i; log_[0] unused
    std::vector<std::uint32_t> zech_;        // zech_[t] = log(1 + g^t), extensions only
    std::vector<std::uint64_t> order_prime_factors_;  // distinct prime factors of q-1
};

using FieldPtr = std::shared_ptr<const Field>;

// A field element: owner plus canonical index.  Operators check that both
// operands belong to the same field and throw std::invalid_argument otherwise.
class FieldElement {
  public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const Field& f, std::uint32_t index) : f_(&f), v_(index) {}

    const Field& field() const { return *f_; }
    std::uint32_t index() const { return v_; }
    std::vector<std::uint32_t> coeffs() const { return f_->coeffs_of(v_); }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return bin(o, &Field::add); }
    FieldElement operator-(const FieldElement& o) const { return bin(o, &Field::sub); }
    FieldElement operator*(const FieldElement& o) const { return bin(o, &Field::mul); }
    FieldElement operator/(const FieldElement& o) const { return bin(o, &Field::div); }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(v_)); }
    FieldElement inverse() const { return FieldElement(*f_, f_->inv(v_)); }
    FieldElement pow(std::uint64_t e) const { return FieldElement(*f_, f_->pow(v_, e)); }
    std::uint64_t order() const { return f_->element_order(v_); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    FieldElement bin(const FieldElement& o, std::uint32_t (Field::*op)(std::uint32_t, std::uint32_t) const) const;

    const Field* f_;
    std::uint32_t v_;
};

// True iff a precedes b in the canonical element ordering.
bool canonical_less(const FieldElement& a, const FieldElement& b);

// Smallest element of exact multiplicative order m.  Requires m | q - 1.
FieldElement primitive_root_of_unity(const Field& f, std::uint64_t m);

// Smallest i with i^2 = -1.  Requires q = 1 (mod 4).
FieldElement sqrt_minus_one(const Field& f);

// Smallest s with s^2 = a, if one exists.
bool try_sqrt(const Field& f, const FieldElement& a, FieldElement& out);

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// Writes q = p^k for a prime p; false if q is not a prime power.
bool prime_power_decompose(std::uint64_t q, std::uint64_t& p, unsigned& k);

}  // namespace p1codes

#endif
