#include "p1codes/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "p1codes/errors.hpp"

namespace p1codes {

namespace {

// Minimal Z_p[x] helpers used only while bootstrapping a field (modulus
// search, reduction tables).  Coefficients constant-term first, no trailing
// zeros.
using ZpPoly = std::vector<std::uint32_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = std::uint32_t((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    zp_trim(c);
    return c;
}

// Remainder of a by monic b.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
    zp_trim(a);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = (c * b[i]) % p;
            std::uint64_t cur = a[i + shift];
            a[i + shift] = std::uint32_t((cur + p - t) % p);
        }
        zp_trim(a);
    }
    return a;
}

// Irreducibility of a monic polynomial of degree >= 1 over Z_p, by trial
// division by every monic polynomial of degree 1..deg/2.  Fine at desk scale.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d, odometer over the low d coefficients
        ZpPoly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (zp_mod(f, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && g[i] + 1 == p) g[i++] = 0;
            if (i == d) break;
            ++g[i];
        }
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool prime_power_decompose(std::uint64_t q, std::uint64_t& p, unsigned& k) {
    if (q < 2) return false;
    auto fs = distinct_prime_factors(q);
    if (fs.size() != 1) return false;
    p = fs[0];
    k = 0;
    while (q > 1) {
        q /= p;
        ++k;
    }
    return true;
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) q_ *= p_;
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= k_; ++i) pow_p_[i] = std::uint32_t(pow_p_[i - 1] * p_);
    build_tables();
}

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned k, std::uint64_t order_budget) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field_make: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("field_make: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > order_budget / p) throw budget_error("field_make: p^k exceeds the field order budget");
        q *= p;
    }
    if (k == 1) return with_modulus(p, 1, {0, 1}, order_budget);

    // Lexicographically smallest irreducible monic modulus, coefficient
    // sequence compared constant term first.
    ZpPoly f(k + 1, 0);
    f[k] = 1;
    // digits = (c_0, ..., c_{k-1}); the odometer bumps the last digit fastest,
    // so candidates ascend lexicographically with the constant term leading.
    std::vector<std::uint32_t> digits(k, 0);
    while (true) {
        for (unsigned i = 0; i < k; ++i) f[i] = digits[i];
        if (f[0] != 0 && zp_irreducible(f, p))  // c_0 = 0 means divisible by x
            return with_modulus(p, k, f, order_budget);
        int i = int(k) - 1;
        while (i >= 0 && digits[i] + 1 == p) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    throw std::logic_error("field_make: no irreducible modulus found");  // unreachable
}

std::shared_ptr<const Field> Field::with_modulus(std::uint64_t p, unsigned k,
                                                 const std::vector<std::uint32_t>& modulus,
                                                 std::uint64_t order_budget) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field: p is not prime");
    if (k < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw std::invalid_argument("field: modulus must be monic of degree k");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("field: modulus coefficients must be reduced mod p");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > order_budget / p) throw budget_error("field: p^k exceeds the field order budget");
        q *= p;
    }
    if (k > 1 && !zp_irreducible(modulus, p))
        throw std::invalid_argument("field: modulus is reducible over Z_p");
    return std::shared_ptr<const Field>(new Field(p, k, modulus));
}

std::uint32_t Field::add_ext(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * pow_p_[i];
        a /= std::uint32_t(p_);
        b /= std::uint32_t(p_);
    }
    return r;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t((std::uint64_t(a) * b) % p_);
    // schoolbook product of digit vectors, then reduce x^k.. via xk_red_
    std::vector<std::uint32_t> da(k_), db(k_);
    for (unsigned i = 0; i < k_; ++i, a /= std::uint32_t(p_)) da[i] = a % p_;
    for (unsigned i = 0; i < k_; ++i, b /= std::uint32_t(p_)) db[i] = b % p_;
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    std::vector<std::uint64_t> acc(k_, 0);
    for (unsigned i = 0; i < k_; ++i) acc[i] = prod[i] % p_;
    for (unsigned d = k_; d < 2 * k_ - 1; ++d) {
        std::uint64_t c = prod[d] % p_;
        if (c == 0) continue;
        std::uint32_t red = xk_red_[d - k_];
        for (unsigned i = 0; i < k_; ++i) {
            acc[i] += c * (red % p_);
            red /= std::uint32_t(p_);
        }
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) r += std::uint32_t(acc[i] % p_) * pow_p_[i];
    return r;
}

std::uint32_t Field::pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    if (k_ > 1) {
        // x^k = -(modulus minus leading term); then x^(k+j) by shifting
        std::vector<std::uint32_t> cur(k_);
        for (unsigned i = 0; i < k_; ++i) cur[i] = modulus_[i] == 0 ? 0 : std::uint32_t(p_ - modulus_[i]);
        xk_red_.resize(k_ - 1);
        auto pack = [&](const std::vector<std::uint32_t>& d) {
            std::uint32_t r = 0;
            for (unsigned i = 0; i < k_; ++i) r += d[i] * pow_p_[i];
            return r;
        };
        xk_red_[0] = pack(cur);
        for (unsigned j = 1; j + 1 < k_; ++j) {
            // multiply by x: shift up, reduce the overflowing digit
            std::uint32_t top = cur[k_ - 1];
            for (unsigned i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0) {
                std::uint32_t red = xk_red_[0];
                for (unsigned i = 0; i < k_; ++i) {
                    cur[i] = std::uint32_t((cur[i] + std::uint64_t(top) * (red % p_)) % p_);
                    red /= std::uint32_t(p_);
                }
            }
            xk_red_[j] = pack(cur);
        }
    }

    order_prime_factors_ = distinct_prime_factors(q_ - 1);

    // discrete log tables against the first generator in index order
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (auto f : order_prime_factors_)
            if (pow_slow(cand, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0 && q_ > 2) throw std::logic_error("field: no generator found");
    if (q_ == 2) g = 1;
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = std::uint32_t(i);
        cur = mul_slow(cur, g);
    }

    if (k_ > 1) {
        zech_.assign(q_ - 1, kZechZero);
        for (std::uint64_t t = 0; t + 1 < q_; ++t) {
            std::uint32_t s = add_ext(1, exp_[t]);
            if (s != 0) zech_[t] = log_[s];
        }
    }
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (a == 1) return 1;
    std::uint64_t r = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

std::uint64_t Field::element_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("field: multiplicative order of zero");
    std::uint64_t n = q_ - 1;
    std::uint64_t l = log_[a];
    // ord(g^l) = n / gcd(n, l)
    std::uint64_t x = n, y = l;
    while (y) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    return n / x;
}

bool Field::less(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return a < b;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= std::uint32_t(p_);
        b /= std::uint32_t(p_);
    }
    return false;
}

std::uint64_t Field::rank_of(std::uint32_t a) const {
    if (k_ == 1) return a;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        r = r * p_ + (a % p_);
        a /= std::uint32_t(p_);
    }
    return r;
}

std::uint32_t Field::element_at_rank(std::uint64_t r) const {
    if (k_ == 1) return std::uint32_t(r);
    std::uint32_t idx = 0;
    for (unsigned i = 0; i < k_; ++i) {
        idx += std::uint32_t(r % p_) * pow_p_[k_ - 1 - i];
        r /= p_;
    }
    return idx;
}

std::vector<std::uint32_t> Field::coeffs_of(std::uint32_t a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= std::uint32_t(p_);
    }
    return c;
}

std::uint32_t Field::index_of(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != k_) throw std::invalid_argument("field: coefficient sequence has wrong length");
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        if (coeffs[i] >= p_) throw std::invalid_argument("field: coefficient not reduced mod p");
        r += coeffs[i] * pow_p_[i];
    }
    return r;
}

std::uint32_t Field::from_int(std::int64_t n) const {
    std::int64_t m = n % std::int64_t(p_);
    if (m < 0) m += std::int64_t(p_);
    return std::uint32_t(m);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::element(std::uint32_t index) const {
    if (index >= q_) throw std::invalid_argument("field: element index out of range");
    return FieldElement(*this, index);
}

FieldElement FieldElement::bin(const FieldElement& o,
                               std::uint32_t (Field::*op)(std::uint32_t, std::uint32_t) const) const {
    if (f_ == nullptr || o.f_ == nullptr) throw std::invalid_argument("field element: unset owner");
    if (f_ != o.f_ && !f_->same(*o.f_)) throw std::invalid_argument("field element: operands from different fields");
    return FieldElement(*f_, (f_->*op)(v_, o.v_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (f_ == nullptr || o.f_ == nullptr) return f_ == o.f_;
    return (f_ == o.f_ || f_->same(*o.f_)) && v_ == o.v_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same(b.field())) throw std::invalid_argument("canonical_less: different fields");
    return a.field().less(a.index(), b.index());
}

FieldElement primitive_root_of_unity(const Field& f, std::uint64_t m) {
    if (m == 0 || (f.q() - 1) % m != 0)
        throw std::invalid_argument("primitive_root_of_unity: " + std::to_string(m) +
                                    " does not divide q - 1 = " + std::to_string(f.q() - 1));
    if (m == 1) return f.one();
    for (std::uint64_t r = 0; r < f.q(); ++r) {
        std::uint32_t a = f.element_at_rank(r);
        if (a != 0 && f.element_order(a) == m) return FieldElement(f, a);
    }
    throw std::logic_error("primitive_root_of_unity: not found");  // unreachable when m | q-1
}

FieldElement sqrt_minus_one(const Field& f) {
    if ((f.q() - 1) % 4 != 0)
        throw std::invalid_argument("sqrt_minus_one: q = " + std::to_string(f.q()) + " is not 1 mod 4");
    std::uint32_t minus_one = f.neg(1);
    for (std::uint64_t r = 0; r < f.q(); ++r) {
        std::uint32_t a = f.element_at_rank(r);
        if (f.mul(a, a) == minus_one) return FieldElement(f, a);
    }
    throw std::logic_error("sqrt_minus_one: not found");
}

bool try_sqrt(const Field& f, const FieldElement& a, FieldElement& out) {
    for (std::uint64_t r = 0; r < f.q(); ++r) {
        std::uint32_t s = f.element_at_rank(r);
        if (f.mul(s, s) == a.index()) {
            out = FieldElement(f, s);
            return true;
        }
    }
    return false;
}

}  // namespace p1codes
