/*
* Copyright 2026 The rqcodes authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef RQCODES_GF_HPP
#define RQCODES_GF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rqcodes {

/// Library-wide exception carrying a stable machine-parsable error code
/// (e.g. "division_by_zero") next to the human-readable message.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& msg) : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) { throw Error(code, msg); }

namespace detail {

// Dense polynomials over Z_p on digit vectors (ascending degree, no convention
// on trailing zeros). Only used while a FieldSpec builds its tables.

inline std::vector<uint32_t>& fppoly_trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<uint32_t> fppoly_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    return fppoly_trim(c);
}

// remainder of a by monic b
inline std::vector<uint32_t> fppoly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    fppoly_trim(a);
    const size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (size_t j = 0; j <= db; ++j) {
                uint64_t sub = static_cast<uint64_t>(lead) * b[j] % p;
                a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        fppoly_trim(a);
    }
    return a;
}

inline bool fppoly_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    const size_t r = f.size() - 1;
    if (r == 1) return true;
    // trial division by every monic polynomial of degree 1..r/2
    for (size_t d = 1; 2 * d <= r; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (fppoly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

class FieldElement;
class FieldAutomorphism;

/// Immutable description of F_{p^r}: canonical modulus, a fixed generator
/// beta of the multiplicative group, and exp/log tables for O(1) arithmetic.
///
/// Element encodings used throughout:
///  - "packed" index: sum c_i p^i where the c_i are the coordinates in the
///    power basis 1, t, ..., t^{r-1} of the modulus root t (bijective with
///    0..q-1, and the canonical element ordering used to pick beta);
///  - "value code": 0 for the zero element, 1 + dlog otherwise.
class FieldSpec {
   public:
    uint32_t characteristic() const noexcept { return p_; }
    uint32_t degree() const noexcept { return r_; }
    uint32_t size() const noexcept { return q_; }

    /// Canonical monic irreducible modulus, ascending coefficients, length r+1.
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    uint32_t beta_packed() const noexcept { return exp_[1 % (q_ - 1)]; }

    uint32_t packed_of_dlog(uint32_t e) const noexcept { return exp_[e % (q_ - 1)]; }
    uint32_t dlog_of_packed(uint32_t packed) const noexcept { return log_[packed]; }

    // value-code arithmetic
    uint32_t vc_add(uint32_t a, uint32_t b) const {
        if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
        return vc_add_slow(a, b);
    }
    uint32_t vc_neg(uint32_t a) const { return vc_mul(a, minus_one_vc_); }
    uint32_t vc_mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return 1 + (a - 1 + b - 1) % (q_ - 1);
    }
    uint32_t vc_inv(uint32_t a) const {
        if (a == 0) fail("division_by_zero", "multiplicative inverse of zero");
        return 1 + (q_ - 1 - (a - 1)) % (q_ - 1);
    }
    uint32_t vc_from_packed(uint32_t packed) const { return packed == 0 ? 0 : 1 + log_[packed]; }
    uint32_t vc_to_packed(uint32_t vc) const { return vc == 0 ? 0 : exp_[vc - 1]; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement beta() const;
    FieldElement from_packed(uint32_t packed) const;
    FieldElement from_int(uint64_t n) const;  // n mod p embedded via the prime subfield

    /// alpha_i of the canonical enumeration: alpha_0 = 0, alpha_i = beta^i.
    FieldElement element_at(uint32_t i) const;

    bool operator==(const FieldSpec& other) const noexcept { return this == &other; }

   private:
    FieldSpec(uint32_t p, uint32_t r);
    friend const FieldSpec& make_field(uint32_t p, uint32_t r, uint64_t size_bound);

    uint32_t vc_add_slow(uint32_t a, uint32_t b) const {
        uint32_t pa = vc_to_packed(a), pb = vc_to_packed(b), out = 0, mult = 1;
        for (uint32_t i = 0; i < r_; ++i) {
            out += (pa % p_ + pb % p_) % p_ * mult;
            pa /= p_;
            pb /= p_;
            mult *= p_;
        }
        return vc_from_packed(out);
    }

    uint32_t p_, r_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;  // dlog -> packed, size q-1
    std::vector<uint32_t> log_;  // packed -> dlog, size q (entry 0 unused)
    std::vector<uint32_t> add_;  // value-code addition table (only when q <= 256)
    uint32_t minus_one_vc_;
};

/// Returns the unique shared FieldSpec for F_{p^r}. Deterministic: the same
/// (p, r) always yields the same modulus (lexicographically smallest monic
/// irreducible, coefficient tuples compared constant-first) and the same
/// beta (smallest primitive element in packed order).
const FieldSpec& make_field(uint32_t p, uint32_t r, uint64_t size_bound = uint64_t(1) << 16);

/// An element of F_q; value semantics, canonical representation.
class FieldElement {
   public:
    FieldElement() noexcept : spec_(nullptr), vc_(0) {}

    static FieldElement zero(const FieldSpec& F) { return FieldElement(&F, 0); }
    static FieldElement one(const FieldSpec& F) { return FieldElement(&F, 1); }

    const FieldSpec& spec() const {
        if (!spec_) fail("unattached_element", "operation on default-constructed field element");
        return *spec_;
    }
    bool attached() const noexcept { return spec_ != nullptr; }

    bool is_zero() const noexcept { return vc_ == 0; }
    bool is_one() const noexcept { return vc_ == 1; }

    /// discrete logarithm base beta; nullopt for the zero element
    std::optional<uint32_t> dlog() const noexcept {
        if (vc_ == 0) return std::nullopt;
        return vc_ - 1;
    }
    uint32_t packed() const { return spec().vc_to_packed(vc_); }
    uint32_t value_code() const noexcept { return vc_; }

    /// position in the canonical enumeration (alpha_0, ..., alpha_{q-1})
    uint32_t enum_index() const {
        if (vc_ == 0) return 0;
        const uint32_t d = vc_ - 1;
        return d == 0 ? spec().size() - 1 : d;
    }

    FieldElement operator+(const FieldElement& o) const {
        const FieldSpec& F = same_spec(o);
        return FieldElement(&F, F.vc_add(vc_, o.vc_));
    }
    FieldElement operator-() const {
        const FieldSpec& F = spec();
        return FieldElement(&F, F.vc_neg(vc_));
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
    FieldElement operator*(const FieldElement& o) const {
        const FieldSpec& F = same_spec(o);
        return FieldElement(&F, F.vc_mul(vc_, o.vc_));
    }
    FieldElement operator/(const FieldElement& o) const {
        const FieldSpec& F = same_spec(o);
        return FieldElement(&F, F.vc_mul(vc_, F.vc_inv(o.vc_)));
    }
    FieldElement inverse() const {
        const FieldSpec& F = spec();
        return FieldElement(&F, F.vc_inv(vc_));
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement pow(int64_t e) const {
        const FieldSpec& F = spec();
        if (vc_ == 0) {
            if (e == 0) return one(F);
            if (e < 0) fail("division_by_zero", "negative power of zero");
            return zero(F);
        }
        const int64_t m = F.size() - 1;
        int64_t d = (static_cast<int64_t>(vc_ - 1) * (e % m)) % m;
        if (d < 0) d += m;
        return FieldElement(&F, 1 + static_cast<uint32_t>(d));
    }

    bool operator==(const FieldElement& o) const noexcept { return spec_ == o.spec_ && vc_ == o.vc_; }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }

    /// total order by packed representation (the canonical element ordering)
    bool canonical_less(const FieldElement& o) const { return packed() < o.packed(); }

   private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* F, uint32_t vc) noexcept : spec_(F), vc_(vc) {}

    const FieldSpec& same_spec(const FieldElement& o) const {
        const FieldSpec& F = spec();
        if (&F != &o.spec()) fail("mismatched_specs", "field elements belong to different fields");
        return F;
    }

    const FieldSpec* spec_;
    uint32_t vc_;
};

inline FieldElement FieldSpec::zero() const { return FieldElement(this, 0); }
inline FieldElement FieldSpec::one() const { return FieldElement(this, 1); }
inline FieldElement FieldSpec::beta() const { return FieldElement(this, vc_from_packed(beta_packed())); }
inline FieldElement FieldSpec::from_packed(uint32_t packed) const {
    if (packed >= q_) fail("out_of_range", "packed index exceeds field size");
    return FieldElement(this, vc_from_packed(packed));
}
inline FieldElement FieldSpec::from_int(uint64_t n) const { return FieldElement(this, vc_from_packed(n % p_)); }
inline FieldElement FieldSpec::element_at(uint32_t i) const {
    if (i >= q_) fail("out_of_range", "enumeration index exceeds field size");
    if (i == 0) return zero();
    return FieldElement(this, 1 + i % (q_ - 1));
}

/// (alpha_0, ..., alpha_{q-1}) with alpha_0 = 0 and alpha_i = beta^i for i >= 1.
inline std::vector<FieldElement> enumerate_elements(const FieldSpec& F) {
    std::vector<FieldElement> out;
    out.reserve(F.size());
    for (uint32_t i = 0; i < F.size(); ++i) out.push_back(F.element_at(i));
    return out;
}

/// The Frobenius power a -> a^(p^s); the s in 0..r-1 exhaust Aut(F_q).
class FieldAutomorphism {
   public:
    FieldAutomorphism(const FieldSpec& F, uint32_t s) : spec_(&F), s_(s % F.degree()) {}

    const FieldSpec& field() const noexcept { return *spec_; }
    uint32_t exponent() const noexcept { return s_; }

    uint32_t order() const noexcept {
        const uint32_t r = spec_->degree();
        return r / gcd_u32(r, s_ == 0 ? r : s_);
    }

    bool is_identity() const noexcept { return s_ == 0; }

    FieldElement operator()(const FieldElement& a) const { return apply_pow(1, a); }

    /// theta^k(a), k may be negative (taken modulo the order of theta).
    FieldElement apply_pow(int64_t k, const FieldElement& a) const {
        if (&a.spec() != spec_) fail("mismatched_specs", "automorphism applied to foreign element");
        const uint32_t r = spec_->degree();
        int64_t e = (static_cast<int64_t>(s_) * (k % r)) % r;
        if (e < 0) e += r;
        uint64_t m = 1;
        for (int64_t i = 0; i < e; ++i) m = m * spec_->characteristic() % (spec_->size() - 1);
        return a.pow(static_cast<int64_t>(m));
    }

    FieldAutomorphism inverse() const { return FieldAutomorphism(*spec_, (spec_->degree() - s_) % spec_->degree()); }

    bool operator==(const FieldAutomorphism& o) const noexcept { return spec_ == o.spec_ && s_ == o.s_; }
    bool operator!=(const FieldAutomorphism& o) const noexcept { return !(*this == o); }

   private:
    static uint32_t gcd_u32(uint32_t a, uint32_t b) noexcept {
        while (b) {
            uint32_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    const FieldSpec* spec_;
    uint32_t s_;
};

inline FieldAutomorphism compose(const FieldAutomorphism& f, const FieldAutomorphism& g) {
    if (&f.field() != &g.field()) fail("mismatched_specs", "composing automorphisms of different fields");
    return FieldAutomorphism(f.field(), f.exponent() + g.exponent());
}

inline std::vector<FieldAutomorphism> enumerate_field_automorphisms(const FieldSpec& F) {
    std::vector<FieldAutomorphism> out;
    for (uint32_t s = 0; s < F.degree(); ++s) out.emplace_back(F, s);
    return out;
}

inline FieldSpec::FieldSpec(uint32_t p, uint32_t r) : p_(p), r_(r) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) q *= p;
    q_ = static_cast<uint32_t>(q);

    // canonical modulus: smallest (c_0, ..., c_{r-1}) in lexicographic order
    // such that x^r + c_{r-1} x^{r-1} + ... + c_0 is irreducible over F_p
    modulus_.assign(r + 1, 0);
    modulus_[r] = 1;
    if (r > 1) {
        uint64_t total = 1;
        for (uint32_t i = 0; i < r; ++i) total *= p;
        bool found = false;
        for (uint64_t idx = 0; idx < total && !found; ++idx) {
            uint64_t u = idx;
            for (uint32_t i = 0; i < r; ++i) {  // c_0 is the most significant digit of idx
                modulus_[r - 1 - i] = static_cast<uint32_t>(u % p);
                u /= p;
            }
            modulus_[r] = 1;
            found = detail::fppoly_is_irreducible(modulus_, p);
        }
        if (!found) fail("internal", "no irreducible modulus found");  // cannot happen
    }

    auto unpack = [&](uint32_t x) {
        std::vector<uint32_t> d(r_, 0);
        for (uint32_t i = 0; i < r_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    };
    auto pack = [&](const std::vector<uint32_t>& d) {
        uint32_t x = 0, mult = 1;
        for (uint32_t i = 0; i < r_; ++i) {
            x += (i < d.size() ? d[i] : 0) * mult;
            mult *= p_;
        }
        return x;
    };
    auto pmul = [&](uint32_t a, uint32_t b) {
        auto prod = detail::fppoly_mul(unpack(a), unpack(b), p_);
        return pack(detail::fppoly_mod(std::move(prod), modulus_, p_));
    };
    auto ppow = [&](uint32_t a, uint64_t e) {
        uint32_t res = 1, base = a;
        while (e) {
            if (e & 1) res = pmul(res, base);
            base = pmul(base, base);
            e >>= 1;
        }
        return res;
    };

    // beta: smallest packed nonzero element of multiplicative order q-1
    uint32_t beta = 1;
    if (q_ > 2) {
        std::vector<uint32_t> prime_factors;
        {
            uint32_t m = q_ - 1;
            for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= m; ++d) {
                if (m % d == 0) {
                    prime_factors.push_back(d);
                    while (m % d == 0) m /= d;
                }
            }
            if (m > 1) prime_factors.push_back(m);
        }
        for (uint32_t cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (uint32_t ell : prime_factors) {
                if (ppow(cand, (q_ - 1) / ell) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                beta = cand;
                break;
            }
        }
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint32_t acc = 1;
    for (uint32_t e = 0; e < q_ - 1; ++e) {
        exp_[e] = acc;
        log_[acc] = e;
        acc = pmul(acc, beta);
    }
    if (acc != 1) fail("internal", "generator order mismatch");  // cannot happen

    minus_one_vc_ = vc_from_packed(p_ == 2 ? 1 : pack({p_ - 1}));

    if (q_ <= 256) {
        add_.assign(static_cast<size_t>(q_) * q_, 0);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) add_[static_cast<size_t>(a) * q_ + b] = vc_add_slow(a, b);
    }
}

inline const FieldSpec& make_field(uint32_t p, uint32_t r, uint64_t size_bound) {
    if (!detail::is_prime_u32(p)) fail("nonprime_characteristic", "p = " + std::to_string(p) + " is not prime");
    if (r < 1) fail("out_of_range", "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > size_bound) fail("size_bound_exceeded", "p^r exceeds the configured bound");
    }

    static std::mutex mtx;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = registry[{p, r}];
    if (!slot) slot.reset(new FieldSpec(p, r));
    return *slot;
}

// ---------------------------------------------------------------------------
// text syntax: "0", "1", "a^k" (a denotes beta); prime fields use integers

inline std::string to_string(const FieldElement& x) {
    const FieldSpec& F = x.spec();
    if (F.degree() == 1) return std::to_string(x.packed());
    if (x.is_zero()) return "0";
    const uint32_t d = *x.dlog();
    if (d == 0) return "1";
    if (d == 1) return "a";
    return "a^" + std::to_string(d);
}

namespace detail {
inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}
}  // namespace detail

inline FieldElement parse_field_element(const FieldSpec& F, std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.empty()) fail("parse_error", "empty field element");
    if (s == "0") return F.zero();
    if (s == "1") return F.one();
    if (s[0] == 'a') {
        if (s.size() == 1) return F.beta();
        if (s.size() >= 3 && s[1] == '^') {
            uint64_t k = 0;
            for (size_t i = 2; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') fail("parse_error", "bad exponent in '" + std::string(text) + "'");
                k = k * 10 + (s[i] - '0');
            }
            return F.beta().pow(static_cast<int64_t>(k));
        }
        fail("parse_error", "bad field element '" + std::string(text) + "'");
    }
    bool digits = true;
    for (char c : s)
        if (c < '0' || c > '9') digits = false;
    if (digits) {
        if (F.degree() != 1 && s.size() > 1)
            fail("parse_error", "integer literals beyond one digit require a prime field");
        uint64_t n = 0;
        for (char c : s) n = n * 10 + (c - '0');
        if (F.degree() == 1) return F.from_int(n);
        fail("parse_error", "'" + std::string(text) + "' is not an element of this field");
    }
    fail("parse_error", "cannot parse field element '" + std::string(text) + "'");
}

}  // namespace rqcodes

#endif  // RQCODES_GF_HPP
