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

#ifndef RQCODES_RING_RQ_HPP
#define RQCODES_RING_RQ_HPP

#include <algorithm>
#include <numeric>

#include "rqcodes/gf.hpp"

namespace rqcodes {

/// An element of R_q = F_q[v]/(v^q - v), stored in CRT coordinates:
/// coordinate i is the evaluation of the v-polynomial at alpha_i (the
/// canonical enumeration of F_q). Addition is componentwise, multiplication
/// is the Schur product; the idempotent eta_i is the i-th unit vector.
class RingElement {
   public:
    RingElement() = default;

    static RingElement zero(const FieldSpec& F) { return RingElement(F, std::vector<FieldElement>(F.size(), F.zero())); }
    static RingElement one(const FieldSpec& F) { return RingElement(F, std::vector<FieldElement>(F.size(), F.one())); }

    /// embeds c in F_q as the constant (c, c, ..., c)
    static RingElement scalar(const FieldElement& c) {
        return RingElement(c.spec(), std::vector<FieldElement>(c.spec().size(), c));
    }

    static RingElement from_coords(const FieldSpec& F, std::vector<FieldElement> coords) {
        if (coords.size() != F.size()) fail("wrong_length", "CRT coordinate vector must have length q");
        for (const auto& c : coords)
            if (&c.spec() != &F) fail("mismatched_specs", "CRT coordinate from a foreign field");
        return RingElement(F, std::move(coords));
    }

    const FieldSpec& spec() const {
        if (!spec_) fail("unattached_element", "operation on default-constructed ring element");
        return *spec_;
    }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& coord(uint32_t i) const {
        if (i >= coords_.size()) fail("index_out_of_range", "CRT coordinate index");
        return coords_[i];
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const FieldElement& c) { return c.is_zero(); });
    }
    bool is_one() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const FieldElement& c) { return c.is_one(); });
    }
    bool is_unit() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const FieldElement& c) { return !c.is_zero(); });
    }
    bool is_idempotent() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const FieldElement& c) { return c.is_zero() || c.is_one(); });
    }

    /// true when all CRT coordinates agree (the image of F_q inside R_q)
    bool is_scalar() const {
        return std::all_of(coords_.begin(), coords_.end(), [&](const FieldElement& c) { return c == coords_[0]; });
    }

    RingElement operator+(const RingElement& o) const { return zip(o, [](FieldElement x, FieldElement y) { return x + y; }); }
    RingElement operator-(const RingElement& o) const { return zip(o, [](FieldElement x, FieldElement y) { return x - y; }); }
    RingElement operator*(const RingElement& o) const { return zip(o, [](FieldElement x, FieldElement y) { return x * y; }); }
    RingElement operator-() const {
        auto c = coords_;
        for (auto& x : c) x = -x;
        return RingElement(spec(), std::move(c));
    }
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    RingElement inverse() const {
        if (!is_unit()) fail("not_a_unit", "inverse of a non-unit ring element");
        auto c = coords_;
        for (auto& x : c) x = x.inverse();
        return RingElement(spec(), std::move(c));
    }

    bool operator==(const RingElement& o) const { return spec_ == o.spec_ && coords_ == o.coords_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

   private:
    RingElement(const FieldSpec& F, std::vector<FieldElement> coords) : spec_(&F), coords_(std::move(coords)) {}

    template <class Op>
    RingElement zip(const RingElement& o, Op op) const {
        const FieldSpec& F = spec();
        if (&F != &o.spec()) fail("mismatched_specs", "ring elements belong to different rings");
        std::vector<FieldElement> c(F.size());
        for (uint32_t i = 0; i < F.size(); ++i) c[i] = op(coords_[i], o.coords_[i]);
        return RingElement(F, std::move(c));
    }

    const FieldSpec* spec_ = nullptr;
    std::vector<FieldElement> coords_;
};

/// eta_i: the primitive idempotent supported at evaluation point alpha_i.
inline RingElement idempotent(const FieldSpec& F, uint32_t i) {
    if (i >= F.size()) fail("index_out_of_range", "idempotent index must be < q");
    std::vector<FieldElement> c(F.size(), F.zero());
    c[i] = F.one();
    return RingElement::from_coords(F, std::move(c));
}

/// r_0 + r_1 v + ... + r_{q-1} v^{q-1} -> CRT coordinates by evaluation.
inline RingElement from_poly_basis(const FieldSpec& F, const std::vector<FieldElement>& coeffs) {
    if (coeffs.size() != F.size()) fail("wrong_length", "v-basis coefficient vector must have length q");
    std::vector<FieldElement> c(F.size());
    for (uint32_t i = 0; i < F.size(); ++i) {
        FieldElement point = F.element_at(i);
        FieldElement acc = F.zero();
        for (size_t j = coeffs.size(); j-- > 0;) acc = acc * point + coeffs[j];
        c[i] = acc;
    }
    return RingElement::from_coords(F, std::move(c));
}

/// Lagrange interpolation through the q points (alpha_i, coord_i); the unique
/// polynomial of degree < q, inverse of from_poly_basis.
inline std::vector<FieldElement> to_poly_basis(const RingElement& a) {
    const FieldSpec& F = a.spec();
    const uint32_t q = F.size();
    // master = prod_j (v - alpha_j)  (equals v^q - v, but computed locally)
    std::vector<FieldElement> master{F.one()};
    for (uint32_t j = 0; j < q; ++j) {
        FieldElement aj = F.element_at(j);
        std::vector<FieldElement> next(master.size() + 1, F.zero());
        for (size_t k = 0; k < master.size(); ++k) {
            next[k + 1] += master[k];
            next[k] -= aj * master[k];
        }
        master = std::move(next);
    }
    std::vector<FieldElement> out(q, F.zero());
    std::vector<FieldElement> quotient(q, F.zero());
    for (uint32_t i = 0; i < q; ++i) {
        if (a.coord(i).is_zero()) continue;
        FieldElement ai = F.element_at(i);
        // synthetic division: quotient = master / (v - alpha_i), degree q-1
        FieldElement carry = F.zero();
        for (size_t k = q; k-- > 0;) {
            carry = master[k + 1] + carry * ai;
            quotient[k] = carry;
        }
        // denominator = quotient evaluated at alpha_i
        FieldElement denom = F.zero();
        for (size_t k = q; k-- > 0;) denom = denom * ai + quotient[k];
        FieldElement scale = a.coord(i) / denom;
        for (uint32_t k = 0; k < q; ++k) out[k] += scale * quotient[k];
    }
    return out;
}

/// Supp(a) = { i : coordinate i nonzero }; the principal ideal <a> equals I_A.
struct IdealDescriptor {
    std::vector<uint32_t> support;
};

inline IdealDescriptor support(const RingElement& a) {
    IdealDescriptor d;
    for (uint32_t i = 0; i < a.spec().size(); ++i)
        if (!a.coord(i).is_zero()) d.support.push_back(i);
    return d;
}

inline RingElement ideal_generator(const FieldSpec& F, const IdealDescriptor& d) {
    RingElement g = RingElement::zero(F);
    for (uint32_t i : d.support) g += idempotent(F, i);
    return g;
}

/// |<a>| = q^{|Supp(a)|}
inline uint64_t ideal_size(const FieldSpec& F, const IdealDescriptor& d) {
    uint64_t s = 1;
    for (size_t i = 0; i < d.support.size(); ++i) {
        if (s > (uint64_t(1) << 62) / F.size()) fail("overflow", "ideal size exceeds 64 bits");
        s *= F.size();
    }
    return s;
}

/// Theta_{theta,sigma}: sum a_i eta_i -> sum theta(a_i) eta_{sigma(i)}.
class RingAutomorphism {
   public:
    RingAutomorphism(FieldAutomorphism theta, std::vector<uint32_t> sigma)
        : theta_(std::move(theta)), sigma_(std::move(sigma)) {
        const uint32_t q = theta_.field().size();
        if (sigma_.size() != q) fail("wrong_length", "permutation must act on q indices");
        std::vector<bool> seen(q, false);
        for (uint32_t v : sigma_) {
            if (v >= q || seen[v]) fail("not_a_permutation", "sigma is not a bijection");
            seen[v] = true;
        }
    }

    static RingAutomorphism identity(const FieldSpec& F) {
        std::vector<uint32_t> id(F.size());
        std::iota(id.begin(), id.end(), 0);
        return RingAutomorphism(FieldAutomorphism(F, 0), std::move(id));
    }

    /// coordinatewise theta, sigma = id (the Theta_theta of the skew layer)
    static RingAutomorphism coordinatewise(const FieldAutomorphism& theta) {
        std::vector<uint32_t> id(theta.field().size());
        std::iota(id.begin(), id.end(), 0);
        return RingAutomorphism(theta, std::move(id));
    }

    const FieldSpec& field() const noexcept { return theta_.field(); }
    const FieldAutomorphism& field_automorphism() const noexcept { return theta_; }
    const std::vector<uint32_t>& sigma() const noexcept { return sigma_; }

    bool sigma_is_identity() const {
        for (uint32_t i = 0; i < sigma_.size(); ++i)
            if (sigma_[i] != i) return false;
        return true;
    }
    bool is_identity() const { return theta_.is_identity() && sigma_is_identity(); }

    RingElement operator()(const RingElement& a) const { return apply_pow(1, a); }

    /// Theta^k(a); sigma is composed with itself k times.
    RingElement apply_pow(int64_t k, const RingElement& a) const {
        const FieldSpec& F = field();
        if (&a.spec() != &F) fail("mismatched_specs", "automorphism applied to foreign ring element");
        std::vector<FieldElement> out(F.size());
        if (sigma_is_identity()) {
            for (uint32_t i = 0; i < F.size(); ++i) out[i] = theta_.apply_pow(k, a.coord(i));
        } else {
            std::vector<uint32_t> sk = sigma_pow(k);
            for (uint32_t i = 0; i < F.size(); ++i) out[sk[i]] = theta_.apply_pow(k, a.coord(i));
        }
        return RingElement::from_coords(F, std::move(out));
    }

    RingAutomorphism inverse() const {
        std::vector<uint32_t> inv(sigma_.size());
        for (uint32_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i]] = i;
        return RingAutomorphism(theta_.inverse(), std::move(inv));
    }

    bool operator==(const RingAutomorphism& o) const {
        return theta_ == o.theta_ && sigma_ == o.sigma_;
    }
    bool operator!=(const RingAutomorphism& o) const { return !(*this == o); }

   private:
    std::vector<uint32_t> sigma_pow(int64_t k) const {
        const uint32_t q = static_cast<uint32_t>(sigma_.size());
        std::vector<uint32_t> out(q);
        std::iota(out.begin(), out.end(), 0);
        if (k >= 0) {
            for (int64_t t = 0; t < k; ++t) {
                std::vector<uint32_t> next(q);
                for (uint32_t i = 0; i < q; ++i) next[i] = sigma_[out[i]];
                out = std::move(next);
            }
        } else {
            std::vector<uint32_t> inv(q);
            for (uint32_t i = 0; i < q; ++i) inv[sigma_[i]] = i;
            for (int64_t t = 0; t < -k; ++t) {
                std::vector<uint32_t> next(q);
                for (uint32_t i = 0; i < q; ++i) next[i] = inv[out[i]];
                out = std::move(next);
            }
        }
        return out;
    }

    FieldAutomorphism theta_;
    std::vector<uint32_t> sigma_;
};

/// Theta_{theta',sigma'} o Theta_{theta,sigma} = Theta_{theta' o theta, sigma' o sigma}
/// (right-most applied first).
inline RingAutomorphism compose(const RingAutomorphism& f, const RingAutomorphism& g) {
    if (&f.field() != &g.field()) fail("mismatched_specs", "composing automorphisms of different rings");
    const uint32_t q = f.field().size();
    std::vector<uint32_t> s(q);
    for (uint32_t i = 0; i < q; ++i) s[i] = f.sigma()[g.sigma()[i]];
    return RingAutomorphism(compose(f.field_automorphism(), g.field_automorphism()), std::move(s));
}

/// All r * q! automorphisms of R_q, ordered by (theta exponent, sigma lex).
inline std::vector<RingAutomorphism> enumerate_automorphisms(const FieldSpec& F, uint32_t guard_q = 6) {
    if (F.size() > guard_q) fail("guard_exceeded", "automorphism enumeration guarded at q <= " + std::to_string(guard_q));
    std::vector<RingAutomorphism> out;
    for (uint32_t s = 0; s < F.degree(); ++s) {
        std::vector<uint32_t> perm(F.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            out.emplace_back(FieldAutomorphism(F, s), perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

/// All q^q ring elements in lexicographic CRT-coordinate order (guarded).
inline std::vector<RingElement> enumerate_ring_elements(const FieldSpec& F, uint64_t guard = uint64_t(1) << 20) {
    const uint32_t q = F.size();
    uint64_t total = 1;
    for (uint32_t i = 0; i < q; ++i) {
        total *= q;
        if (total > guard) fail("guard_exceeded", "ring enumeration guarded");
    }
    std::vector<RingElement> out;
    out.reserve(total);
    std::vector<uint32_t> idx(q, 0);
    for (uint64_t n = 0; n < total; ++n) {
        std::vector<FieldElement> c(q);
        for (uint32_t i = 0; i < q; ++i) c[i] = F.element_at(idx[i]);
        out.push_back(RingElement::from_coords(F, std::move(c)));
        for (uint32_t i = q; i-- > 0;) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// text syntax: CRT form "[1,0,a,1]" (canonical machine format) and v-basis
// form "1+a*v+v^3"

inline std::string to_crt_string(const RingElement& a) {
    std::string s = "[";
    for (uint32_t i = 0; i < a.spec().size(); ++i) {
        if (i) s += ',';
        s += to_string(a.coord(i));
    }
    s += ']';
    return s;
}

inline std::string to_vbasis_string(const RingElement& a) {
    std::vector<FieldElement> c = to_poly_basis(a);
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!s.empty()) s += '+';
        if (k == 0) {
            s += to_string(c[k]);
        } else {
            if (!c[k].is_one()) {
                s += to_string(c[k]);
                s += '*';
            }
            s += 'v';
            if (k > 1) s += '^' + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

namespace detail {

/// Splits a polynomial expression into (sign, term) pairs at top-level +/-.
inline std::vector<std::pair<int, std::string>> split_poly_terms(std::string_view text) {
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    std::string cur;
    auto flush = [&](int next_sign) {
        std::string t(strip(cur));
        if (!t.empty()) terms.emplace_back(sign, t);
        cur.clear();
        sign = next_sign;
    };
    for (char ch : text) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (cur.empty() && ch == '-' && terms.empty()) {  // leading minus
                sign = -sign;
                continue;
            }
            flush(ch == '-' ? -1 : 1);
            continue;
        }
        cur += ch;
    }
    flush(1);
    if (depth != 0) fail("parse_error", "unbalanced brackets in '" + std::string(text) + "'");
    if (terms.empty()) fail("parse_error", "empty polynomial expression");
    return terms;
}

/// Splits one term "coef*var^k" around the variable; returns (coef, k).
/// coef is empty when the term is a bare power of the variable.
inline std::pair<std::string, size_t> split_term(const std::string& term, char var) {
    int depth = 0;
    size_t vpos = std::string::npos;
    for (size_t i = 0; i < term.size(); ++i) {
        char ch = term[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (depth == 0 && ch == var) {
            vpos = i;
            break;
        }
    }
    if (vpos == std::string::npos) return {term, 0};
    std::string coef(strip(std::string_view(term).substr(0, vpos)));
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    coef = std::string(strip(coef));
    std::string_view rest = std::string_view(term).substr(vpos + 1);
    rest = strip(rest);
    size_t k = 1;
    if (!rest.empty()) {
        if (rest[0] != '^') fail("parse_error", "bad term '" + term + "'");
        rest.remove_prefix(1);
        rest = strip(rest);
        if (rest.empty()) fail("parse_error", "missing exponent in '" + term + "'");
        k = 0;
        for (char c : rest) {
            if (c < '0' || c > '9') fail("parse_error", "bad exponent in '" + term + "'");
            k = k * 10 + static_cast<size_t>(c - '0');
        }
    }
    return {coef, k};
}

}  // namespace detail

inline RingElement parse_ring_element(const FieldSpec& F, std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.empty()) fail("parse_error", "empty ring element");
    // strip one level of enclosing parentheses when they span the whole text
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool spans = true;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                spans = false;
                break;
            }
        }
        if (!spans) break;
        s.remove_prefix(1);
        s.remove_suffix(1);
        s = detail::strip(s);
    }
    if (s.empty()) fail("parse_error", "empty ring element");
    if (s.front() == '[') {
        if (s.back() != ']') fail("parse_error", "unterminated CRT form");
        s.remove_prefix(1);
        s.remove_suffix(1);
        std::vector<FieldElement> coords;
        size_t start = 0;
        std::string body(s);
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                coords.push_back(parse_field_element(F, std::string_view(body).substr(start, i - start)));
                start = i + 1;
            }
        }
        return RingElement::from_coords(F, std::move(coords));
    }
    // v-basis polynomial
    std::vector<FieldElement> coeffs(F.size(), F.zero());
    for (const auto& [sign, term] : detail::split_poly_terms(s)) {
        auto [coef_text, k] = detail::split_term(term, 'v');
        if (k >= F.size()) fail("parse_error", "v-degree must be < q");
        FieldElement c = coef_text.empty() ? F.one() : parse_field_element(F, coef_text);
        if (sign < 0) c = -c;
        coeffs[k] += c;
    }
    return from_poly_basis(F, coeffs);
}

}  // namespace rqcodes

#endif  // RQCODES_RING_RQ_HPP
