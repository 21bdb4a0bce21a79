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

#ifndef RQCODES_SKEW_POLY_HPP
#define RQCODES_SKEW_POLY_HPP

#include <optional>
#include <utility>

#include "rqcodes/ring_rq.hpp"

namespace rqcodes {

namespace detail {

inline bool scalar_is_unit(const FieldElement& x) { return !x.is_zero(); }
inline bool scalar_is_unit(const RingElement& x) { return x.is_unit(); }

inline FieldElement domain_zero(const FieldAutomorphism& th) { return th.field().zero(); }
inline FieldElement domain_one(const FieldAutomorphism& th) { return th.field().one(); }
inline RingElement domain_zero(const RingAutomorphism& th) { return RingElement::zero(th.field()); }
inline RingElement domain_one(const RingAutomorphism& th) { return RingElement::one(th.field()); }

inline void check_poly_automorphism(const FieldAutomorphism&) {}
inline void check_poly_automorphism(const RingAutomorphism& th) {
    if (!th.sigma_is_identity())
        fail("sigma_not_identity", "skew polynomial arithmetic over R_q requires sigma = id");
}

}  // namespace detail

/// Skew polynomial over F_q[x;theta] or R_q[x;Theta_theta], coefficients in
/// ascending degree with no stored trailing zeros. Multiplication follows
/// x a = theta(a) x; the zero polynomial has no degree (nullopt).
template <class Scalar, class Auto>
class SkewPolynomial {
   public:
    SkewPolynomial(Auto theta, std::vector<Scalar> coeffs) : theta_(std::move(theta)), coeffs_(std::move(coeffs)) {
        detail::check_poly_automorphism(theta_);
        normalize();
    }

    static SkewPolynomial zero(const Auto& theta) { return SkewPolynomial(theta, {}); }
    static SkewPolynomial one(const Auto& theta) { return SkewPolynomial(theta, {detail::domain_one(theta)}); }
    static SkewPolynomial constant(const Auto& theta, Scalar c) { return SkewPolynomial(theta, {std::move(c)}); }
    static SkewPolynomial monomial(const Auto& theta, Scalar c, size_t k) {
        std::vector<Scalar> v(k + 1, detail::domain_zero(theta));
        v[k] = std::move(c);
        return SkewPolynomial(theta, std::move(v));
    }
    /// x^n - lambda
    static SkewPolynomial x_pow_minus(const Auto& theta, size_t n, const Scalar& lambda) {
        std::vector<Scalar> v(n + 1, detail::domain_zero(theta));
        v[0] = -lambda;
        v[n] = v[n] + detail::domain_one(theta);
        return SkewPolynomial(theta, std::move(v));
    }

    const Auto& automorphism() const noexcept { return theta_; }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    Scalar coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : detail::domain_zero(theta_); }
    Scalar leading() const {
        if (is_zero()) fail("zero_polynomial", "leading coefficient of the zero polynomial");
        return coeffs_.back();
    }
    Scalar constant_term() const { return coeff(0); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == detail::domain_one(theta_); }

    SkewPolynomial operator+(const SkewPolynomial& o) const {
        same_context(o);
        std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), detail::domain_zero(theta_));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
        return SkewPolynomial(theta_, std::move(c));
    }
    SkewPolynomial operator-() const {
        std::vector<Scalar> c = coeffs_;
        for (auto& x : c) x = -x;
        return SkewPolynomial(theta_, std::move(c));
    }
    SkewPolynomial operator-(const SkewPolynomial& o) const { return *this + (-o); }

    /// (a x^i)(b x^j) = a theta^i(b) x^{i+j}, extended bilinearly
    SkewPolynomial operator*(const SkewPolynomial& o) const {
        same_context(o);
        if (is_zero() || o.is_zero()) return zero(theta_);
        std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, detail::domain_zero(theta_));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == detail::domain_zero(theta_)) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + coeffs_[i] * theta_.apply_pow(static_cast<int64_t>(i), o.coeffs_[j]);
        }
        return SkewPolynomial(theta_, std::move(c));
    }

    /// left multiplication by a scalar: c * (sum a_j x^j) = sum (c a_j) x^j
    SkewPolynomial scaled_left(const Scalar& c) const {
        std::vector<Scalar> out = coeffs_;
        for (auto& x : out) x = c * x;
        return SkewPolynomial(theta_, std::move(out));
    }

    bool operator==(const SkewPolynomial& o) const { return theta_ == o.theta_ && coeffs_ == o.coeffs_; }
    bool operator!=(const SkewPolynomial& o) const { return !(*this == o); }

    void same_context(const SkewPolynomial& o) const {
        if (!(theta_ == o.theta_)) fail("mismatched_specs", "skew polynomials with different twisting automorphisms");
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == detail::domain_zero(theta_)) coeffs_.pop_back();
    }

    Auto theta_;
    std::vector<Scalar> coeffs_;
};

using FieldSkewPolynomial = SkewPolynomial<FieldElement, FieldAutomorphism>;
using RingSkewPolynomial = SkewPolynomial<RingElement, RingAutomorphism>;

/// f = quotient * g + remainder with deg(remainder) < deg(g).
/// Over R_q the leading coefficient of g must be a unit.
template <class S, class A>
std::pair<SkewPolynomial<S, A>, SkewPolynomial<S, A>> right_divmod(const SkewPolynomial<S, A>& f,
                                                                   const SkewPolynomial<S, A>& g) {
    f.same_context(g);
    if (g.is_zero()) fail("division_by_zero", "right division by the zero polynomial");
    if (!detail::scalar_is_unit(g.leading()))
        fail("nonunit_leading_coefficient", "right division requires a unit leading coefficient");
    const A& theta = f.automorphism();
    if (f.is_zero() || *f.degree() < *g.degree()) return {SkewPolynomial<S, A>::zero(theta), f};

    const size_t dg = *g.degree();
    const S glead_inv = g.leading().inverse();
    std::vector<S> rem = f.coefficients();
    std::vector<S> quot(rem.size() - dg, detail::domain_zero(theta));
    for (size_t m = rem.size() - dg; m-- > 0;) {
        S c = rem[m + dg] * theta.apply_pow(static_cast<int64_t>(m), glead_inv);
        quot[m] = c;
        if (c == detail::domain_zero(theta)) continue;
        for (size_t j = 0; j <= dg; ++j)
            rem[m + j] = rem[m + j] - c * theta.apply_pow(static_cast<int64_t>(m), g.coeff(j));
    }
    rem.resize(dg);
    return {SkewPolynomial<S, A>(theta, std::move(quot)), SkewPolynomial<S, A>(theta, std::move(rem))};
}

/// f = g * quotient + remainder with deg(remainder) < deg(g).
template <class S, class A>
std::pair<SkewPolynomial<S, A>, SkewPolynomial<S, A>> left_divmod(const SkewPolynomial<S, A>& f,
                                                                  const SkewPolynomial<S, A>& g) {
    f.same_context(g);
    if (g.is_zero()) fail("division_by_zero", "left division by the zero polynomial");
    if (!detail::scalar_is_unit(g.leading()))
        fail("nonunit_leading_coefficient", "left division requires a unit leading coefficient");
    const A& theta = f.automorphism();
    if (f.is_zero() || *f.degree() < *g.degree()) return {SkewPolynomial<S, A>::zero(theta), f};

    const size_t dg = *g.degree();
    const S glead_inv = g.leading().inverse();
    std::vector<S> rem = f.coefficients();
    std::vector<S> quot(rem.size() - dg, detail::domain_zero(theta));
    for (size_t m = rem.size() - dg; m-- > 0;) {
        S c = theta.apply_pow(-static_cast<int64_t>(dg), glead_inv * rem[m + dg]);
        quot[m] = c;
        if (c == detail::domain_zero(theta)) continue;
        for (size_t j = 0; j <= dg; ++j)
            rem[m + j] = rem[m + j] - g.coeff(j) * theta.apply_pow(static_cast<int64_t>(j), c);
    }
    rem.resize(dg);
    return {SkewPolynomial<S, A>(theta, std::move(quot)), SkewPolynomial<S, A>(theta, std::move(rem))};
}

template <class S, class A>
bool right_divides(const SkewPolynomial<S, A>& g, const SkewPolynomial<S, A>& f) {
    return right_divmod(f, g).second.is_zero();
}

/// left-multiplies by the inverse of the leading coefficient; preserves the
/// generated left module.
template <class S, class A>
SkewPolynomial<S, A> monic_normalize(const SkewPolynomial<S, A>& g) {
    if (g.is_zero()) fail("zero_polynomial", "cannot normalize the zero polynomial");
    if (!detail::scalar_is_unit(g.leading()))
        fail("nonunit_leading_coefficient", "monic normalization requires a unit leading coefficient");
    if (g.is_monic()) return g;
    return g.scaled_left(g.leading().inverse());
}

/// Least common left multiple: the monic h of lowest degree with h = u1 f1
/// = u2 f2, computed by the extended right Euclidean algorithm.
inline FieldSkewPolynomial lclm(const FieldSkewPolynomial& f1, const FieldSkewPolynomial& f2) {
    f1.same_context(f2);
    if (f1.is_zero() || f2.is_zero()) fail("zero_polynomial", "lclm of the zero polynomial");
    const FieldAutomorphism& theta = f1.automorphism();
    FieldSkewPolynomial r_prev = f1, r_cur = f2;
    FieldSkewPolynomial u_prev = FieldSkewPolynomial::one(theta), u_cur = FieldSkewPolynomial::zero(theta);
    while (!r_cur.is_zero()) {
        auto [quot, rem] = right_divmod(r_prev, r_cur);
        FieldSkewPolynomial u_next = u_prev - quot * u_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    return monic_normalize(u_cur * f1);
}

/// g*(x) = sum_j theta^j(a_{k-j}) x^j for g of degree k.
template <class S, class A>
SkewPolynomial<S, A> skew_reciprocal(const SkewPolynomial<S, A>& g) {
    if (g.is_zero()) fail("zero_polynomial", "skew reciprocal of the zero polynomial");
    const A& theta = g.automorphism();
    const size_t k = *g.degree();
    std::vector<S> c(k + 1, detail::domain_zero(theta));
    for (size_t j = 0; j <= k; ++j) c[j] = theta.apply_pow(static_cast<int64_t>(j), g.coeff(k - j));
    return SkewPolynomial<S, A>(theta, std::move(c));
}

/// g natural = (1 / theta^k(a_0)) g*; requires g(0) to be a unit.
template <class S, class A>
SkewPolynomial<S, A> left_monic_reciprocal(const SkewPolynomial<S, A>& g) {
    if (g.is_zero()) fail("zero_polynomial", "left monic reciprocal of the zero polynomial");
    const A& theta = g.automorphism();
    const size_t k = *g.degree();
    if (!detail::scalar_is_unit(g.constant_term()))
        fail("zero_constant_term", "left monic reciprocal requires a unit constant term");
    S scale = theta.apply_pow(static_cast<int64_t>(k), g.constant_term()).inverse();
    return skew_reciprocal(g).scaled_left(scale);
}

/// Component i carries the coefficients phi_i(.): the CRT image of
/// R_q[x;Theta_theta] in the product of the F_q[x;theta].
inline std::vector<FieldSkewPolynomial> ring_skew_decompose(const RingSkewPolynomial& f) {
    const RingAutomorphism& Theta = f.automorphism();
    if (!Theta.sigma_is_identity()) fail("sigma_not_identity", "decomposition requires sigma = id");
    const FieldSpec& F = Theta.field();
    FieldAutomorphism theta = Theta.field_automorphism();
    std::vector<FieldSkewPolynomial> out;
    out.reserve(F.size());
    for (uint32_t i = 0; i < F.size(); ++i) {
        std::vector<FieldElement> c;
        c.reserve(f.coefficients().size());
        for (const auto& coeff : f.coefficients()) c.push_back(coeff.coord(i));
        out.emplace_back(theta, std::move(c));
    }
    return out;
}

/// F = sum_i eta_i F_i
inline RingSkewPolynomial ring_skew_compose(const FieldSpec& F, const FieldAutomorphism& theta,
                                            const std::vector<FieldSkewPolynomial>& parts) {
    if (parts.size() != F.size()) fail("wrong_length", "need one component per idempotent");
    size_t deg = 0;
    for (const auto& part : parts) {
        if (!(part.automorphism() == theta)) fail("mismatched_specs", "component with a different automorphism");
        if (!part.is_zero()) deg = std::max(deg, *part.degree() + 1);
    }
    RingAutomorphism Theta = RingAutomorphism::coordinatewise(theta);
    std::vector<RingElement> coeffs;
    coeffs.reserve(deg);
    for (size_t k = 0; k < deg; ++k) {
        std::vector<FieldElement> c(F.size());
        for (uint32_t i = 0; i < F.size(); ++i) c[i] = parts[i].coeff(k);
        coeffs.push_back(RingElement::from_coords(F, std::move(c)));
    }
    return RingSkewPolynomial(Theta, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// text syntax: terms "c*x^k" joined by '+'; printer emits descending degree

namespace detail {

inline std::string skew_coef_string(const FieldElement& c) { return to_string(c); }
inline std::string skew_coef_string(const RingElement& c) {
    if (c.is_scalar()) return to_string(c.coord(0));
    return "(" + to_vbasis_string(c) + ")";
}

inline bool skew_coef_is_one(const FieldElement& c) { return c.is_one(); }
inline bool skew_coef_is_one(const RingElement& c) { return c.is_one(); }

}  // namespace detail

template <class S, class A>
std::string to_string(const SkewPolynomial<S, A>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t k = f.coefficients().size(); k-- > 0;) {
        const S& c = f.coefficients()[k];
        if (c == detail::domain_zero(f.automorphism())) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += detail::skew_coef_string(c);
        } else {
            if (!detail::skew_coef_is_one(c)) {
                s += detail::skew_coef_string(c);
                s += '*';
            }
            s += 'x';
            if (k > 1) s += '^' + std::to_string(k);
        }
    }
    return s;
}

inline FieldSkewPolynomial parse_field_skew_polynomial(const FieldAutomorphism& theta, std::string_view text) {
    const FieldSpec& F = theta.field();
    std::vector<FieldElement> coeffs;
    for (const auto& [sign, term] : detail::split_poly_terms(text)) {
        auto [coef_text, k] = detail::split_term(term, 'x');
        if (coeffs.size() <= k) coeffs.resize(k + 1, F.zero());
        FieldElement c = coef_text.empty() ? F.one() : parse_field_element(F, coef_text);
        if (sign < 0) c = -c;
        coeffs[k] += c;
    }
    return FieldSkewPolynomial(theta, std::move(coeffs));
}

inline RingSkewPolynomial parse_ring_skew_polynomial(const RingAutomorphism& Theta, std::string_view text) {
    const FieldSpec& F = Theta.field();
    std::vector<RingElement> coeffs;
    for (const auto& [sign, term] : detail::split_poly_terms(text)) {
        auto [coef_text, k] = detail::split_term(term, 'x');
        if (coeffs.size() <= k) coeffs.resize(k + 1, RingElement::zero(F));
        RingElement c = RingElement::one(F);
        if (!coef_text.empty()) {
            std::string_view cv = detail::strip(coef_text);
            if (cv.front() == '(') {
                if (cv.back() != ')') fail("parse_error", "unbalanced parentheses in '" + term + "'");
                cv.remove_prefix(1);
                cv.remove_suffix(1);
                c = parse_ring_element(F, cv);
            } else if (cv.front() == '[') {
                c = parse_ring_element(F, cv);
            } else {
                c = RingElement::scalar(parse_field_element(F, cv));
            }
        }
        if (sign < 0) c = -c;
        coeffs[k] += c;
    }
    return RingSkewPolynomial(Theta, std::move(coeffs));
}

}  // namespace rqcodes

#endif  // RQCODES_SKEW_POLY_HPP
