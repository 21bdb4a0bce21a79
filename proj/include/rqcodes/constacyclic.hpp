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

#ifndef RQCODES_CONSTACYCLIC_HPP
#define RQCODES_CONSTACYCLIC_HPP

#include "rqcodes/codes.hpp"
#include "rqcodes/skew_poly.hpp"

namespace rqcodes {

// ---------------------------------------------------------------------------
// twisted shifts

/// T_{theta,lambda}(a_0,...,a_{n-1}) = (lambda theta(a_{n-1}), theta(a_0), ..., theta(a_{n-2}))
inline FieldWord shift_field(const FieldWord& w, const FieldAutomorphism& theta, const FieldElement& lambda) {
    if (lambda.is_zero()) fail("zero_twist", "constacyclic twist must be nonzero");
    if (w.empty()) return w;
    FieldWord out(w.size());
    out[0] = lambda * theta(w.back());
    for (size_t j = 1; j < w.size(); ++j) out[j] = theta(w[j - 1]);
    return out;
}

/// T_{Theta,lambda} on words over R_q; Theta may carry any sigma.
inline RingWord shift_ring(const RingWord& w, const RingAutomorphism& Theta, const RingElement& lambda) {
    if (!lambda.is_unit()) fail("not_a_unit", "constacyclic twist must be a unit of R_q");
    if (w.empty()) return w;
    RingWord out(w.size());
    out[0] = lambda * Theta(w.back());
    for (size_t j = 1; j < w.size(); ++j) out[j] = Theta(w[j - 1]);
    return out;
}

/// The blockwise shift acting on Gray words: block t of the output is
/// T_{theta,lambda_t} applied to input block sigma^{-1}(t).
struct TwistSpec {
    FieldAutomorphism theta;
    std::vector<uint32_t> sigma;         // block permutation
    std::vector<FieldElement> lambdas;   // per-block twists, all nonzero

    TwistSpec(FieldAutomorphism th, std::vector<uint32_t> sg, std::vector<FieldElement> ls)
        : theta(std::move(th)), sigma(std::move(sg)), lambdas(std::move(ls)) {
        if (sigma.size() != lambdas.size()) fail("wrong_length", "one twist per block required");
        for (const auto& l : lambdas)
            if (l.is_zero()) fail("zero_twist", "multi-twist constants must be nonzero");
    }

    /// the twist spec matching T_{Theta_{theta,sigma},lambda} under the Gray map
    static TwistSpec from_ring(const RingAutomorphism& Theta, const RingElement& lambda) {
        if (!lambda.is_unit()) fail("not_a_unit", "ring twist must be a unit");
        return TwistSpec(Theta.field_automorphism(), Theta.sigma(), lambda.coords());
    }
};

/// Input and output are Gray words of length q*n (q blocks of length n).
inline FieldWord multi_twisted_shift(const FieldWord& w, size_t n, const TwistSpec& ts) {
    const size_t q = ts.sigma.size();
    if (w.size() != q * n) fail("wrong_length", "Gray word length must be q*n");
    std::vector<uint32_t> sigma_inv(q);
    for (uint32_t i = 0; i < q; ++i) sigma_inv[ts.sigma[i]] = i;
    FieldWord out(w.size());
    for (uint32_t t = 0; t < q; ++t) {
        FieldWord block(w.begin() + sigma_inv[t] * n, w.begin() + (sigma_inv[t] + 1) * n);
        FieldWord shifted = shift_field(block, ts.theta, ts.lambdas[t]);
        std::copy(shifted.begin(), shifted.end(), out.begin() + t * n);
    }
    return out;
}

/// closure of a linear code under a semilinear map: generator-row membership
inline bool is_closed_under_field_shift(const LinearCode& C, const FieldAutomorphism& theta,
                                        const FieldElement& lambda) {
    for (const auto& row : C.generator_matrix())
        if (!C.contains(shift_field(row, theta, lambda))) return false;
    return true;
}

inline bool is_closed_under_ring_shift(const RingLinearCode& C, const RingAutomorphism& Theta,
                                       const RingElement& lambda) {
    for (const auto& row : C.generator_matrix())
        if (!C.contains(shift_ring(row, Theta, lambda))) return false;
    return true;
}

inline bool is_closed_under_multi_twist(const LinearCode& C, size_t n, const TwistSpec& ts) {
    for (const auto& row : C.generator_matrix())
        if (!C.contains(multi_twisted_shift(row, n, ts))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// skew constacyclic codes over F_q

/// The code <g> in F_q[x;theta]/(x^n - lambda), g a monic right divisor of
/// x^n - lambda with nonzero constant term; k = n - deg g.
class SkewConstacyclicCode {
   public:
    SkewConstacyclicCode(FieldSkewPolynomial g, size_t n, FieldElement lambda)
        : g_(std::move(g)), n_(n), lambda_(std::move(lambda)), code_(LinearCode::zero_code(g_.automorphism().field(), n)) {
        const FieldSpec& F = g_.automorphism().field();
        if (&lambda_.spec() != &F) fail("mismatched_specs", "twist from a foreign field");
        if (lambda_.is_zero()) fail("zero_twist", "constacyclic twist must be nonzero");
        if (g_.is_zero() || !g_.is_monic()) fail("nonmonic_generator", "generator must be monic");
        if (*g_.degree() > n_) fail("wrong_length", "generator degree exceeds the code length");
        if (*g_.degree() >= 1 && g_.constant_term().is_zero())
            fail("zero_constant_term", "generator must have a nonzero constant term");
        auto rem = right_divmod(FieldSkewPolynomial::x_pow_minus(g_.automorphism(), n_, lambda_), g_).second;
        if (!rem.is_zero())
            fail("not_right_divisor",
                 "generator does not right-divide x^n - lambda (remainder " + to_string(rem) + ")");
        code_ = LinearCode(F, n_, natural_generator_rows());
        for (const auto& row : code_.generator_matrix())
            if (!code_.contains(shift_field(row, g_.automorphism(), lambda_)))
                fail("internal", "generated code is not shift-closed");  // cannot happen
    }

    const FieldSkewPolynomial& generator() const noexcept { return g_; }
    const FieldAutomorphism& automorphism() const noexcept { return g_.automorphism(); }
    const FieldElement& twist() const noexcept { return lambda_; }
    size_t length() const noexcept { return n_; }
    size_t dimension() const noexcept { return n_ - *g_.degree(); }
    const LinearCode& linear_code() const noexcept { return code_; }

    /// rows g, x g, ..., x^{k-1} g as coefficient words (degree < n, no reduction needed)
    std::vector<FieldWord> natural_generator_rows() const {
        const FieldSpec& F = automorphism().field();
        std::vector<FieldWord> rows;
        FieldSkewPolynomial cur = g_;
        const FieldSkewPolynomial x = FieldSkewPolynomial::monomial(g_.automorphism(), F.one(), 1);
        for (size_t t = 0; t < dimension(); ++t) {
            FieldWord row(n_, F.zero());
            for (size_t j = 0; j < n_; ++j) row[j] = cur.coeff(j);
            rows.push_back(std::move(row));
            cur = x * cur;
        }
        return rows;
    }

    /// Dual code via the skew reciprocal: with x^n - theta^{-k}(lambda) = g h,
    /// the dual is <h*> with twist lambda* = theta^n(a_0) / (a_0 theta^{n-k}(lambda)).
    SkewConstacyclicCode dual() const {
        const FieldAutomorphism& theta = automorphism();
        const size_t k = dimension();
        FieldElement tw = theta.apply_pow(-static_cast<int64_t>(k), lambda_);
        auto [h, rem] = left_divmod(FieldSkewPolynomial::x_pow_minus(theta, n_, tw), g_);
        if (!rem.is_zero()) fail("dual_division_failure", "x^n - theta^{-k}(lambda) is not g * h");
        const FieldElement a0 = g_.constant_term();
        FieldElement lambda_star =
            theta.apply_pow(static_cast<int64_t>(n_), a0) / (a0 * theta.apply_pow(static_cast<int64_t>(n_ - k), lambda_));
        return SkewConstacyclicCode(monic_normalize(skew_reciprocal(h)), n_, lambda_star);
    }

   private:
    FieldSkewPolynomial g_;
    size_t n_;
    FieldElement lambda_;
    LinearCode code_;
};

inline SkewConstacyclicCode code_from_generator_field(const FieldSkewPolynomial& g, size_t n,
                                                      const FieldElement& lambda) {
    return SkewConstacyclicCode(g, n, lambda);
}

/// All monic right divisors of x^n - lambda with unit constant term,
/// by exhaustive coefficient enumeration over every degree 0..n,
/// in lexicographic coefficient order (packed element order, a_0 first).
inline std::vector<FieldSkewPolynomial> enumerate_right_divisors(const FieldAutomorphism& theta, size_t n,
                                                                 const FieldElement& lambda,
                                                                 uint64_t guard = uint64_t(1) << 20) {
    const FieldSpec& F = theta.field();
    if (lambda.is_zero()) fail("zero_twist", "constacyclic twist must be nonzero");
    {
        uint64_t total = 1;
        for (size_t i = 0; i < n; ++i) {
            total *= F.size();
            if (total > guard) fail("guard_exceeded", "divisor enumeration exceeds the guard");
        }
    }
    const FieldSkewPolynomial target = FieldSkewPolynomial::x_pow_minus(theta, n, lambda);
    std::vector<FieldSkewPolynomial> out{FieldSkewPolynomial::one(theta)};
    for (size_t d = 1; d <= n; ++d) {
        std::vector<uint32_t> idx(d, 0);
        idx[0] = 1;  // a_0 != 0
        bool done = false;
        while (!done) {
            std::vector<FieldElement> coeffs(d + 1);
            for (size_t i = 0; i < d; ++i) coeffs[i] = F.from_packed(idx[i]);
            coeffs[d] = F.one();
            FieldSkewPolynomial g(theta, std::move(coeffs));
            if (right_divides(g, target)) out.push_back(std::move(g));
            // advance the odometer: a_0 runs over 1..q-1, the rest over 0..q-1,
            // most significant digit last so the order is lexicographic in (a_0, a_1, ...)
            size_t pos = d;
            while (pos-- > 0) {
                if (++idx[pos] < F.size()) break;
                idx[pos] = (pos == 0) ? 1 : 0;
                if (pos == 0) done = true;
            }
        }
    }
    return out;
}

/// All monic g of degree deg(f)/2 with unit constant term satisfying
/// g_natural * g = f, by exhaustive coefficient enumeration.
inline std::vector<FieldSkewPolynomial> solve_reciprocal_equation(const FieldSkewPolynomial& f,
                                                                  uint64_t guard = uint64_t(1) << 20) {
    if (f.is_zero()) fail("zero_polynomial", "reciprocal equation with zero right-hand side");
    const size_t deg = *f.degree();
    if (deg % 2 != 0) fail("odd_degree", "reciprocal equation requires an even-degree target");
    const size_t m = deg / 2;
    const FieldAutomorphism& theta = f.automorphism();
    const FieldSpec& F = theta.field();
    {
        uint64_t total = 1;
        for (size_t i = 0; i < m; ++i) {
            total *= F.size();
            if (total > guard) fail("guard_exceeded", "reciprocal-equation enumeration exceeds the guard");
        }
    }
    std::vector<FieldSkewPolynomial> out;
    if (m == 0) {
        if (f == FieldSkewPolynomial::one(theta)) out.push_back(FieldSkewPolynomial::one(theta));
        return out;
    }
    std::vector<uint32_t> idx(m, 0);
    idx[0] = 1;
    bool done = false;
    while (!done) {
        std::vector<FieldElement> coeffs(m + 1);
        for (size_t i = 0; i < m; ++i) coeffs[i] = F.from_packed(idx[i]);
        coeffs[m] = F.one();
        FieldSkewPolynomial g(theta, std::move(coeffs));
        if (left_monic_reciprocal(g) * g == f) out.push_back(std::move(g));
        size_t pos = m;
        while (pos-- > 0) {
            if (++idx[pos] < F.size()) break;
            idx[pos] = (pos == 0) ? 1 : 0;
            if (pos == 0) done = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// skew constacyclic codes over R_q (sigma = id only)

enum class SelfDualKind { cyclic, negacyclic, not_self_dual };

/// The code <eta_0 g_0, ..., eta_{q-1} g_{q-1}> in R_q[x;Theta_theta]/(x^n - lambda):
/// component i is the skew theta-lambda_i-constacyclic code <g_i>.
class SkewConstacyclicRingCode {
   public:
    SkewConstacyclicRingCode(const FieldSpec& F, FieldAutomorphism theta, size_t n, RingElement lambda,
                             std::vector<FieldSkewPolynomial> gens)
        : spec_(&F), theta_(std::move(theta)), n_(n), lambda_(std::move(lambda)) {
        if (!lambda_.is_unit()) fail("not_a_unit", "ring twist must be a unit");
        if (gens.size() != F.size()) fail("wrong_length", "need one generator per idempotent");
        comps_.reserve(F.size());
        for (uint32_t i = 0; i < F.size(); ++i)
            comps_.emplace_back(gens[i], n_, lambda_.coord(i));
        // Corollary-level consistency: H g = x^n - lambda over R_q[x;Theta_theta],
        // with H = sum eta_i h_i assembled from the component cofactors.
        std::vector<FieldSkewPolynomial> hs;
        for (uint32_t i = 0; i < F.size(); ++i) {
            auto [h, rem] = left_divmod(
                FieldSkewPolynomial::x_pow_minus(theta_, n_, lambda_.coord(i)), comps_[i].generator());
            if (!rem.is_zero()) fail("internal", "component cofactor missing");  // ruled out by ctor checks
            hs.push_back(std::move(h));
        }
        RingSkewPolynomial H = ring_skew_compose(F, theta_, hs);
        RingAutomorphism Theta = RingAutomorphism::coordinatewise(theta_);
        if (H * principal_generator() != RingSkewPolynomial::x_pow_minus(Theta, n_, lambda_))
            fail("internal", "principal generator does not right-divide x^n - lambda");
    }

    const FieldSpec& spec() const noexcept { return *spec_; }
    const FieldAutomorphism& automorphism() const noexcept { return theta_; }
    size_t length() const noexcept { return n_; }
    const RingElement& twist() const noexcept { return lambda_; }
    const SkewConstacyclicCode& component(uint32_t i) const { return comps_.at(i); }
    const std::vector<SkewConstacyclicCode>& components() const noexcept { return comps_; }

    /// g = sum eta_i g_i; right-divides x^n - lambda in R_q[x;Theta_theta].
    RingSkewPolynomial principal_generator() const {
        std::vector<FieldSkewPolynomial> gs;
        gs.reserve(comps_.size());
        for (const auto& c : comps_) gs.push_back(c.generator());
        return ring_skew_compose(*spec_, theta_, gs);
    }

    RingLinearCode ring_linear_code() const {
        std::vector<LinearCode> cs;
        cs.reserve(comps_.size());
        for (const auto& c : comps_) cs.push_back(c.linear_code());
        return RingLinearCode(*spec_, std::move(cs));
    }

    /// The polynomial-style generator matrix: row t assembles the words of
    /// x^t g_i across components (zero rows where t >= k_i). With equal
    /// component degrees the rows are exactly g, x g, ..., x^{k-1} g.
    std::vector<RingWord> generator_matrix() const {
        size_t k = 0;
        std::vector<std::vector<FieldWord>> nat;
        for (const auto& c : comps_) {
            nat.push_back(c.natural_generator_rows());
            k = std::max(k, nat.back().size());
        }
        std::vector<RingWord> rows(k, RingWord(n_));
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < n_; ++j) {
                std::vector<FieldElement> coords(spec_->size());
                for (uint32_t i = 0; i < spec_->size(); ++i)
                    coords[i] = t < nat[i].size() ? nat[i][t][j] : spec_->zero();
                rows[t][j] = RingElement::from_coords(*spec_, std::move(coords));
            }
        return rows;
    }

    bool is_self_dual() const { return ring_linear_code().is_self_dual(); }

    /// componentwise lambda_i*/h_i* dual, recombined with lambda* = sum eta_i lambda_i*
    SkewConstacyclicRingCode dual() const {
        std::vector<FieldSkewPolynomial> gens;
        std::vector<FieldElement> twists;
        for (const auto& c : comps_) {
            SkewConstacyclicCode d = c.dual();
            gens.push_back(d.generator());
            twists.push_back(d.twist());
        }
        return SkewConstacyclicRingCode(*spec_, theta_, n_, RingElement::from_coords(*spec_, std::move(twists)),
                                        std::move(gens));
    }

    /// For self-dual codes of even length reports the twist class; any
    /// self-dual code with a twist other than +-1 would falsify the
    /// classification theorem, so that case raises a consistency alarm.
    SelfDualKind classify() const {
        if (n_ % 2 != 0) fail("odd_length", "classification requires even length");
        if (!is_self_dual()) return SelfDualKind::not_self_dual;
        if (lambda_.is_one()) return SelfDualKind::cyclic;
        if (lambda_ == -RingElement::one(*spec_)) return SelfDualKind::negacyclic;
        fail("theorem_violation", "self-dual skew constacyclic code with twist " + to_crt_string(lambda_));
    }

   private:
    const FieldSpec* spec_;
    FieldAutomorphism theta_;
    size_t n_;
    RingElement lambda_;
    std::vector<SkewConstacyclicCode> comps_;
};

inline SkewConstacyclicRingCode code_from_components_ring(const FieldSpec& F, const FieldAutomorphism& theta,
                                                          size_t n, const RingElement& lambda,
                                                          std::vector<FieldSkewPolynomial> gens) {
    return SkewConstacyclicRingCode(F, theta, n, lambda, std::move(gens));
}

// ---------------------------------------------------------------------------
// existence of self-dual skew cyclic / negacyclic codes (odd characteristic)

enum class TwistKind { cyclic, negacyclic };

/// Decision table for the existence of a self-dual skew cyclic or negacyclic
/// code of dimension k over F_{p^r} (equivalently over R_{p^r}), where theta
/// is the F_{p^s}-automorphism a -> a^{p^s} and s divides r. Only odd p is
/// covered; p = 2 is rejected as out of domain.
inline bool self_dual_exists(uint32_t p, uint32_t r, uint32_t s, uint32_t k, TwistKind kind) {
    if (!detail::is_prime_u32(p)) fail("nonprime_characteristic", "p must be prime");
    if (p == 2) fail("not_covered", "the existence criteria assume odd characteristic");
    if (r < 1 || s < 1 || r % s != 0) fail("invalid_automorphism_exponent", "s must divide r");
    if (k < 1) fail("out_of_range", "dimension must be >= 1");

    // q mod 4 for odd p: (p mod 4)^r mod 4
    uint32_t q_mod4 = 1;
    for (uint32_t i = 0; i < r; ++i) q_mod4 = q_mod4 * (p % 4) % 4;

    const bool sk_odd = (static_cast<uint64_t>(s) * k) % 2 == 1;
    if (q_mod4 == 1) {
        if (kind == TwistKind::cyclic) return p % 4 == 3 && r % 2 == 0 && sk_odd;
        return p % 4 == 1 || (p % 4 == 3 && r % 2 == 0 && !sk_odd);
    }
    // q = 3 mod 4
    if (kind == TwistKind::cyclic) return false;
    uint32_t mu = 0, m = p + 1;
    while (m % 2 == 0) {
        ++mu;
        m /= 2;
    }
    // mu >= 2 always holds here: p = 3 mod 4 means 4 | p+1
    uint64_t pow2 = uint64_t(1) << (mu - 1);
    return k % pow2 == 0;
}

}  // namespace rqcodes

#endif  // RQCODES_CONSTACYCLIC_HPP
