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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "rqcodes/skew_poly.hpp"

using namespace rqcodes;

namespace {

FieldSkewPolynomial random_poly(const FieldAutomorphism& theta, size_t max_deg, std::mt19937& rng) {
    const FieldSpec& F = theta.field();
    std::uniform_int_distribution<size_t> ddist(0, max_deg);
    std::uniform_int_distribution<uint32_t> cdist(0, F.size() - 1);
    size_t d = ddist(rng);
    std::vector<FieldElement> c(d + 1);
    for (auto& x : c) x = F.from_packed(cdist(rng));
    if (c.back().is_zero()) c.back() = F.one();
    return FieldSkewPolynomial(theta, std::move(c));
}

// brute-force oracle: no monic common left multiple of degree < deg(found)
// exists, scanning every coefficient tuple
bool is_minimal_common_left_multiple(const FieldSkewPolynomial& found, const FieldSkewPolynomial& f1,
                                     const FieldSkewPolynomial& f2) {
    const FieldAutomorphism& theta = f1.automorphism();
    const FieldSpec& F = theta.field();
    if (!right_divides(f1, found) || !right_divides(f2, found)) return false;
    const size_t dmax = *found.degree();
    for (size_t d = 0; d < dmax; ++d) {
        uint64_t total = 1;
        for (size_t i = 0; i < d; ++i) total *= F.size();
        for (uint64_t idx = 0; idx < total; ++idx) {
            std::vector<FieldElement> c(d + 1);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) {
                c[i] = F.from_packed(static_cast<uint32_t>(t % F.size()));
                t /= F.size();
            }
            c[d] = F.one();
            FieldSkewPolynomial h(theta, std::move(c));
            if (right_divides(f1, h) && right_divides(f2, h)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("twisted multiplication") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    CHECK(P("x") * P("a*x") == P("a^2*x^2"));
    CHECK(P("x+1") * P("x+1") == P("x^2+1"));
    CHECK(P("x^3+1") * P("x^3+1") == P("x^6+1"));
    CHECK(P("x") * P("a*x") != P("a*x") * P("x"));  // noncommutative

    // degree adds over a field
    CHECK(*(P("a*x^2+1") * P("x^3+a")).degree() == 5);

    const FieldSpec& F9 = make_field(3, 2);
    FieldAutomorphism frob9(F9, 1);
    CHECK_THROWS_AS(P("x") * parse_field_skew_polynomial(frob9, "x"), Error);
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937 rng(123);
    for (auto pr : {std::pair{2u, 2u}, {3u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        for (uint32_t s = 0; s < F.degree(); ++s) {
            FieldAutomorphism th(F, s);
            for (int t = 0; t < 60; ++t) {
                auto f = random_poly(th, 4, rng), g = random_poly(th, 4, rng), h = random_poly(th, 4, rng);
                CHECK((f * g) * h == f * (g * h));
                CHECK(f * (g + h) == f * g + f * h);
                CHECK((f + g) * h == f * h + g * h);
            }
        }
    }
}

TEST_CASE("right and left division") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    {
        auto [q, r] = right_divmod(P("x^6+1"), P("x^3+1"));
        CHECK(q == P("x^3+1"));
        CHECK(r.is_zero());
    }
    {
        auto [q, r] = right_divmod(P("x^3+a*x^2+a*x+1"), P("x^3+a*x^2+a*x+1"));
        CHECK(q == P("1"));
        CHECK(r.is_zero());
    }
    // the degree-6 target is right-divisible by the lclm-built cubic
    CHECK(right_divides(P("x^3+a*x^2+a*x+1"), P("x^6+1")));

    CHECK_THROWS_AS(right_divmod(P("x"), FieldSkewPolynomial::zero(frob)), Error);

    // division identity re-verified by multiplication, random pairs
    std::mt19937 rng(99);
    for (auto pr : {std::pair{2u, 2u}, {3u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        FieldAutomorphism th(F, 1);
        for (int t = 0; t < 80; ++t) {
            auto f = random_poly(th, 6, rng), g = random_poly(th, 3, rng);
            auto [q, r] = right_divmod(f, g);
            CHECK(q * g + r == f);
            CHECK((r.is_zero() || *r.degree() < *g.degree()));
            auto [lq, lr] = left_divmod(f, g);
            CHECK(g * lq + lr == f);
            CHECK((lr.is_zero() || *lr.degree() < *g.degree()));
        }
    }
}

TEST_CASE("ring-scalar division needs a unit leading coefficient") {
    const FieldSpec& F4 = make_field(2, 2);
    RingAutomorphism Theta = RingAutomorphism::coordinatewise(FieldAutomorphism(F4, 1));
    auto f = RingSkewPolynomial::x_pow_minus(Theta, 3, RingElement::one(F4));
    auto g = RingSkewPolynomial::monomial(Theta, idempotent(F4, 0), 1);  // zero-divisor lead
    CHECK_THROWS_AS(right_divmod(f, g), Error);

    auto monic = RingSkewPolynomial::x_pow_minus(Theta, 1, RingElement::one(F4));
    auto [q, r] = right_divmod(f, monic);
    CHECK(q * monic + r == f);
}

TEST_CASE("lclm reproduces the length-6 construction") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    CHECK(lclm(P("x+1"), P("x^2+x+1")) == P("x^3+1"));
    CHECK(lclm(P("x+1"), P("x^2+a^2")) == P("x^3+a*x^2+a*x+1"));
    CHECK(lclm(P("x+1"), P("x^2+a")) == P("x^3+a^2*x^2+a^2*x+1"));
    CHECK(lclm(P("a*x+a"), P("a*x+a")) == P("x+1"));
    CHECK_THROWS_AS(lclm(P("x"), FieldSkewPolynomial::zero(frob)), Error);
}

TEST_CASE("lclm is minimal: brute-force degree sweep") {
    std::mt19937 rng(2026);
    for (auto pr : {std::pair{2u, 2u}, {3u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        FieldAutomorphism th(F, 1);
        for (int t = 0; t < 25; ++t) {
            FieldSkewPolynomial f1 = random_poly(th, 2, rng), f2 = random_poly(th, 2, rng);
            if (f1.is_zero() || f2.is_zero()) continue;
            FieldSkewPolynomial h = lclm(f1, f2);
            CHECK(h.is_monic());
            CHECK(right_divides(f1, h));
            CHECK(right_divides(f2, h));
            CHECK(is_minimal_common_left_multiple(h, f1, f2));
        }
    }
}

TEST_CASE("skew reciprocals") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    CHECK(skew_reciprocal(P("x^3+a*x^2+a*x+1")) == P("x^3+a*x^2+a^2*x+1"));
    CHECK(skew_reciprocal(P("x^3+1")) == P("x^3+1"));
    CHECK(skew_reciprocal(P("a")) == P("a"));
    CHECK(left_monic_reciprocal(P("a")) == P("1"));
    CHECK_THROWS_AS(left_monic_reciprocal(P("x^2+x")), Error);  // zero constant term

    // self-reciprocal inputs are fixed points of the natural map
    for (const char* s : {"x^3+1", "x^2+x+1", "x+1"}) {
        auto g = P(s);
        CHECK(left_monic_reciprocal(g) == g);
        CHECK(left_monic_reciprocal(left_monic_reciprocal(g)) == g);
    }
}

TEST_CASE("monic normalization") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    CHECK(monic_normalize(P("a*x+a")) == P("x+1"));
    CHECK(monic_normalize(P("x^2+a")) == P("x^2+a"));
    CHECK_THROWS_AS(monic_normalize(FieldSkewPolynomial::zero(frob)), Error);
}

TEST_CASE("ring skew decomposition") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    RingAutomorphism Theta = RingAutomorphism::coordinatewise(frob);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };
    auto PR = [&](const char* s) { return parse_ring_skew_polynomial(Theta, s); };

    // the degree-3 generator over R_4 splits into the three cubics, indexed
    // by evaluation point (0, alpha, alpha^2, 1)
    auto g = PR("x^3 + (v^3+v^2)*x^2 + (v^3+v^2)*x + 1");
    auto comps = ring_skew_decompose(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == P("x^3+1"));
    CHECK(comps[1] == P("x^3+a*x^2+a*x+1"));
    CHECK(comps[2] == P("x^3+a^2*x^2+a^2*x+1"));
    CHECK(comps[3] == P("x^3+1"));
    CHECK(ring_skew_compose(F4, frob, comps) == g);

    // scalar-coefficient polynomials have equal components
    auto s = PR("x^2 + a*x + 1");
    for (const auto& c : ring_skew_decompose(s)) CHECK(c == P("x^2+a*x+1"));

    // sigma != id is rejected
    RingAutomorphism swapped(frob, {1u, 0u, 2u, 3u});
    CHECK_THROWS_AS(RingSkewPolynomial(swapped, {RingElement::one(F4)}), Error);

    // decomposition is a ring isomorphism onto the product
    std::mt19937 rng(5);
    const FieldSpec& F3 = make_field(3, 1);
    RingAutomorphism T3 = RingAutomorphism::identity(F3);
    std::uniform_int_distribution<uint32_t> cdist(0, 2);
    auto random_ring_poly = [&](size_t maxdeg) {
        std::uniform_int_distribution<size_t> ddist(0, maxdeg);
        size_t d = ddist(rng);
        std::vector<RingElement> c;
        for (size_t i = 0; i <= d; ++i) {
            std::vector<FieldElement> coords;
            for (uint32_t j = 0; j < 3; ++j) coords.push_back(F3.from_packed(cdist(rng)));
            c.push_back(RingElement::from_coords(F3, coords));
        }
        return RingSkewPolynomial(T3, std::move(c));
    };
    for (int t = 0; t < 60; ++t) {
        auto f = random_ring_poly(4), h = random_ring_poly(4);
        auto cf = ring_skew_decompose(f), ch = ring_skew_decompose(h);
        auto sum = ring_skew_decompose(f + h), prod = ring_skew_decompose(f * h);
        for (uint32_t i = 0; i < 3; ++i) {
            CHECK(sum[i] == cf[i] + ch[i]);
            CHECK(prod[i] == cf[i] * ch[i]);
        }
        CHECK(ring_skew_compose(F3, T3.field_automorphism(), cf) == f);
    }

    // right division commutes with decomposition (monic divisors)
    for (int t = 0; t < 40; ++t) {
        auto f = random_ring_poly(5);
        auto g = random_ring_poly(2) + RingSkewPolynomial::monomial(T3, RingElement::one(F3), 3);
        auto [q, r] = right_divmod(f, g);
        auto cf = ring_skew_decompose(f), cg = ring_skew_decompose(g);
        auto cq = ring_skew_decompose(q), cr = ring_skew_decompose(r);
        for (uint32_t i = 0; i < 3; ++i) {
            auto [qi, ri] = right_divmod(cf[i], cg[i]);
            CHECK(qi == cq[i]);
            CHECK(ri == cr[i]);
        }
        CHECK(right_divides(g, g * f));
    }
}

TEST_CASE("zero polynomial conventions") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto z = FieldSkewPolynomial::zero(frob);
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    CHECK_THROWS_AS(z.leading(), Error);
    CHECK_THROWS_AS(skew_reciprocal(z), Error);
}

TEST_CASE("skew polynomial text syntax") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldAutomorphism frob(F4, 1);
    auto P = [&](const char* s) { return parse_field_skew_polynomial(frob, s); };

    CHECK(to_string(P("x^3+a*x^2+a*x+1")) == "x^3 + a*x^2 + a*x + 1");
    CHECK(P("1 + a*x + a*x^2 + x^3") == P("x^3+a*x^2+a*x+1"));  // any term order
    CHECK(P("x^2 + x^2") == FieldSkewPolynomial::zero(frob));   // repeated terms accumulate
    CHECK(to_string(FieldSkewPolynomial::zero(frob)) == "0");

    RingAutomorphism Theta = RingAutomorphism::coordinatewise(frob);
    auto g = parse_ring_skew_polynomial(Theta, "x^3 + (v^3+v^2)*x^2 + (v^3+v^2)*x + 1");
    CHECK(parse_ring_skew_polynomial(Theta, to_string(g)) == g);
    auto crt = parse_ring_skew_polynomial(Theta, "[0,a,a^2,0]*x + 1");
    CHECK(crt.coeff(1) == parse_ring_element(F4, "v^3+v^2"));

    const FieldSpec& F3 = make_field(3, 1);
    FieldAutomorphism id3(F3, 0);
    CHECK(parse_field_skew_polynomial(id3, "x^2 - 1") ==
          parse_field_skew_polynomial(id3, "x^2 + 2"));
}
