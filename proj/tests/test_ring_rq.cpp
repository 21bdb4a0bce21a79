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
#include <map>
#include <random>
#include <set>

#include "rqcodes/ring_rq.hpp"

using namespace rqcodes;

namespace {

std::string key(const RingElement& x) { return to_crt_string(x); }

// the set {a*r : r in R_q}, as CRT strings
std::set<std::string> principal_ideal(const FieldSpec& F, const RingElement& a) {
    std::set<std::string> out;
    for (const auto& r : enumerate_ring_elements(F)) out.insert(key(a * r));
    return out;
}

}  // namespace

TEST_CASE("v-basis conversion against pinned idempotents") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldElement a = F4.beta(), z = F4.zero(), o = F4.one();

    // v^3 + 1 is the idempotent at evaluation point 0
    CHECK(from_poly_basis(F4, {o, z, z, o}) == idempotent(F4, 0));
    CHECK(to_poly_basis(idempotent(F4, 0)) == std::vector<FieldElement>{o, z, z, o});
    // v^3 + a v^2 + a^2 v sits at the point alpha
    CHECK(from_poly_basis(F4, {z, a * a, a, o}) == idempotent(F4, 1));
    // v^3 + a^2 v^2 + a v sits at the point alpha^2
    CHECK(from_poly_basis(F4, {z, a, a * a, o}) == idempotent(F4, 2));
    // the corrected fourth idempotent (point 1) is v^3 + v^2 + v
    CHECK(from_poly_basis(F4, {z, o, o, o}) == idempotent(F4, 3));
    // the misprinted variant v^3 + v + 1 is not idempotent at all
    CHECK_FALSE(from_poly_basis(F4, {o, o, z, o}).is_idempotent());

    // constants evaluate to constant coordinate vectors
    const FieldSpec& F3 = make_field(3, 1);
    RingElement two = RingElement::scalar(F3.from_int(2));
    CHECK(to_poly_basis(two)[0] == F3.from_int(2));
    CHECK(two.is_scalar());

    CHECK_THROWS_AS(from_poly_basis(F4, {o, z, z}), Error);  // wrong length
}

TEST_CASE("CRT round trip is the identity") {
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        for (const auto& x : enumerate_ring_elements(F)) {
            CHECK(from_poly_basis(F, to_poly_basis(x)) == x);
        }
    }
    // sampled for q = 5
    const FieldSpec& F5 = make_field(5, 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> dist(0, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<FieldElement> coords;
        for (uint32_t i = 0; i < 5; ++i) coords.push_back(F5.from_packed(dist(rng)));
        RingElement x = RingElement::from_coords(F5, coords);
        CHECK(from_poly_basis(F5, to_poly_basis(x)) == x);
    }
}

TEST_CASE("idempotent family") {
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        RingElement sum = RingElement::zero(F);
        for (uint32_t i = 0; i < F.size(); ++i) {
            RingElement e = idempotent(F, i);
            CHECK(e * e == e);
            sum += e;
            for (uint32_t j = 0; j < i; ++j) CHECK((e * idempotent(F, j)).is_zero());
        }
        CHECK(sum.is_one());
    }
    const FieldSpec& F2 = make_field(2, 1);
    CHECK(parse_ring_element(F2, "v+1") == idempotent(F2, 0));
    CHECK(parse_ring_element(F2, "v") == idempotent(F2, 1));
    CHECK_THROWS_AS(idempotent(F2, 2), Error);
}

TEST_CASE("unique complete set of primitive orthogonal idempotents") {
    // exhaustive: every complete set of primitive pairwise-orthogonal
    // idempotents equals {eta_0, ..., eta_{q-1}}
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        std::vector<RingElement> idems;
        for (const auto& x : enumerate_ring_elements(F))
            if (x * x == x && !x.is_zero()) idems.push_back(x);
        CHECK(idems.size() == (uint64_t(1) << F.size()) - 1);

        auto primitive = [&](const RingElement& e) {
            for (const auto& e1 : idems)
                for (const auto& e2 : idems)
                    if ((e1 * e2).is_zero() && e1 + e2 == e) return false;
            return true;
        };
        std::vector<RingElement> prims;
        for (const auto& e : idems)
            if (primitive(e)) prims.push_back(e);
        REQUIRE(prims.size() == F.size());

        // the only pairwise-orthogonal complete arrangement of the primitives
        // is the full set, and it matches the constructed eta_i
        RingElement total = RingElement::zero(F);
        for (const auto& e : prims) total += e;
        CHECK(total.is_one());
        std::set<std::string> got, expect;
        for (const auto& e : prims) got.insert(key(e));
        for (uint32_t i = 0; i < F.size(); ++i) expect.insert(key(idempotent(F, i)));
        CHECK(got == expect);
        // no proper subset of the primitives sums to 1
        for (size_t skip = 0; skip < prims.size(); ++skip) {
            RingElement partial = RingElement::zero(F);
            for (size_t i = 0; i < prims.size(); ++i)
                if (i != skip) partial += prims[i];
            CHECK_FALSE(partial.is_one());
        }
    }
}

TEST_CASE("units of R_3 match the published list") {
    const FieldSpec& F3 = make_field(3, 1);
    std::set<std::string> got;
    for (const auto& x : enumerate_ring_elements(F3))
        if (x.is_unit()) got.insert(key(x));
    CHECK(got.size() == 8);

    std::set<std::string> expect;
    for (const char* s : {"1", "2", "1+v^2", "1+v+2*v^2", "1+2*v+2*v^2", "2+v+v^2", "2+2*v+v^2", "2+2*v^2"})
        expect.insert(key(parse_ring_element(F3, s)));
    CHECK(got == expect);
}

TEST_CASE("unit group size and inverses") {
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        uint64_t units = 0, expected = 1;
        for (uint32_t i = 0; i < F.size(); ++i) expected *= F.size() - 1;
        for (const auto& x : enumerate_ring_elements(F)) {
            if (!x.is_unit()) continue;
            ++units;
            CHECK((x * x.inverse()).is_one());
        }
        CHECK(units == expected);
    }
    CHECK_THROWS_AS(idempotent(make_field(3, 1), 0).inverse(), Error);
}

TEST_CASE("ideal lattice") {
    const FieldSpec& F4 = make_field(2, 2);
    CHECK(support(idempotent(F4, 0)).support == std::vector<uint32_t>{0});
    CHECK(ideal_size(F4, support(idempotent(F4, 0))) == 4);
    CHECK(support(RingElement::zero(F4)).support.empty());
    CHECK(ideal_size(F4, support(RingElement::zero(F4))) == 1);

    // exhaustive: the distinct principal ideals number 2^q and realize q^|A|
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        std::map<std::set<std::string>, size_t> ideals;
        for (const auto& a : enumerate_ring_elements(F)) {
            auto ideal = principal_ideal(F, a);
            CHECK(ideal.size() == ideal_size(F, support(a)));
            ideals[ideal] = support(a).support.size();
            // <a> = <generator of I_Supp(a)>
            CHECK(ideal == principal_ideal(F, ideal_generator(F, support(a))));
        }
        CHECK(ideals.size() == uint64_t(1) << F.size());
    }
}

TEST_CASE("ring automorphism group") {
    const FieldSpec& F2 = make_field(2, 1);
    const FieldSpec& F3 = make_field(3, 1);
    const FieldSpec& F4 = make_field(2, 2);

    auto a2 = enumerate_automorphisms(F2);
    auto a3 = enumerate_automorphisms(F3);
    auto a4 = enumerate_automorphisms(F4);
    CHECK(a2.size() == 2);
    CHECK(a3.size() == 6);
    CHECK(a4.size() == 48);

    // the nontrivial automorphism of R_2 swaps the idempotent coefficients
    RingAutomorphism swp(FieldAutomorphism(F2, 0), {1u, 0u});
    for (const auto& x : enumerate_ring_elements(F2)) {
        RingElement y = swp(x);
        CHECK(y.coord(0) == x.coord(1));
        CHECK(y.coord(1) == x.coord(0));
    }

    // every automorphism preserves 1, + and * (exhaustive for q <= 3)
    for (const FieldSpec* Fp : {&F2, &F3}) {
        auto elems = enumerate_ring_elements(*Fp);
        for (const auto& T : enumerate_automorphisms(*Fp)) {
            CHECK(T(RingElement::one(*Fp)).is_one());
            for (const auto& x : elems)
                for (const auto& y : elems) {
                    CHECK(T(x + y) == T(x) + T(y));
                    CHECK(T(x * y) == T(x) * T(y));
                }
        }
    }
    // sampled for R_4
    std::mt19937 rng(42);
    auto elems4 = enumerate_ring_elements(F4);
    std::uniform_int_distribution<size_t> pick(0, elems4.size() - 1);
    for (const auto& T : a4) {
        CHECK(T(RingElement::one(F4)).is_one());
        for (int t = 0; t < 40; ++t) {
            const auto &x = elems4[pick(rng)], &y = elems4[pick(rng)];
            CHECK(T(x + y) == T(x) + T(y));
            CHECK(T(x * y) == T(x) * T(y));
        }
    }

    // distinctness: as maps on R_3 all six differ
    for (size_t i = 0; i < a3.size(); ++i)
        for (size_t j = i + 1; j < a3.size(); ++j) {
            bool differ = false;
            for (const auto& x : enumerate_ring_elements(F3))
                if (a3[i](x) != a3[j](x)) {
                    differ = true;
                    break;
                }
            CHECK(differ);
        }

    // composition law, exhaustive on R_3
    for (const auto& f : a3)
        for (const auto& g : a3) {
            RingAutomorphism h = compose(f, g);
            for (const auto& x : enumerate_ring_elements(F3)) CHECK(h(x) == f(g(x)));
        }

    CHECK_THROWS_AS(enumerate_automorphisms(make_field(7, 1)), Error);  // guard
    CHECK_THROWS_AS(RingAutomorphism(FieldAutomorphism(F3, 0), {0u, 0u, 1u}), Error);
}

TEST_CASE("frobenius acts coordinatewise when sigma = id") {
    const FieldSpec& F4 = make_field(2, 2);
    FieldElement a = F4.beta();
    RingAutomorphism T = RingAutomorphism::coordinatewise(FieldAutomorphism(F4, 1));
    RingElement x = RingElement::from_coords(F4, {a, F4.zero(), F4.one(), a * a});
    RingElement y = T(x);
    CHECK(y == RingElement::from_coords(F4, {a * a, F4.zero(), F4.one(), a}));
    CHECK(RingAutomorphism::identity(F4)(x) == x);
    CHECK(T.inverse()(y) == x);
}

TEST_CASE("ring element text syntax") {
    for (auto pr : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const FieldSpec& F = make_field(pr.first, pr.second);
        for (const auto& x : enumerate_ring_elements(F)) {
            CHECK(parse_ring_element(F, to_vbasis_string(x)) == x);
            CHECK(parse_ring_element(F, to_crt_string(x)) == x);
        }
    }
    const FieldSpec& F4 = make_field(2, 2);
    CHECK(parse_ring_element(F4, "1 + a*v + v^3") ==
          from_poly_basis(F4, {F4.one(), F4.beta(), F4.zero(), F4.one()}));
    CHECK(parse_ring_element(F4, "[1,0,a,1]") ==
          RingElement::from_coords(F4, {F4.one(), F4.zero(), F4.beta(), F4.one()}));
    CHECK_THROWS_AS(parse_ring_element(F4, "v^4"), Error);
    CHECK_THROWS_AS(parse_ring_element(F4, "[1,0]"), Error);
}
