#include "doctest.h"
#include "ellrc/autgrp.hpp"
#include "ellrc/funcfield.hpp"
#include "ellrc/rng.hpp"
#include "oracle.hpp"

using namespace ellrc;

namespace {

FunctionField f49() {
    Field F = Field::make(7, 2);
    return FunctionField(Curve(F, F.zero(), F.zero(), F.zero(), F.zero(), F.from_int(2)));
}

Func random_in(const FunctionField& K, const std::vector<Func>& basis, SplitMix64& rng) {
    std::vector<Felt> c(basis.size());
    for (auto& v : c) v = rng.element(K.field());
    return K.combine(c, basis);
}

}  // namespace

TEST_CASE("pole divisors of x and y") {
    FunctionField K = f49();
    const Pt O = Pt::infinity();
    CHECK(K.valuation(K.x(), O) == -2);
    CHECK(K.valuation(K.y(), O) == -3);
    CHECK_THROWS_AS(K.evaluate(K.x(), O), Error);
    for (const Pt& P : K.curve().points()) {
        if (P.inf) continue;
        CHECK(K.valuation(K.x(), P) >= 0);
        CHECK(K.evaluate(K.x(), P) == P.x);
        CHECK(K.evaluate(K.y(), P) == P.y);
    }
}

TEST_CASE("canonical form") {
    FunctionField K = f49();
    const Field& F = K.field();
    Felt alpha = F.from_int(3);
    // (x^2 y + x)(x - a) / (x - a)^2 reduces to (x^2 y + x)/(x - a)
    Poly lin = poly::linear(F, alpha);
    Func f = K.make(poly::mul(F, Poly{F.zero(), F.one()}, lin), poly::mul(F, Poly{F.zero(), F.zero(), F.one()}, lin),
                    poly::scale(F, poly::mul(F, lin, lin), F.from_int(2)));
    CHECK(f.d.back() == F.one());
    CHECK(poly::degree(f.d) == 1);
    CHECK(K.is_constant(K.div(K.from_poly(lin), K.from_poly(lin))));
    CHECK(K.sub(K.mul(K.y(), K.y()), K.add(K.pow(K.x(), 3), K.constant(F.from_int(2)))).is_zero());
}

TEST_CASE("valuation of x - alpha") {
    // N = 1440 is even, so some places have y = -y
    Field F = Field::make(37, 2);
    FunctionField K(Curve(F, F.zero(), F.zero(), F.zero(), F.one(), F.zero()));
    int ramified = 0;
    for (const Pt& P : K.curve().points()) {
        if (P.inf) continue;
        Func f = K.from_poly(poly::linear(F, P.x));
        const bool two_torsion = P.y == F.neg(P.y);
        CHECK(K.valuation(f, P) == (two_torsion ? 2 : 1));
        ramified += two_torsion;
        auto e = K.local_expansion(f, P, 4);
        CHECK(e.series.val == K.valuation(f, P));
        CHECK(e.series.c[0] != F.zero());
        if (two_torsion) {
            // x - a = (y - b)^2 * unit, so the square of the y - b expansion has the same valuation
            Func g = K.sub(K.y(), K.constant(P.y));
            CHECK(K.valuation(K.mul(g, g), P) == 2);
        }
    }
    CHECK(ramified == 3);
}

TEST_CASE("evaluation") {
    FunctionField K = f49();
    const Field& F = K.field();
    for (const Pt& P : K.curve().points()) {
        CHECK(K.evaluate(K.constant(F.from_int(5)), P) == F.from_int(5));
        if (P.inf) continue;
        Func lin = K.from_poly(poly::linear(F, P.x));
        CHECK(K.evaluate(K.div(lin, lin), P) == F.one());
    }
}

TEST_CASE("Riemann-Roch spaces") {
    FunctionField K = f49();
    const Pt O = Pt::infinity();
    auto b2 = K.riemann_roch_basis(Divisor{{{O, 2}}});
    CHECK(b2.size() == 2);
    auto b3 = K.riemann_roch_basis(Divisor{{{O, 3}}});
    CHECK(b3.size() == 3);
    for (const Func& f : b3) CHECK(K.valuation(f, O) >= -3);
    auto H = torsion_subgroup(K.curve(), 7);
    auto D = Divisor::multiple_of(H, 2);
    auto basis = K.riemann_roch_basis(D);
    CHECK(basis.size() == 14);
    for (const Func& f : basis)
        for (const Pt& P : H) CHECK(K.valuation(f, P) >= -2);
    // evaluation away from H is injective
    std::vector<std::vector<Felt>> rows;
    for (const Func& f : basis) {
        std::vector<Felt> r;
        for (const Pt& P : K.curve().points()) {
            if (std::find(H.begin(), H.end(), P) != H.end()) continue;
            r.push_back(K.evaluate(f, P));
        }
        rows.push_back(r);
    }
    CHECK(oracle::rank(K.field(), rows) == 14);

    SplitMix64 rng(5);
    CHECK(K.coordinates_in_space(basis[0], basis)[0] == K.field().one());
    for (int i = 0; i < 100; ++i) {
        Func f = random_in(K, basis, rng);
        CHECK(K.combine(K.coordinates_in_space(f, basis), basis) == f);
    }
    std::vector<Felt> c(14, K.field().zero());
    c[1] = K.field().from_int(2);
    c[3] = K.field().one();
    CHECK(K.coordinates_in_space(K.combine(c, basis), basis) == c);
}

TEST_CASE("valuations are additive") {
    FunctionField K = f49();
    auto H = torsion_subgroup(K.curve(), 7);
    auto basis = K.riemann_roch_basis(Divisor::multiple_of(H, 2));
    SplitMix64 rng(11);
    const auto& pts = K.curve().points();
    for (int i = 0; i < 100; ++i) {
        Func f = random_in(K, basis, rng), g = random_in(K, basis, rng);
        if (f.is_zero() || g.is_zero()) continue;
        const Pt& P = pts[rng.below(pts.size())];
        CHECK(K.valuation(K.mul(f, g), P) == K.valuation(f, P) + K.valuation(g, P));
    }
}

TEST_CASE("substitution matches pointwise composition") {
    FunctionField K = f49();
    const Curve& C = K.curve();
    const Field& F = K.field();
    CHECK(K.substitute(K.x(), K.x(), K.neg(K.y())) == K.x());
    auto id = translation_maps(K, Pt::infinity());
    Func probe = K.add(K.mul(K.x(), K.y()), K.constant(F.one()));
    CHECK(K.substitute(probe, id.first, id.second) == probe);

    auto H = torsion_subgroup(C, 7);
    auto basis = K.riemann_roch_basis(Divisor::multiple_of(H, 2));
    SplitMix64 rng(21);
    const auto& pts = C.points();
    int checked = 0;
    while (checked < 100) {
        Func f = random_in(K, basis, rng);
        const Pt& Q = pts[rng.below(pts.size())];
        const bool negate = rng.below(2) == 1;
        auto tm = translation_maps(K, Q);
        Func g = K.substitute(f, tm.first, tm.second);
        if (negate) g = K.substitute(g, K.x(), K.neg(K.y()));
        const Pt& P = pts[rng.below(pts.size())];
        Pt image = C.add(negate ? C.neg(P) : P, Q);
        if (K.valuation(f, image) < 0) continue;
        CHECK(K.evaluate(g, P) == K.evaluate(f, image));
        ++checked;
    }
}

TEST_CASE("translation maps agree with the group law") {
    FunctionField K = f49();
    const Curve& C = K.curve();
    for (const Pt& Q : C.points()) {
        auto tm = translation_maps(K, Q);
        for (const Pt& P : C.points()) {
            Pt R = C.add(P, Q);
            if (R.inf) continue;
            CHECK(K.evaluate(tm.first, P) == R.x);
            CHECK(K.evaluate(tm.second, P) == R.y);
        }
    }
}

TEST_CASE("characteristic 2 function field") {
    Field F = Field::make(2, 6);
    FunctionField K(Curve(F, F.zero(), F.zero(), F.one(), F.zero(), F.zero()));
    CHECK(K.valuation(K.y(), Pt::infinity()) == -3);
    auto b = K.riemann_roch_basis(Divisor{{{Pt::infinity(), 5}}});
    CHECK(b.size() == 5);
    for (const Pt& P : K.curve().points()) {
        if (P.inf) continue;
        CHECK(K.valuation(K.from_poly(poly::linear(F, P.x)), P) == 1);
    }
}
