#include <algorithm>
#include <set>

#include "doctest.h"
#include "ellrc/curve.hpp"
#include "ellrc/rng.hpp"
#include "oracle.hpp"

using namespace ellrc;

namespace {

Curve short_curve(const Field& F, std::int64_t a4, std::int64_t a6) {
    return Curve(F, F.zero(), F.zero(), F.zero(), F.from_int(a4), F.from_int(a6));
}

Curve char2_curve() {
    Field F = Field::make(2, 6);
    return Curve(F, F.zero(), F.zero(), F.one(), F.zero(), F.zero());
}

}  // namespace

TEST_CASE("point counts") {
    Curve E49 = short_curve(Field::make(7, 2), 0, 2);
    CHECK(E49.count() == 63);
    CHECK(oracle::count_points(E49) == 63);
    Curve E64 = char2_curve();
    CHECK(E64.count() == 81);
    CHECK(oracle::count_points(E64) == 81);
    CHECK(short_curve(Field::make(37, 2), 1, 0).count() == 1440);
    CHECK(count_points(short_curve(Field::make(13, 4), 0, 2)) == 28899);
}

TEST_CASE("point enumeration agrees with brute force on small fields") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        Field F = Field::prime(p);
        for (std::int64_t a4 = 0; a4 < p; ++a4)
            for (std::int64_t a6 = 0; a6 < p; ++a6) {
                if ((4 * a4 * a4 * a4 + 27 * a6 * a6) % p == 0) continue;
                Curve C = short_curve(F, a4, a6);
                CHECK(C.count() == oracle::count_points(C));
                const auto t = static_cast<std::int64_t>(C.count()) - p - 1;
                CHECK(t * t <= 4 * static_cast<std::int64_t>(p));
            }
    }
}

TEST_CASE("singular curve is rejected") {
    CHECK_THROWS_AS(short_curve(Field::prime(7), 0, 0), Error);
}

TEST_CASE("group law") {
    Curve E = short_curve(Field::make(7, 2), 0, 2);
    const Field& F = E.field();
    const auto& pts = E.points();
    for (const Pt& P : pts) {
        CHECK(E.add(P, Pt::infinity()) == P);
        CHECK(E.add(P, E.neg(P)).inf);
        CHECK(E.scalar_mul(63, P).inf);
    }
    // exhaustive associativity
    bool assoc = true;
    for (const Pt& P : pts)
        for (const Pt& Q : pts)
            for (const Pt& R : pts) assoc = assoc && E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R));
    CHECK(assoc);
    // P, Q and -(P + Q) are collinear
    for (const Pt& P : pts) {
        for (const Pt& Q : pts) {
            if (P.inf || Q.inf || P.x == Q.x) continue;
            Pt R = E.neg(E.add(P, Q));
            Felt lam = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
            CHECK(F.sub(R.y, P.y) == F.mul(lam, F.sub(R.x, P.x)));
        }
    }
}

TEST_CASE("characteristic 2 negation and law") {
    Curve E = char2_curve();
    const Field& F = E.field();
    for (const Pt& P : E.points()) {
        if (P.inf) continue;
        CHECK(E.neg(P) == Pt::affine(P.x, F.add(P.y, F.one())));
        CHECK(E.scalar_mul(81, P).inf);
        CHECK(E.contains(E.add(P, P)));
    }
    SplitMix64 rng(4);
    const auto& pts = E.points();
    for (int i = 0; i < 2000; ++i) {
        const Pt& P = pts[rng.below(pts.size())];
        const Pt& Q = pts[rng.below(pts.size())];
        const Pt& R = pts[rng.below(pts.size())];
        CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
    }
}

TEST_CASE("characteristic 3 long form") {
    Field F = Field::make(3, 3);
    // y^2 + xy = x^3 + x^2 + 1
    Curve E(F, F.one(), F.one(), F.zero(), F.zero(), F.one());
    CHECK(E.count() == oracle::count_points(E));
    const auto& pts = E.points();
    for (const Pt& P : pts)
        for (const Pt& Q : pts) {
            CHECK(E.contains(E.add(P, Q)));
            CHECK(E.add(P, Q) == E.add(Q, P));
        }
    for (const Pt& P : pts) CHECK(E.scalar_mul(static_cast<std::int64_t>(E.count()), P).inf);
}

TEST_CASE("group structure") {
    const auto& s64 = char2_curve().structure();
    CHECK(s64.n1 == 9);
    CHECK(s64.n2 == 9);
    Curve E = short_curve(Field::make(7, 2), 0, 2);
    const auto& s = E.structure();
    CHECK(s.n1 * s.n2 == 63);
    CHECK(48 % s.n1 == 0);
    CHECK(torsion_subgroup(E, s.n1).size() == s.n1 * s.n1);
    // brute force: the largest element order is n2
    std::uint64_t best = 0;
    for (const Pt& P : E.points()) best = std::max(best, E.order_of(P));
    CHECK(best == s.n2);
}

TEST_CASE("torsion and chosen subgroups") {
    Curve E49 = short_curve(Field::make(7, 2), 0, 2);
    CHECK(torsion_subgroup(E49, 7).size() == 7);
    CHECK(torsion_subgroup(E49, 1) == std::vector<Pt>{Pt::infinity()});
    CHECK(torsion_subgroup(short_curve(Field::make(37, 2), 1, 0), 5).size() == 5);
    CHECK(subgroup_of_order(E49, 1) == std::vector<Pt>{Pt::infinity()});
    CHECK_THROWS_AS(subgroup_of_order(E49, 4), Error);

    Curve E64 = char2_curve();
    const Field& F = E64.field();
    auto H = subgroup_of_order(E64, 3);
    std::set<Pt> got(H.begin(), H.end());
    std::set<Pt> want{Pt::affine(F.zero(), F.one()), Pt::affine(F.zero(), F.zero()), Pt::infinity()};
    CHECK(got == want);
    CHECK(H.back().inf);

    // closure for every h with a subgroup on the F_64 curve
    for (std::uint64_t h : {1u, 3u, 9u, 27u, 81u}) {
        auto S = subgroup_of_order(E64, h);
        CHECK(S.size() == h);
        std::set<Pt> ss(S.begin(), S.end());
        for (const Pt& P : S)
            for (const Pt& Q : S) CHECK(ss.count(E64.sub(P, Q)));
    }
}

TEST_CASE("torsion subgroup of order 9 over F_{13^4}") {
    Curve E = short_curve(Field::make(13, 4), 0, 2);
    auto H = subgroup_of_order(E, 9);
    CHECK(H.size() == 9);
    auto T = torsion_subgroup(E, 9);
    CHECK(std::set<Pt>(H.begin(), H.end()) == std::set<Pt>(T.begin(), T.end()));
}

TEST_CASE("special primes") {
    auto eis = find_special_primes(PrimeFamily::Eisenstein, 100);
    std::vector<std::uint64_t> ep;
    for (auto s : eis) ep.push_back(s.p);
    CHECK(ep == std::vector<std::uint64_t>{7, 19, 37, 61});
    auto gau = find_special_primes(PrimeFamily::Gaussian, 50);
    std::vector<std::uint64_t> gp;
    for (auto s : gau) gp.push_back(s.p);
    CHECK(gp == std::vector<std::uint64_t>{5, 17, 37});
    CHECK(find_special_primes(PrimeFamily::Eisenstein, 1).empty());
    // 13^2 = 3*7^2 + 3*7 + 1
    CHECK(3 * 49 + 3 * 7 + 1 == 169);
}

TEST_CASE("family curves") {
    Curve C = find_special_curve(Field::make(7, 2), CurveFamily::OrdJ0);
    CHECK(C.count() == 63);
    CHECK(short_curve(Field::make(7, 2), 0, 2).count() == 63);
    CHECK(find_special_curve(Field::make(37, 2), CurveFamily::OrdJ1728).count() == 1440);
    CHECK(find_special_curve(Field::make(37, 2), CurveFamily::OrdJ1728).a4() == Field::make(37, 2).one());
    CHECK_THROWS_AS(find_special_curve(Field::make(5, 2), CurveFamily::OrdJ0), Error);
    CHECK(find_special_curve(CurveFamily::MaxChar2, 64).count() == 81);
    Curve M = find_special_curve(CurveFamily::Max, 15625);
    CHECK(M.count() == 15625 + 250 + 1);
}

TEST_CASE("point text form") {
    Curve E = short_curve(Field::make(7, 2), 0, 2);
    for (const Pt& P : E.points()) CHECK(E.parse_point(E.render(P)) == P);
    CHECK(E.points().front().inf);
    CHECK(std::is_sorted(E.points().begin(), E.points().end()));
}
