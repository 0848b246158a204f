#include "doctest.h"
#include "ellrc/rng.hpp"
#include "ellrc/verify.hpp"

using namespace ellrc;

namespace {

struct F49 {
    Field F = Field::make(7, 2);
    Curve E{F, F.zero(), F.zero(), F.zero(), F.zero(), F.from_int(2)};
    FunctionField K{E};
    std::vector<Pt> H = subgroup_of_order(E, 7);
    std::vector<AutoMap> A = parse_aut_group(E, "neg");
};

struct F64 {
    Field F = Field::make(2, 6);
    Curve E{F, F.zero(), F.zero(), F.one(), F.zero(), F.zero()};
    FunctionField K{E};
    std::vector<Pt> H = subgroup_of_order(E, 3);
};

// minimum weight over all q^k - 1 nonzero messages, no scalar reduction
std::size_t naive_distance(const Field& F, const Matrix& G) {
    const std::size_t k = G.rows();
    std::vector<std::uint32_t> digits(k, 0);
    std::size_t best = G.cols();
    while (true) {
        std::size_t i = 0;
        while (i < k && ++digits[i] == F.order()) digits[i++] = 0;
        if (i == k) break;
        std::vector<Felt> msg(k);
        for (std::size_t j = 0; j < k; ++j) msg[j] = Felt{digits[j]};
        best = std::min(best, weight(vec_mat(F, msg, G)));
    }
    return best;
}

bool all_ok(const VerifyReport& rep) {
    for (const auto& c : rep.checks) {
        if (!c.ok) MESSAGE(c.name << ": " << c.details);
    }
    return rep.ok();
}

}  // namespace

TEST_CASE("exact distance of a repetition code") {
    Field F = Field::make(7, 2);
    Matrix G(1, 12);
    for (std::size_t c = 0; c < 12; ++c) G.at(0, c) = F.from_int(static_cast<std::int64_t>(c % 6 + 1));
    CHECK(min_distance_exact(F, G, 1000) == 12);
}

TEST_CASE("exact distance agrees with naive enumeration") {
    F64 c;
    auto code = build_code_two(c.K, c.H, parse_aut_group(c.E, "zeta3"), parse_aut_group(c.E, "y+1"), 1, 12);
    REQUIRE(code.k <= 3);
    const auto d = min_distance_exact(code, 1u << 20);
    CHECK(d == naive_distance(c.F, code.generator));
    CHECK(d >= code.n - static_cast<std::size_t>(code.L));

    // a random small code too
    Field F = Field::make(5, 1);
    SplitMix64 rng(8);
    Matrix G(3, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 9; ++j) G.at(i, j) = rng.element(F);
    CHECK(min_distance_exact(F, G, 1000) == naive_distance(F, G));
}

TEST_CASE("budget refusal") {
    F49 c;
    auto code = build_code_single(c.K, c.H, c.A, 2, 1);
    CHECK_THROWS_AS(min_distance_exact(code, 100000000), Error);
    try {
        min_distance_exact(code, 100000000);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("distance certificates") {
    F49 c;
    auto code = build_code_single(c.K, c.H, c.A, 4, 2);
    auto cert = distance_certificate(code);
    CHECK(cert.lower == 28);
    CHECK(cert.witness_weight == 28);
    CHECK(cert.exact);
    CHECK(weight(cert.witness) == 28);
    // sharpness on m = 2, t = 1
    auto small = distance_certificate(build_code_single(c.K, c.H, c.A, 2, 1));
    CHECK(small.exact);
    CHECK(small.lower == 14);

    Field F = Field::make(13, 4);
    Curve E(F, F.zero(), F.zero(), F.zero(), F.zero(), F.from_int(2));
    FunctionField K(E);
    auto c13 = build_code_single(K, subgroup_of_order(E, 9), parse_aut_group(E, "neg"), 3, 1);
    auto cert13 = distance_certificate(c13);
    CHECK(cert13.lower == 36);
    CHECK(cert13.witness_weight == 36);
}

TEST_CASE("repair audit") {
    F64 c;
    auto code = build_code_two(c.K, c.H, parse_aut_group(c.E, "y+1"), parse_aut_group(c.E, "zeta3"), 3, 36);
    auto rep = repair_audit(code, 100, 1);
    CHECK(all_ok(rep));
    bool saw_round_trip = false, saw_sensitivity = false;
    for (const auto& ch : rep.checks) {
        saw_round_trip = saw_round_trip || ch.name == "repair.round_trip";
        saw_sensitivity = saw_sensitivity || ch.name == "repair.helper_sensitivity";
    }
    CHECK(saw_round_trip);
    CHECK(saw_sensitivity);
    // determinism
    auto again = repair_audit(code, 100, 1);
    REQUIRE(again.checks.size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) CHECK(again.checks[i].details == rep.checks[i].details);
}

TEST_CASE("structure and matrix audits") {
    F49 c;
    auto code = build_code_single(c.K, c.H, c.A, 4, 2);
    CHECK(all_ok(structure_audit(code)));
    CHECK(all_ok(matrix_audit(code)));
    F64 d;
    auto two = build_code_two(d.K, d.H, parse_aut_group(d.E, "y+1"), parse_aut_group(d.E, "zeta3"), 2, 18);
    CHECK(all_ok(structure_audit(two)));
    CHECK(all_ok(matrix_audit(two)));
}

TEST_CASE("theorem audit") {
    F49 c;
    auto code = build_code_single(c.K, c.H, c.A, 4, 2);
    auto rep = theorem_audit(code);
    CHECK(all_ok(rep));
    // a dimension below the lower bound is caught
    F64 d;
    auto two = build_code_two(d.K, d.H, parse_aut_group(d.E, "y+1"), parse_aut_group(d.E, "zeta3"), 3, 36);
    CHECK(theorem_audit(two).ok());
    auto broken = two;
    broken.k = static_cast<std::size_t>(two.k_lower - 1);
    CHECK_FALSE(theorem_audit(broken).ok());
}

TEST_CASE("curve sanity") {
    F49 c;
    CHECK(all_ok(curve_sanity(c.E, CurveFamily::OrdJ0)));
    Field F37 = Field::make(37, 2);
    CHECK(all_ok(curve_sanity(Curve(F37, F37.zero(), F37.zero(), F37.zero(), F37.one(), F37.zero()), CurveFamily::OrdJ1728)));
    Field F7 = Field::prime(7);
    for (std::int64_t a4 = 0; a4 < 7; ++a4)
        for (std::int64_t a6 = 0; a6 < 7; ++a6) {
            if ((4 * a4 * a4 * a4 + 27 * a6 * a6) % 7 == 0) continue;
            CHECK(curve_sanity(Curve(F7, F7.zero(), F7.zero(), F7.zero(), F7.from_int(a4), F7.from_int(a6))).ok());
        }
    // the j0 target is wrong for y^2 = x^3 + x over F_{37^2}
    CHECK_FALSE(curve_sanity(Curve(F37, F37.zero(), F37.zero(), F37.zero(), F37.one(), F37.zero()), CurveFamily::OrdJ0).ok());
}

TEST_CASE("verify_code is reproducible") {
    F64 c;
    auto code = build_code_two(c.K, c.H, parse_aut_group(c.E, "zeta3"), parse_aut_group(c.E, "y+1"), 1, 12);
    VerifyOptions o;
    o.exact_distance = true;
    o.repair_trials = 20;
    o.seed = 5;
    auto a = verify_code(code, o);
    auto b = verify_code(code, o);
    CHECK(all_ok(a));
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].details == b.checks[i].details);
    }
}
