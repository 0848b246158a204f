#include "ellrc/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "ellrc/rng.hpp"

namespace ellrc {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::vector<Felt> random_message(const LrcCode& code, SplitMix64& rng) {
    std::vector<Felt> msg(code.k);
    do {
        for (auto& x : msg) x = rng.element(code.K.field());
    } while (std::all_of(msg.begin(), msg.end(), [](Felt x) { return x.v == 0; }));
    return msg;
}

bool in_row_space(const Field& F, const Matrix& G, const std::vector<Felt>& word) {
    Matrix M = G;
    M.append_row(word);
    return rank(F, M) == rank(F, G);
}

bool invertible(const Field& F, const Matrix& M) { return rank(F, M) == M.rows(); }

// M without column skip_col.
Matrix submatrix(const Matrix& M, std::size_t skip_col) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (c != skip_col) cols.push_back(c);
    return M.select_columns(cols);
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void VerifyReport::add(std::string name, bool ok, std::string details) {
    checks.push_back(Check{std::move(name), ok, std::move(details)});
}

void VerifyReport::merge(const VerifyReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    budget_used += other.budget_used;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("ELLRC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 100000000ULL;
}

std::size_t weight(const std::vector<Felt>& word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Felt x) { return x.v != 0; }));
}

std::size_t min_distance_exact(const Field& F, const Matrix& G, std::uint64_t budget) {
    const std::size_t k = G.rows();
    const std::size_t n = G.cols();
    if (k == 0) return n + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / F.order() + 1) throw Error(ErrorKind::BudgetExceeded, "q^k exceeds the budget");
        total *= F.order();
    }
    if (total > budget) throw Error(ErrorKind::BudgetExceeded, "q^k = " + str(total) + " exceeds the budget " + str(budget));

    std::size_t best = n + 1;
    std::vector<Felt> cw(n);
    std::vector<std::uint32_t> digits;
    // Messages whose first nonzero coordinate (at `lead`) equals 1.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::copy(G.row(lead).begin(), G.row(lead).end(), cw.begin());
        digits.assign(k - lead - 1, 0);
        while (true) {
            best = std::min(best, weight(cw));
            if (best == 1) return best;
            std::size_t j = 0;
            for (; j < digits.size(); ++j) {
                const Felt old{digits[j]};
                digits[j] = digits[j] + 1 == F.order() ? 0 : digits[j] + 1;
                const Felt delta = F.sub(Felt{digits[j]}, old);
                axpy(F, cw, delta, G.row(lead + 1 + j));
                if (digits[j] != 0) break;
            }
            if (j == digits.size()) break;
        }
    }
    return best;
}

std::size_t min_distance_exact(const LrcCode& code, std::uint64_t budget) {
    if (!code.has_generator()) throw Error(ErrorKind::InvalidArgument, "code has no generator matrix");
    return min_distance_exact(code.K.field(), code.generator, budget);
}

std::size_t sampled_min_weight(const LrcCode& code, std::size_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::size_t best = code.n + 1;
    for (std::size_t s = 0; s < samples; ++s) best = std::min(best, weight(encode(code, random_message(code, rng))));
    return best;
}

DistanceCertificate distance_certificate(const LrcCode& code, std::uint64_t seed, std::size_t samples) {
    const Field& F = code.K.field();
    DistanceCertificate out;
    out.lower = code.d_lower();
    if (code.mode == CodeMode::Single) {
        out.witness.assign(code.n, F.one());
        for (std::size_t pos = 0; pos < code.n; ++pos) {
            const Felt a = code.fibers[pos / code.fiber_size()].alpha;
            for (int i = 0; i < code.t; ++i) out.witness[pos] = F.mul(out.witness[pos], F.sub(a, code.fibers[i].alpha));
        }
        out.witness_weight = weight(out.witness);
    } else if (code.has_generator()) {
        SplitMix64 rng(seed);
        out.witness_weight = code.n + 1;
        for (std::size_t s = 0; s < samples; ++s) {
            auto cw = encode(code, random_message(code, rng));
            const std::size_t w = weight(cw);
            if (w < out.witness_weight) {
                out.witness_weight = w;
                out.witness = std::move(cw);
            }
        }
    }
    out.exact = !out.witness.empty() && out.witness_weight == out.lower;
    return out;
}

VerifyReport repair_audit(const LrcCode& code, std::size_t trials, std::uint64_t seed) {
    VerifyReport rep;
    rep.seed = seed;
    const Field& F = code.K.field();
    const std::size_t sets = code.mode == CodeMode::Two ? 2 : 1;
    const auto loc = code.localities();

    bool disjoint = true;
    bool sizes = true;
    for (std::size_t pos = 0; pos < code.n; ++pos) {
        const auto rs = recovering_sets(code, pos);
        if (std::count(rs.I1.begin(), rs.I1.end(), pos) || std::count(rs.I2.begin(), rs.I2.end(), pos)) disjoint = false;
        std::vector<std::size_t> both;
        std::set_intersection(rs.I1.begin(), rs.I1.end(), rs.I2.begin(), rs.I2.end(), std::back_inserter(both));
        if (!both.empty()) disjoint = false;
        if (rs.I1.size() != static_cast<std::size_t>(loc[0])) sizes = false;
        if (sets == 2 && rs.I2.size() != static_cast<std::size_t>(loc[1])) sizes = false;
    }
    rep.add("recovering_sets.disjoint", disjoint, "I1, I2 and the position are pairwise disjoint for all n = " + str(code.n));
    rep.add("recovering_sets.sizes", sizes, "set sizes equal the localities");

    if (!code.has_generator()) {
        rep.add("repair.round_trip", true, "skipped: no generator matrix");
        return rep;
    }
    SplitMix64 rng(seed);
    std::size_t attempts = 0, failures = 0;
    std::vector<Felt> first_random;
    for (std::size_t trial = 0; trial <= trials; ++trial) {
        // trial 0 is the zero codeword
        std::vector<Felt> cw = trial == 0 ? std::vector<Felt>(code.n, F.zero()) : encode(code, random_message(code, rng));
        if (trial == 1) first_random = cw;
        std::vector<std::optional<Felt>> word(cw.begin(), cw.end());
        for (std::size_t pos = 0; pos < code.n; ++pos) {
            word[pos].reset();
            for (std::size_t s = 1; s <= sets; ++s) {
                ++attempts;
                try {
                    if (repair(code, word, pos, static_cast<int>(s)) != cw[pos]) ++failures;
                } catch (const Error&) {
                    ++failures;
                }
            }
            word[pos] = cw[pos];
        }
    }
    rep.add("repair.round_trip", failures == 0,
            str(attempts - failures) + "/" + str(attempts) + " repairs correct over " + str(trials) +
                " random codewords and the zero word");

    if (!first_random.empty()) {
        // A corrupted helper must change the repaired value.
        bool sensitive = true;
        for (std::size_t s = 1; s <= sets; ++s) {
            const auto rs = recovering_sets(code, 0);
            const auto& I = s == 1 ? rs.I1 : rs.I2;
            if (I.empty()) continue;
            std::vector<std::optional<Felt>> word(first_random.begin(), first_random.end());
            word[0].reset();
            word[I.front()] = F.add(*word[I.front()], F.one());
            if (repair(code, word, 0, static_cast<int>(s)) == first_random[0]) sensitive = false;
        }
        rep.add("repair.helper_sensitivity", sensitive, "corrupting one helper symbol changes the repaired value");
    }
    return rep;
}

VerifyReport matrix_audit(const LrcCode& code) {
    VerifyReport rep;
    const Field& F = code.K.field();
    const Curve& C = code.K.curve();
    const GroupSpec& local = code.mode == CodeMode::Single ? code.G : code.G1;
    const GroupSpec& second = code.mode == CodeMode::Single ? code.G : code.G2;
    const int r = code.mode == CodeMode::Single ? code.r : code.r1;

    // Every r x r submatrix of the (r + 1)-point orbit matrix.
    std::set<Pt> seen;
    std::size_t orbits = 0, bad = 0;
    for (const Pt& P : code.places) {
        if (seen.count(P)) continue;
        const auto orb = orbit(C, local, P);
        seen.insert(orb.begin(), orb.end());
        ++orbits;
        const Matrix M = e_matrix(code, orb, r, 1);
        for (std::size_t drop = 0; drop < orb.size(); ++drop)
            if (!invertible(F, submatrix(M, drop))) ++bad;
    }
    rep.add("matrix.all_minors", bad == 0,
            str(orbits) + " orbits of size " + str(static_cast<std::uint64_t>(r) + 1) + ", " + str(bad) +
                " singular r x r submatrices");

    // M' for every place outside E[|H|].
    const auto h = static_cast<std::int64_t>(code.H.size());
    const std::size_t size = second.order() - code.H.size();
    std::size_t checked = 0, skipped = 0;
    bad = 0;
    if (size > 0) {
        for (const Pt& P : code.places) {
            if (C.scalar_mul(h, P).inf) {
                ++skipped;
                continue;
            }
            std::set<Pt> th;
            for (const Pt& Q : code.H) th.insert(C.add(P, Q));
            std::vector<Pt> pts;
            for (const Pt& Q : orbit(C, second, P))
                if (!th.count(Q)) pts.push_back(Q);
            ++checked;
            if (!invertible(F, e_matrix(code, pts, static_cast<int>(size), code.mode == CodeMode::Two ? 2 : 1))) ++bad;
        }
    }
    rep.add("matrix.m_prime", bad == 0,
            str(checked) + " places checked, " + str(skipped) + " in E[|H|] skipped, " + str(bad) + " singular");
    return rep;
}

VerifyReport structure_audit(const LrcCode& code) {
    VerifyReport rep;
    const FunctionField& K = code.K;
    const Curve& C = K.curve();

    auto invariance = [&](const std::string& name, const Func& z, const GroupSpec& G) {
        std::size_t bad = 0;
        for (const Pt& P : code.places) {
            const Felt v = K.evaluate(z, P);
            for (const auto& g : G.elements)
                if (K.evaluate(z, apply(C, g, P)) != v) ++bad;
        }
        rep.add(name, bad == 0, str(code.places.size() * G.order()) + " pairs (P, g), " + str(bad) + " violations");
    };
    invariance("fixed_field.z_invariant", code.z, code.G);
    if (code.mode == CodeMode::Two) {
        invariance("fixed_field.z1_invariant", code.z1, code.G1);
        invariance("fixed_field.z2_invariant", code.z2, code.G2);
    }

    auto pole_divisor = [&](const std::string& name, const Func& z, std::size_t a) {
        bool ok = true;
        for (const Pt& P : code.H) ok = ok && K.valuation(z, P) == -static_cast<int>(a);
        rep.add(name, ok, "v_P = -" + str(a) + " at every P in H");
    };
    pole_divisor("fixed_field.z_poles", code.z, code.G.A.size());
    if (code.mode == CodeMode::Two) {
        pole_divisor("fixed_field.z1_poles", code.z1, code.G1.A.size());
        pole_divisor("fixed_field.z2_poles", code.z2, code.G2.A.size());
    }

    Pt hsum = Pt::infinity();
    for (const Pt& Q : code.H) hsum = C.add(hsum, Q);
    const Pt target = C.scalar_mul(static_cast<std::int64_t>(code.G.A.size()), hsum);
    std::size_t bad = 0;
    for (const auto& fib : code.fibers) {
        Pt s = Pt::infinity();
        for (const Pt& P : fib.places) s = C.add(s, P);
        if (!(C.sub(s, target).inf)) ++bad;
    }
    rep.add("fibers.abel_sum", bad == 0, str(code.fibers.size()) + " fibers, " + str(bad) + " violations");

    bool fiber_z = true;
    for (std::size_t pos = 0; pos < code.n; ++pos)
        fiber_z = fiber_z && K.evaluate(code.z, code.places[pos]) == code.fibers[pos / code.fiber_size()].alpha;
    rep.add("fibers.level_sets", fiber_z, "z equals the fiber's alpha at every place");

    auto e_check = [&](const std::string& name, const EBasis& e) {
        bool dims = true, pattern = true;
        for (std::size_t i = 2; i <= e.funcs.size(); ++i) {
            const auto orders = e_pole_orders(e.H.size(), static_cast<int>(i));
            Divisor D;
            for (std::size_t j = 0; j < e.H.size(); ++j)
                if (orders[j] > 0) D.terms.emplace_back(e.H[j], orders[j]);
            dims = dims && K.riemann_roch_basis(D).size() == static_cast<std::size_t>(D.degree());
            for (std::size_t j = 0; j < e.H.size(); ++j) {
                const int v = K.valuation(e.funcs[i - 1], e.H[j]);
                pattern = pattern && (orders[j] > 0 ? v == -orders[j] : v >= 0);
            }
        }
        rep.add(name + ".riemann_roch", dims, "l(D_i) = deg D_i for i = 2.." + str(e.funcs.size()));
        rep.add(name + ".pole_pattern", pattern, "exact staircase pole orders on H");
    };
    e_check("e_basis", code.e);
    if (!code.e2.funcs.empty()) e_check("e2_basis", code.e2);
    {
        const auto D = Divisor::multiple_of(code.H, static_cast<int>(code.G.A.size()));
        rep.add("fixed_field.riemann_roch", K.riemann_roch_basis(D).size() == static_cast<std::size_t>(D.degree()),
                "l(|A| sum H) = |A||H|");
    }
    return rep;
}

VerifyReport theorem_audit(const LrcCode& code, std::optional<std::size_t> exact_distance) {
    VerifyReport rep;
    const Field& F = code.K.field();
    const Curve& C = code.K.curve();
    const auto n = static_cast<std::int64_t>(code.n);
    const auto k = static_cast<std::int64_t>(code.k);
    const auto hs = static_cast<std::int64_t>(code.H.size());
    const auto N = static_cast<std::int64_t>(C.count());
    rep.add("hypothesis.fibers", code.m <= code.available_fibers,
            "m = " + str(code.m) + " of " + str(code.available_fibers) + " completely split fibers");
    if (code.has_generator())
        rep.add("code.rank", rank(F, code.generator) == code.k, "generator rank equals k = " + str(code.k));

    if (code.mode == CodeMode::Single) {
        const std::int64_t r = code.r, t = code.t, m = static_cast<std::int64_t>(code.m);
        const std::int64_t d = (m - t) * (r + 1);
        rep.add("single.length", n == m * (r + 1), "n = m(r+1) = " + str(static_cast<std::uint64_t>(n)));
        rep.add("single.locality", r + 1 == hs * static_cast<std::int64_t>(code.A.size()), "r + 1 = |H||A|");
        rep.add("single.dimension", k == r * t + 1, "k = rt+1 = " + str(static_cast<std::uint64_t>(k)));
        rep.add("single.range", t >= 1 && t < m, "1 <= t < m");
        rep.add("single.design_distance", static_cast<std::int64_t>(code.d_lower()) == d,
                "n - t(r+1) = (m-t)(r+1) = " + str(static_cast<std::uint64_t>(d)));
        const auto cert = distance_certificate(code);
        bool member = !code.has_generator() || in_row_space(F, code.generator, cert.witness);
        rep.add("single.witness", cert.exact && member,
                "prod (z - alpha_i) has weight " + str(cert.witness_weight) + (member ? ", in the code" : ", NOT in the code"));
        const auto b = bounds(n, k, d, {r});
        rep.add("single.optimal", b.classical == d,
                "classical bound " + std::to_string(b.classical) + " vs d = " + std::to_string(d));
        const bool hh = N % hs == 0 && std::gcd(hs, N / hs) == 1;
        std::string range = "paper range: ";
        if (hh) range += "h||N gives m <= " + std::to_string(m_range::single_ha(N, hs, r));
        if (code.A.size() == 2 && N % hs == 0)
            range += std::string(hh ? "; " : "") + "h|N, r = 2h-1 gives m <= " + std::to_string(m_range::single_2h(N, r));
        rep.add("single.m_range", code.m <= code.available_fibers, range + "; fibers found " + str(code.available_fibers));
        if (exact_distance)
            rep.add("single.exact_distance", static_cast<std::int64_t>(*exact_distance) == d,
                    "brute force d = " + str(*exact_distance));
        return rep;
    }

    const std::int64_t a1 = static_cast<std::int64_t>(code.A1.size()), a2 = static_cast<std::int64_t>(code.A2.size());
    const std::int64_t m = static_cast<std::int64_t>(code.m);
    rep.add("two.group_order", static_cast<std::int64_t>(code.G.order()) == hs * a1 * a2, "|G| = |H||A1||A2|");
    {
        std::set<AutoMap> s1(code.A1.begin(), code.A1.end());
        std::size_t common = 0;
        for (const auto& a : code.A2) common += s1.count(a);
        rep.add("two.trivial_intersection", common == 1, "|A1 cap A2| = 1");
    }
    rep.add("two.length", n == m * hs * a1 * a2, "n = m|H||A1||A2| = " + str(static_cast<std::uint64_t>(n)));
    rep.add("two.localities", code.r1 == hs * a1 - 1 && code.r2 == hs * (a2 - 1),
            "(r1, r2) = (" + std::to_string(code.r1) + ", " + std::to_string(code.r2) + ")");
    const std::int64_t t1 = (n - code.d0) / (code.r1 + 1), t2 = (n - code.d0) / (code.r2 + hs);
    const std::int64_t L = std::max(t1 * (code.r1 + 1), t2 * (code.r2 + hs));
    const std::int64_t klow = t1 * code.r1 + t2 * code.r2 + 2 - L;
    rep.add("two.parameters", t1 == code.t1 && t2 == code.t2 && L == code.L,
            "t1 = " + std::to_string(t1) + ", t2 = " + std::to_string(t2) + ", L = " + std::to_string(L));
    rep.add("two.dimension_bound", k >= klow, "k = " + std::to_string(k) + " >= " + std::to_string(klow));
    rep.add("two.design_distance", n - L >= code.d0, "n - L = " + std::to_string(n - L) + " >= d0 = " + std::to_string(code.d0));
    if (code.exclude_torsion) {
        bool ok = true;
        for (const Pt& P : code.places) ok = ok && !C.scalar_mul(hs, P).inf;
        rep.add("two.torsion_filter", ok, "no place lies in E[|H|]");
    }
    const std::uint64_t q = F.order(), s = isqrt(q);
    const bool maximal = s * s == q && static_cast<std::uint64_t>(N) == q + 2 * s + 1;
    const std::uint64_t h = isqrt(static_cast<std::uint64_t>(hs));
    if (maximal && h * h == static_cast<std::uint64_t>(hs) && torsion_subgroup(C, h).size() == code.H.size()) {
        const auto tc = check_torsion_condition(q, h, static_cast<std::uint64_t>(a1), static_cast<std::uint64_t>(a2));
        const auto excess = torsion_excess(C, h);
        rep.add("two.torsion_condition", tc.holds || code.exclude_torsion,
                "h^2|A1||A2| = " + str(tc.lhs) + (tc.holds ? " > " : " <= ") + str(tc.rhs) +
                    (tc.holds ? "" : " (fibers filtered directly)"));
        rep.add("two.torsion_count", excess == tc.rhs,
                "|E[h^2]| - |E[h]| = " + str(excess) + " by enumeration, " + str(tc.rhs) + " from the factorization");
        rep.add("two.m_range", true,
                "paper range m <= " + std::to_string(m_range::two_maximal(static_cast<std::int64_t>(q), static_cast<std::int64_t>(h), a1, a2)) +
                    "; fibers found " + str(code.available_fibers));
    }
    if (exact_distance)
        rep.add("two.exact_distance", static_cast<std::int64_t>(*exact_distance) >= n - L,
                "brute force d = " + str(*exact_distance) + " >= n - L = " + std::to_string(n - L));
    return rep;
}

VerifyReport curve_sanity(const Curve& C, std::optional<CurveFamily> family) {
    VerifyReport rep;
    const auto q = static_cast<std::int64_t>(C.field().order());
    const auto N = static_cast<std::int64_t>(C.count());
    const std::int64_t a = N - q - 1;
    rep.add("curve.hasse_weil", a * a <= 4 * q, "N = " + std::to_string(N) + ", |N - q - 1| <= 2 sqrt(q)");

    const auto& pts = C.points();
    const std::size_t stride = pts.size() <= 20000 ? 1 : pts.size() / 20000;
    bool killed = true;
    for (std::size_t i = 0; i < pts.size(); i += stride) killed = killed && C.scalar_mul(N, pts[i]).inf;
    rep.add("curve.order_kills", killed, stride == 1 ? "[N]P = O for every point" : "[N]P = O on a strided sample");

    SplitMix64 rng(7);
    bool assoc = true;
    if (pts.size() <= 100) {
        for (const Pt& P : pts)
            for (const Pt& Q : pts)
                for (const Pt& R : pts) assoc = assoc && C.add(C.add(P, Q), R) == C.add(P, C.add(Q, R));
    } else {
        for (int i = 0; i < 10000; ++i) {
            const Pt& P = pts[rng.below(pts.size())];
            const Pt& Q = pts[rng.below(pts.size())];
            const Pt& R = pts[rng.below(pts.size())];
            assoc = assoc && C.add(C.add(P, Q), R) == C.add(P, C.add(Q, R));
        }
    }
    rep.add("curve.associativity", assoc, pts.size() <= 100 ? "exhaustive" : "10000 sampled triples");

    const auto& st = C.structure();
    const bool shape = st.n2 % st.n1 == 0 && st.n1 * st.n2 == static_cast<std::uint64_t>(N) &&
                       C.order_of(st.g2) == st.n2 && torsion_subgroup(C, st.n1).size() == st.n1 * st.n1;
    rep.add("curve.structure", shape, "Z/" + str(st.n1) + " x Z/" + str(st.n2));
    if (family) {
        const auto target = family_target_count(*family, static_cast<std::uint64_t>(q));
        rep.add("curve.family_count", static_cast<std::uint64_t>(N) == target,
                std::string(to_string(*family)) + " target " + str(target));
    }
    return rep;
}

VerifyReport verify_code(const LrcCode& code, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.seed = opts.seed;
    rep.budget = opts.budget ? opts.budget : default_budget();
    rep.merge(curve_sanity(code.K.curve()));
    rep.merge(structure_audit(code));
    rep.merge(matrix_audit(code));
    rep.merge(repair_audit(code, opts.repair_trials, opts.seed));

    std::optional<std::size_t> exact;
    if (opts.exact_distance) {
        try {
            exact = min_distance_exact(code, rep.budget);
            rep.add("distance.exact", true, "d = " + str(*exact));
        } catch (const Error& e) {
            rep.add("distance.exact", false, e.what());
        }
    }
    const auto cert = distance_certificate(code, opts.seed);
    if (code.mode == CodeMode::Two && code.has_generator()) {
        rep.add("distance.certificate", cert.witness_weight >= cert.lower,
                "lightest sampled codeword " + str(cert.witness_weight) + " >= n - L = " + str(cert.lower));
    }
    if (exact) {
        rep.add("distance.consistent", *exact >= cert.lower && (cert.witness.empty() || *exact <= cert.witness_weight),
                "lower " + str(cert.lower) + " <= d <= witness " + str(cert.witness_weight));
    }
    rep.merge(theorem_audit(code, exact));
    return rep;
}

}  // namespace ellrc
