#include "ellrc/autgrp.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "ellrc/matrix.hpp"

namespace ellrc {

AutoMap identity_map(const Field& F) { return AutoMap{F.one(), F.zero(), F.one(), F.zero(), F.zero()}; }

AutoMap negation_map(const Curve& C) {
    const Field& F = C.field();
    return AutoMap{F.one(), F.zero(), F.neg(F.one()), F.neg(C.a1()), F.neg(C.a3())};
}

Pt apply(const Curve& C, const AutoMap& s, const Pt& P) {
    if (P.inf) return P;
    const Field& F = C.field();
    Felt x = F.add(F.mul(s.c1, P.x), s.c2);
    Felt y = F.add(F.add(F.mul(s.c3, P.y), F.mul(s.c4, P.x)), s.c5);
    return Pt::affine(x, y);
}

AutoMap compose(const Field& F, const AutoMap& a, const AutoMap& b) {
    AutoMap r;
    r.c1 = F.mul(a.c1, b.c1);
    r.c2 = F.add(F.mul(a.c1, b.c2), a.c2);
    r.c3 = F.mul(a.c3, b.c3);
    r.c4 = F.add(F.mul(a.c3, b.c4), F.mul(a.c4, b.c1));
    r.c5 = F.add(F.add(F.mul(a.c3, b.c5), F.mul(a.c4, b.c2)), a.c5);
    return r;
}

AutoMap inverse(const Field& F, const AutoMap& a) {
    // x = (X - c2)/c1, y = (Y - c4 x - c5)/c3
    AutoMap r;
    r.c1 = F.inv(a.c1);
    r.c2 = F.neg(F.mul(a.c2, r.c1));
    r.c3 = F.inv(a.c3);
    r.c4 = F.neg(F.mul(F.mul(a.c4, r.c1), r.c3));
    r.c5 = F.mul(F.sub(F.mul(F.mul(a.c4, a.c2), r.c1), a.c5), r.c3);
    return r;
}

std::pair<Func, Func> as_substitution(const FunctionField& K, const AutoMap& s) {
    Func xm = K.make({s.c2, s.c1}, {}, {K.field().one()});
    Func ym = K.make({s.c5, s.c4}, {s.c3}, {K.field().one()});
    return {xm, ym};
}

bool preserves_curve(const FunctionField& K, const AutoMap& s) {
    if (s.c1.v == 0 || s.c3.v == 0) return false;
    auto [xm, ym] = as_substitution(K, s);
    return K.is_on_curve(xm, ym);
}

std::string render(const Field& F, const AutoMap& s) {
    return "x -> " + F.render(s.c1) + "*x + " + F.render(s.c2) + ", y -> " + F.render(s.c3) + "*y + " + F.render(s.c4) +
           "*x + " + F.render(s.c5);
}

namespace {

bool is_j0_odd(const Curve& C) {
    Felt z{};
    return C.field().characteristic() > 3 && C.a1() == z && C.a2() == z && C.a3() == z && C.a4() == z;
}

bool is_j1728_odd(const Curve& C) {
    Felt z{};
    return C.field().characteristic() > 3 && C.a1() == z && C.a2() == z && C.a3() == z && C.a6() == z;
}

// y^2 + y = x^3 over a field containing F_4.
bool is_char2_supersingular(const Curve& C) {
    const Field& F = C.field();
    Felt z{};
    return F.characteristic() == 2 && C.a1() == z && C.a2() == z && C.a3() == F.one() && C.a4() == z && C.a6() == z;
}

AutoMap sigma_u(const Field& F, Felt u) {
    return AutoMap{F.sqr(u), F.zero(), F.mul(u, F.sqr(u)), F.zero(), F.zero()};
}

AutoMap char2_map(const Field& F, Felt u, Felt s, Felt t) {
    Felt u2 = F.sqr(u);
    return AutoMap{u2, F.sqr(s), F.one(), F.mul(u2, s), t};
}

std::optional<AutoMap> char2_param(const Field& F, Felt u, Felt s, Felt t) {
    if (F.pow(u, std::uint64_t{3}) != F.one()) return std::nullopt;
    if (F.pow(s, std::uint64_t{4}) != s) return std::nullopt;
    if (F.add(F.sqr(t), t) != F.pow(s, std::uint64_t{6})) return std::nullopt;
    return char2_map(F, u, s, t);
}

}  // namespace

std::vector<AutoMap> aut_catalog(const Curve& C) {
    const Field& F = C.field();
    const std::uint64_t q1 = F.order() - 1;
    if (F.characteristic() == 3) {
        if (C.a1().v == 0 && C.a3().v == 0 && C.a2().v == 0) {
            throw Error(ErrorKind::UnsupportedFamily, "characteristic 3 with j = 0");
        }
        return {negation_map(C)};
    }
    if (is_j0_odd(C)) return {sigma_u(F, find_root_of_unity(F, q1 % 6 == 0 ? 6 : 2))};
    if (is_j1728_odd(C)) return {sigma_u(F, find_root_of_unity(F, q1 % 4 == 0 ? 4 : 2))};
    if (F.characteristic() == 2) {
        if (is_char2_supersingular(C)) {
            if (F.degree() % 2 != 0) throw Error(ErrorKind::UnsupportedFamily, "y^2 + y = x^3 needs F_4 inside F_q");
            Felt w = find_root_of_unity(F, 3);
            std::vector<AutoMap> gens{char2_map(F, w, F.zero(), F.zero())};
            for (std::uint32_t i = 0; i < F.order(); ++i) {
                Felt s{i};
                if (s.v == 0 || F.pow(s, std::uint64_t{4}) != s) continue;
                for (Felt t : solve_quadratic(F, F.one(), F.one(), F.neg(F.pow(s, std::uint64_t{6})))) {
                    gens.push_back(char2_map(F, F.one(), s, t));
                    break;
                }
            }
            gens.push_back(AutoMap{F.one(), F.zero(), F.one(), F.zero(), F.one()});
            return gens;
        }
        if (C.a1().v == 0) throw Error(ErrorKind::UnsupportedFamily, "supersingular characteristic-2 curve outside the catalog");
    }
    return {negation_map(C)};
}

std::vector<AutoMap> generated_group(const Curve& C, const std::vector<AutoMap>& gens) {
    const Field& F = C.field();
    std::set<AutoMap> seen{identity_map(F)};
    std::vector<AutoMap> frontier{identity_map(F)};
    while (!frontier.empty()) {
        std::vector<AutoMap> next;
        for (const AutoMap& a : frontier) {
            for (const AutoMap& g : gens) {
                AutoMap b = compose(F, g, a);
                if (seen.insert(b).second) next.push_back(b);
            }
        }
        frontier = std::move(next);
        if (seen.size() > 24) throw Error(ErrorKind::NotASubgroup, "automorphism group larger than 24");
    }
    std::vector<AutoMap> out{identity_map(F)};
    for (const AutoMap& a : seen) {
        if (!(a == identity_map(F))) out.push_back(a);
    }
    return out;
}

AutoMap parse_aut_token(const Curve& C, std::string_view token) {
    const Field& F = C.field();
    FunctionField K(C);
    auto checked = [&](AutoMap s) {
        if (!preserves_curve(K, s)) {
            throw Error(ErrorKind::NotAnEndomorphism, "automorphism `" + std::string(token) + "` does not preserve the curve");
        }
        return s;
    };
    if (token == "neg") return negation_map(C);
    if (token == "y+1") return checked(AutoMap{F.one(), F.zero(), F.one(), F.zero(), F.one()});
    if (token == "zeta3" || token == "zeta4" || token == "zeta6") {
        std::uint64_t n = static_cast<std::uint64_t>(token[4] - '0');
        if ((F.order() - 1) % n != 0) throw Error(ErrorKind::NoSuchRoot, "no root of unity of order " + std::to_string(n));
        Felt u = find_root_of_unity(F, n);
        if (F.characteristic() == 2) {
            if (n != 3) throw Error(ErrorKind::UnsupportedFamily, "only zeta3 in characteristic 2");
            return checked(char2_map(F, u, F.zero(), F.zero()));
        }
        return checked(sigma_u(F, u));
    }
    if (token.starts_with("char2(") && token.ends_with(")")) {
        std::string_view body = token.substr(6, token.size() - 7);
        std::vector<Felt> vals;
        while (!body.empty()) {
            auto pos = body.find(',');
            std::string_view part = body.substr(0, pos);
            std::uint64_t idx = 0;
            auto res = std::from_chars(part.data(), part.data() + part.size(), idx);
            if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
                throw Error(ErrorKind::ParseError, "bad char2 parameter: " + std::string(part));
            }
            vals.push_back(F.from_index(idx));
            if (pos == std::string_view::npos) break;
            body.remove_prefix(pos + 1);
        }
        if (vals.size() != 3) throw Error(ErrorKind::ParseError, "char2(u,s,t) takes three element indices");
        if (F.characteristic() != 2) throw Error(ErrorKind::UnsupportedFamily, "char2 maps need characteristic 2");
        auto s = char2_param(F, vals[0], vals[1], vals[2]);
        if (!s) throw Error(ErrorKind::NotAnEndomorphism, "char2 parameters violate u^3 = 1, s^4 = s, t^2 + t = s^6");
        return checked(*s);
    }
    throw Error(ErrorKind::ParseError, "unknown automorphism token: " + std::string(token));
}

std::vector<AutoMap> parse_aut_group(const Curve& C, std::string_view tokens) {
    std::vector<AutoMap> gens;
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (!cur.empty() && cur != "id") gens.push_back(parse_aut_token(C, cur));
        cur.clear();
    };
    for (char ch : tokens) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == ',' && depth == 0) || ch == ' ') {
            flush();
            continue;
        }
        cur += ch;
    }
    flush();
    return generated_group(C, gens);
}

std::pair<Func, Func> translation_maps(const FunctionField& K, const Pt& Q) {
    if (Q.inf) return {K.x(), K.y()};
    const Field& F = K.field();
    const Curve& C = K.curve();
    Func dx = K.make({F.neg(Q.x), F.one()}, {}, {F.one()});
    Func lambda = K.div(K.sub(K.y(), K.constant(Q.y)), dx);
    Func nu = K.div(K.sub(K.scale(K.x(), Q.y), K.scale(K.y(), Q.x)), dx);
    Func X = K.add(K.mul(lambda, lambda), K.scale(lambda, C.a1()));
    X = K.sub(X, K.make({F.add(C.a2(), Q.x), F.one()}, {}, {F.one()}));
    Func Y = K.neg(K.mul(K.add(lambda, K.constant(C.a1())), X));
    Y = K.sub(Y, K.add(nu, K.constant(C.a3())));
    return {X, Y};
}

Pt apply(const Curve& C, const GroupElement& g, const Pt& P) { return C.add(apply(C, g.sigma, P), g.Q); }

GroupElement group_product(const Curve& C, const GroupElement& g, const GroupElement& h) {
    return GroupElement{C.add(g.Q, apply(C, g.sigma, h.Q)), compose(C.field(), g.sigma, h.sigma)};
}

GroupSpec make_group(const Curve& C, std::vector<Pt> H, std::vector<AutoMap> A) {
    std::set<Pt> Hs(H.begin(), H.end());
    if (Hs.size() != H.size() || !Hs.count(Pt::infinity())) throw Error(ErrorKind::NotASubgroup, "H must be a set containing O");
    for (const Pt& P : H) {
        if (!C.contains(P)) throw Error(ErrorKind::NotASubgroup, "H contains a point off the curve");
        for (const Pt& Q : H) {
            if (!Hs.count(C.sub(P, Q))) throw Error(ErrorKind::NotASubgroup, "H is not closed under the group law");
        }
    }
    const Field& F = C.field();
    std::set<AutoMap> As(A.begin(), A.end());
    if (As.size() != A.size() || !As.count(identity_map(F))) throw Error(ErrorKind::NotASubgroup, "A must be a set containing the identity");
    for (const AutoMap& a : A) {
        for (const AutoMap& b : A) {
            if (!As.count(compose(F, a, b))) throw Error(ErrorKind::NotASubgroup, "A is not closed under composition");
        }
        // tau_{sigma^-1(Q)} in T_H for every Q in H
        for (const Pt& Q : H) {
            if (!Hs.count(apply(C, inverse(F, a), Q))) {
                throw Error(ErrorKind::NotASubgroup, "automorphism does not stabilize H, so T_H A is not a group");
            }
        }
    }
    // H sorted, O last; A with identity first.
    std::sort(H.begin(), H.end());
    std::rotate(H.begin(), H.begin() + 1, H.end());
    std::sort(A.begin(), A.end());
    auto id = std::find(A.begin(), A.end(), identity_map(F));
    std::rotate(A.begin(), id, id + 1);
    GroupSpec G{H, A, {}};
    for (const AutoMap& a : A) {
        for (const Pt& Q : H) G.elements.push_back(GroupElement{Q, a});
    }
    return G;
}

std::vector<Pt> orbit(const Curve& C, const GroupSpec& G, const Pt& P) {
    std::vector<Pt> out;
    out.reserve(G.order());
    for (const auto& g : G.elements) out.push_back(apply(C, g, P));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<Pt> sample_outside(const Curve& C, const std::vector<Pt>& H, std::size_t want) {
    std::set<Pt> Hs(H.begin(), H.end());
    std::vector<Pt> out;
    for (const Pt& P : C.points()) {
        if (Hs.count(P)) continue;
        out.push_back(P);
        if (out.size() >= want) break;
    }
    return out;
}

// Canonical non-constant element of a 2-dimensional invariant space:
// kill the first coordinate where the constants are nonzero, scale the
// leading coordinate to 1.
Func canonical_generator(const FunctionField& K, const std::vector<Func>& W, const Matrix& inv, const std::vector<Felt>& one) {
    const Field& F = K.field();
    if (inv.rows() != 2) {
        throw Error(ErrorKind::InvariantSpaceDimension, "invariant subspace has dimension " + std::to_string(inv.rows()));
    }
    std::size_t p = 0;
    while (p < one.size() && one[p].v == 0) ++p;
    for (std::size_t r = 0; r < 2; ++r) {
        std::vector<Felt> c(inv.row(r).begin(), inv.row(r).end());
        Felt f = F.div(c[p], one[p]);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(c[i], F.mul(f, one[i]));
        std::size_t lead = 0;
        while (lead < c.size() && c[lead].v == 0) ++lead;
        if (lead == c.size()) continue;
        Felt s = F.inv(c[lead]);
        for (auto& v : c) v = F.mul(v, s);
        return K.combine(c, W);
    }
    throw Error(ErrorKind::InvariantSpaceDimension, "invariant subspace holds only constants");
}

void check_pole_divisor(const FunctionField& K, const GroupSpec& G, const Func& z) {
    const int want = -static_cast<int>(G.A.size());
    for (const Pt& P : G.H) {
        if (K.valuation(z, P) != want) {
            throw Error(ErrorKind::InvariantSpaceDimension, "fixed-field generator has the wrong pole order at " + K.curve().render(P));
        }
    }
}

}  // namespace

Func fixed_field_generator(const FunctionField& K, const GroupSpec& G) {
    const Field& F = K.field();
    const Curve& C = K.curve();
    const int a = static_cast<int>(G.A.size());
    const auto W = K.riemann_roch_basis(Divisor::multiple_of(G.H, a));
    const std::size_t deg = W.size();
    // A nonzero element of W has at most deg zeros, so deg + 1 points determine it.
    const auto S = sample_outside(C, G.H, deg + 9);
    if (S.size() <= deg) throw Error(ErrorKind::InvariantSpaceDimension, "too few rational points outside H");

    auto values_at = [&](const Pt& P) {
        std::vector<Felt> out(deg);
        for (std::size_t i = 0; i < deg; ++i) out[i] = K.evaluate(W[i], P);
        return out;
    };
    std::vector<GroupElement> gens;
    for (const Pt& Q : G.H) {
        if (!Q.inf) gens.push_back(GroupElement{Q, identity_map(F)});
    }
    for (const AutoMap& s : G.A) {
        if (!(s == identity_map(F))) gens.push_back(GroupElement{Pt::infinity(), s});
    }
    Matrix E(0, deg);
    for (const Pt& P : S) E.append_row(values_at(P));
    Matrix rows(0, deg);
    for (const auto& g : gens) {
        for (std::size_t s = 0; s < S.size(); ++s) {
            auto moved = values_at(apply(C, g, S[s]));
            for (std::size_t i = 0; i < deg; ++i) moved[i] = F.sub(moved[i], E.at(s, i));
            rows.append_row(moved);
        }
    }
    Matrix invariant = nullspace(F, rows);
    auto one = solve(F, E, std::vector<Felt>(S.size(), F.one()));
    if (!one) throw Error(ErrorKind::InvariantSpaceDimension, "constants are not in L(|A| sum H)");
    Func z = canonical_generator(K, W, invariant, *one);
    check_pole_divisor(K, G, z);
    return z;
}

Func fixed_field_generator_symbolic(const FunctionField& K, const GroupSpec& G) {
    const Field& F = K.field();
    const int a = static_cast<int>(G.A.size());
    const auto W = K.riemann_roch_basis(Divisor::multiple_of(G.H, a));
    const std::size_t deg = W.size();
    std::vector<std::pair<Func, Func>> subs;
    for (const Pt& Q : G.H) {
        if (!Q.inf) subs.push_back(translation_maps(K, Q));
    }
    for (const AutoMap& s : G.A) {
        if (!(s == identity_map(F))) subs.push_back(as_substitution(K, s));
    }
    // Rows of (M_gamma - I)^T: coefficient vector c is invariant iff c M = c.
    Matrix stacked(0, deg);
    for (const auto& [xm, ym] : subs) {
        Matrix M(deg, deg);
        for (std::size_t i = 0; i < deg; ++i) {
            auto coords = K.coordinates_in_space(K.substitute(W[i], xm, ym), W);
            for (std::size_t j = 0; j < deg; ++j) M.at(i, j) = coords[j];
        }
        for (std::size_t j = 0; j < deg; ++j) {
            std::vector<Felt> row(deg);
            for (std::size_t i = 0; i < deg; ++i) row[i] = M.at(i, j);
            row[j] = F.sub(row[j], F.one());
            stacked.append_row(row);
        }
    }
    Matrix invariant = nullspace(F, stacked);
    auto one = K.coordinates_in_space(K.constant(F.one()), W);
    Func z = canonical_generator(K, W, invariant, one);
    check_pole_divisor(K, G, z);
    return z;
}

std::optional<std::pair<Felt, Felt>> affine_equivalence(const FunctionField& K, const Func& reference, const Func& z) {
    const Field& F = K.field();
    std::optional<std::pair<Felt, Felt>> first;
    for (const Pt& P : K.curve().points()) {
        auto zr = K.evaluate_direct(reference, P);
        auto zz = K.evaluate_direct(z, P);
        if (!zr || !zz) continue;
        if (!first) {
            first = std::make_pair(*zz, *zr);
            continue;
        }
        if (*zz == first->first) continue;
        Felt a = F.div(F.sub(*zr, first->second), F.sub(*zz, first->first));
        Felt b = F.sub(first->second, F.mul(a, first->first));
        if (a.v == 0) return std::nullopt;
        if (K.add(K.scale(z, a), K.constant(b)) == reference) return std::make_pair(a, b);
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Fiber> split_fibers(const FunctionField& K, const GroupSpec& G, const Func& z, bool exclude_torsion) {
    const Curve& C = K.curve();
    std::set<Pt> Hs(G.H.begin(), G.H.end());
    const auto h = static_cast<std::int64_t>(G.H.size());
    std::map<Felt, std::vector<Pt>> buckets;
    for (const Pt& P : C.points()) {
        if (Hs.count(P)) continue;
        buckets[K.evaluate(z, P)].push_back(P);
    }
    std::vector<Fiber> out;
    for (auto& [alpha, pts] : buckets) {
        if (pts.size() != G.order()) continue;
        if (exclude_torsion) {
            bool bad = std::any_of(pts.begin(), pts.end(), [&](const Pt& P) { return C.scalar_mul(h, P).inf; });
            if (bad) continue;
        }
        out.push_back(Fiber{alpha, std::move(pts)});
    }
    return out;
}

}  // namespace ellrc
