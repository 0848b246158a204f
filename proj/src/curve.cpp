#include "ellrc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>

namespace ellrc {

struct Curve::Cache {
    std::once_flag points_once;
    std::vector<Pt> points;
    std::once_flag structure_once;
    GroupStructure structure;
    std::vector<std::uint64_t> count_factors;
};

Curve::Curve(Field field, Felt a1, Felt a2, Felt a3, Felt a4, Felt a6)
    : field_(std::move(field)), a_{a1, a2, a3, a4, a6}, cache_(std::make_shared<Cache>()) {
    const Field& F = field_;
    auto c = [&](std::int64_t n) { return F.from_int(n); };
    Felt b2 = F.add(F.sqr(a1), F.mul(c(4), a2));
    Felt b4 = F.add(F.mul(c(2), a4), F.mul(a1, a3));
    Felt b6 = F.add(F.sqr(a3), F.mul(c(4), a6));
    Felt b8 = F.sub(F.add(F.add(F.mul(F.sqr(a1), a6), F.mul(c(4), F.mul(a2, a6))), F.mul(a2, F.sqr(a3))),
                    F.add(F.mul(a1, F.mul(a3, a4)), F.sqr(a4)));
    Felt d = F.neg(F.mul(F.sqr(b2), b8));
    d = F.sub(d, F.mul(c(8), F.mul(b4, F.sqr(b4))));
    d = F.sub(d, F.mul(c(27), F.sqr(b6)));
    d = F.add(d, F.mul(c(9), F.mul(b2, F.mul(b4, b6))));
    disc_ = d;
    if (disc_.v == 0) throw Error(ErrorKind::SingularCurve, "discriminant vanishes");
    rhs_ = {a6, a4, a2, F.one()};
    poly::trim(rhs_);
    lin_ = {a3, a1};
    poly::trim(lin_);
}

bool Curve::contains(const Pt& P) const {
    if (P.inf) return true;
    const Field& F = field_;
    Felt lhs = F.mul(P.y, F.add(P.y, F.add(F.mul(a1(), P.x), a3())));
    return lhs == poly::eval(F, rhs_, P.x);
}

Pt Curve::neg(const Pt& P) const {
    if (P.inf) return P;
    const Field& F = field_;
    return Pt::affine(P.x, F.sub(F.neg(P.y), F.add(F.mul(a1(), P.x), a3())));
}

bool Curve::is_two_torsion(const Pt& P) const { return P.inf || neg(P) == P; }

Pt Curve::add(const Pt& P, const Pt& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const Field& F = field_;
    Felt lambda, nu;
    if (P.x == Q.x) {
        if (F.add(F.add(P.y, Q.y), F.add(F.mul(a1(), Q.x), a3())).v == 0) return Pt::infinity();
        Felt den = F.add(F.add(F.add(P.y, P.y), F.mul(a1(), P.x)), a3());
        Felt x2 = F.sqr(P.x);
        Felt num = F.add(F.add(F.mul(F.from_int(3), x2), F.mul(F.from_int(2), F.mul(a2(), P.x))), a4());
        num = F.sub(num, F.mul(a1(), P.y));
        Felt inv = F.inv(den);
        lambda = F.mul(num, inv);
        Felt nnum = F.add(F.sub(F.mul(a4(), P.x), F.mul(x2, P.x)), F.mul(F.from_int(2), a6()));
        nnum = F.sub(nnum, F.mul(a3(), P.y));
        nu = F.mul(nnum, inv);
    } else {
        Felt inv = F.inv(F.sub(Q.x, P.x));
        lambda = F.mul(F.sub(Q.y, P.y), inv);
        nu = F.mul(F.sub(F.mul(P.y, Q.x), F.mul(Q.y, P.x)), inv);
    }
    Felt x3 = F.sub(F.sub(F.sub(F.add(F.sqr(lambda), F.mul(a1(), lambda)), a2()), P.x), Q.x);
    Felt y3 = F.sub(F.neg(F.mul(F.add(lambda, a1()), x3)), F.add(nu, a3()));
    return Pt::affine(x3, y3);
}

Pt Curve::scalar_mul(std::int64_t n, const Pt& P) const {
    Pt base = n < 0 ? neg(P) : P;
    std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    Pt acc = Pt::infinity();
    while (k) {
        if (k & 1) acc = add(acc, base);
        k >>= 1;
        if (k) base = add(base, base);
    }
    return acc;
}

namespace {

// Roots y of y^2 + B y - C = 0 where C = rhs(x), B = a1 x + a3.
std::size_t root_count(const Field& F, Felt B, Felt C) {
    if (F.characteristic() == 2) {
        if (B.v == 0) return 1;
        return F.trace(F.div(C, F.sqr(B))) == 0 ? 2 : 0;
    }
    Felt disc = F.add(F.sqr(B), F.mul(F.from_int(4), C));
    if (disc.v == 0) return 1;
    return F.is_square(disc) ? 2 : 0;
}

void check_enumerable(const Field& F) {
    if (F.order() > Curve::kMaxEnumerationOrder) {
        throw Error(ErrorKind::FieldTooLarge, "point enumeration needs q <= 2^22");
    }
}

}  // namespace

const std::vector<Pt>& Curve::points() const {
    std::call_once(cache_->points_once, [this] {
        const Field& F = field_;
        check_enumerable(F);
        std::vector<Pt> pts{Pt::infinity()};
        for (std::uint32_t i = 0; i < F.order(); ++i) {
            Felt x{i};
            Felt B = poly::eval(F, lin_, x);
            Felt C = poly::eval(F, rhs_, x);
            for (Felt y : solve_quadratic(F, F.one(), B, F.neg(C))) pts.push_back(Pt::affine(x, y));
        }
        cache_->points = std::move(pts);
    });
    return cache_->points;
}

std::uint64_t count_points(const Curve& C) {
    const Field& F = C.field();
    check_enumerable(F);
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < F.order(); ++i) {
        Felt x{i};
        n += root_count(F, poly::eval(F, C.lin(), x), poly::eval(F, C.rhs(), x));
    }
    return n;
}

std::size_t Curve::index_of(const Pt& P) const {
    const auto& pts = points();
    auto it = std::lower_bound(pts.begin(), pts.end(), P);
    if (it == pts.end() || !(*it == P)) throw Error(ErrorKind::InvalidArgument, "point not on curve");
    return static_cast<std::size_t>(it - pts.begin());
}

std::uint64_t Curve::order_of(const Pt& P) const {
    if (P.inf) return 1;
    structure();
    std::uint64_t n = points().size();
    for (std::uint64_t ell : cache_->count_factors) {
        while (n % ell == 0 && scalar_mul(static_cast<std::int64_t>(n / ell), P).inf) n /= ell;
    }
    return n;
}

const GroupStructure& Curve::structure() const {
    std::call_once(cache_->structure_once, [this] {
        const auto& pts = points();
        const std::uint64_t N = pts.size();
        cache_->count_factors = prime_factors(N);
        auto order = [&](const Pt& P) {
            std::uint64_t n = N;
            for (std::uint64_t ell : cache_->count_factors) {
                while (n % ell == 0 && scalar_mul(static_cast<std::int64_t>(n / ell), P).inf) n /= ell;
            }
            return n;
        };
        GroupStructure gs;
        for (const Pt& P : pts) {
            std::uint64_t o = order(P);
            if (o > gs.n2) {
                gs.n2 = o;
                gs.g2 = P;
                if (o == N) break;
            }
        }
        gs.n1 = N / gs.n2;
        if (gs.n1 * gs.n2 != N || gs.n2 % gs.n1 != 0) {
            throw Error(ErrorKind::StructureInconsistent, "exponent does not fit the point count");
        }
        if (gs.n1 > 1) {
            std::vector<Pt> cyc;
            Pt Q = Pt::infinity();
            for (std::uint64_t k = 0; k < gs.n2; ++k) {
                cyc.push_back(Q);
                Q = add(Q, gs.g2);
            }
            std::sort(cyc.begin(), cyc.end());
            auto in_cyc = [&](const Pt& P) { return std::binary_search(cyc.begin(), cyc.end(), P); };
            auto n1_factors = prime_factors(gs.n1);
            bool found = false;
            for (const Pt& P : pts) {
                if (order(P) != gs.n1) continue;
                bool independent = true;
                for (std::uint64_t ell : n1_factors) {
                    if (in_cyc(scalar_mul(static_cast<std::int64_t>(gs.n1 / ell), P))) {
                        independent = false;
                        break;
                    }
                }
                if (independent) {
                    gs.g1 = P;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error(ErrorKind::StructureInconsistent, "no complementary generator");
        }
        std::uint64_t tors = 0;
        for (const Pt& P : pts) tors += scalar_mul(static_cast<std::int64_t>(gs.n1), P).inf ? 1 : 0;
        if (tors != gs.n1 * gs.n1) throw Error(ErrorKind::StructureInconsistent, "|E[n1]| != n1^2");
        cache_->structure = gs;
    });
    return cache_->structure;
}

std::string Curve::render(const Pt& P) const {
    if (P.inf) return "INF";
    return field_.render(P.x) + ";" + field_.render(P.y);
}

Pt Curve::parse_point(std::string_view text) const {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
    if (text == "INF") return Pt::infinity();
    auto pos = text.find(';');
    if (pos == std::string_view::npos) throw Error(ErrorKind::ParseError, "point must be `x;y` or `INF`");
    Pt P = Pt::affine(field_.parse(text.substr(0, pos)), field_.parse(text.substr(pos + 1)));
    if (!contains(P)) throw Error(ErrorKind::ParseError, "point not on curve: " + std::string(text));
    return P;
}

std::string Curve::render_coefficients() const {
    std::string out;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) out += ' ';
        out += field_.render(a_[i]);
    }
    return out;
}

std::vector<Pt> torsion_subgroup(const Curve& C, std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "torsion order must be positive");
    std::vector<Pt> out;
    for (const Pt& P : C.points()) {
        if (C.scalar_mul(static_cast<std::int64_t>(n), P).inf) out.push_back(P);
    }
    return out;
}

namespace {

std::vector<Pt> infinity_last(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    if (!pts.empty() && pts.front().inf) std::rotate(pts.begin(), pts.begin() + 1, pts.end());
    return pts;
}

}  // namespace

std::vector<Pt> generated_subgroup(const Curve& C, const std::vector<Pt>& gens) {
    std::set<Pt> S{Pt::infinity()};
    for (const Pt& g : gens) {
        std::set<Pt> T = S;
        Pt Q = g;
        while (!S.count(Q)) {
            for (const Pt& e : S) T.insert(C.add(e, Q));
            Q = C.add(Q, g);
        }
        S = std::move(T);
    }
    return infinity_last({S.begin(), S.end()});
}

std::vector<Pt> subgroup_of_order(const Curve& C, std::uint64_t h) {
    const std::uint64_t N = C.count();
    if (h == 0 || N % h != 0) {
        throw Error(ErrorKind::NoSuchSubgroup, "h must divide N (h=" + std::to_string(h) + ", N=" + std::to_string(N) + ")");
    }
    if (h == 1) return {Pt::infinity()};
    auto tors = torsion_subgroup(C, h);
    if (tors.size() == h) return infinity_last(std::move(tors));
    for (const Pt& P : tors) {
        if (C.order_of(P) == h) return generated_subgroup(C, {P});
    }
    const auto& gs = C.structure();
    for (std::uint64_t h2 = std::min(h, gs.n2); h2 >= 1; --h2) {
        if (h % h2 || gs.n2 % h2) continue;
        std::uint64_t h1 = h / h2;
        if (gs.n1 % h1) continue;
        auto sub = generated_subgroup(C, {C.scalar_mul(static_cast<std::int64_t>(gs.n2 / h2), gs.g2),
                                          C.scalar_mul(static_cast<std::int64_t>(gs.n1 / h1), gs.g1)});
        if (sub.size() == h) return sub;
    }
    throw Error(ErrorKind::NoSuchSubgroup, "no subgroup of order " + std::to_string(h));
}

std::vector<SpecialPrime> find_special_primes(PrimeFamily family, std::uint64_t limit) {
    if (limit > 1000000) throw Error(ErrorKind::InvalidArgument, "limit must be at most 10^6");
    std::vector<SpecialPrime> out;
    for (std::uint64_t s = 1;; ++s) {
        std::uint64_t p = family == PrimeFamily::Eisenstein ? 3 * s * s + 3 * s + 1 : s * s + 1;
        if (p > limit) break;
        if (!is_prime(p)) continue;
        if (family == PrimeFamily::Gaussian && p % 4 != 1) continue;
        out.push_back({p, s});
    }
    return out;
}

CurveFamily parse_curve_family(std::string_view name) {
    if (name == "ord-j0" || name == "j0") return CurveFamily::OrdJ0;
    if (name == "ord-j1728" || name == "j1728") return CurveFamily::OrdJ1728;
    if (name == "max") return CurveFamily::Max;
    if (name == "max-char2" || name == "char2") return CurveFamily::MaxChar2;
    throw Error(ErrorKind::ParseError, "unknown curve family: " + std::string(name));
}

const char* to_string(CurveFamily family) {
    switch (family) {
        case CurveFamily::OrdJ0: return "ord-j0";
        case CurveFamily::OrdJ1728: return "ord-j1728";
        case CurveFamily::Max: return "max";
        case CurveFamily::MaxChar2: return "max-char2";
    }
    return "?";
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = prime_factors(n);
    if (f.size() != 1) return std::nullopt;
    unsigned e = 0;
    while (n > 1) {
        n /= f[0];
        ++e;
    }
    return std::make_pair(f[0], e);
}

std::uint64_t family_target_count(CurveFamily family, std::uint64_t Q) {
    std::uint64_t s = isqrt(Q);
    if (s * s != Q) throw Error(ErrorKind::NoCurveFound, "field order " + std::to_string(Q) + " is not a square");
    switch (family) {
        case CurveFamily::OrdJ0: return Q + 2 * s;
        case CurveFamily::OrdJ1728: return Q + 2 * s - 3;
        case CurveFamily::Max:
        case CurveFamily::MaxChar2: return Q + 2 * s + 1;
    }
    return 0;
}

Curve find_special_curve(const Field& field, CurveFamily family, std::optional<Felt> coeff) {
    const std::uint64_t target = family_target_count(family, field.order());
    const std::uint32_t p = field.characteristic();
    const Felt z = field.zero();
    if (family == CurveFamily::MaxChar2) {
        if (p != 2 || field.degree() % 4 != 2) {
            throw Error(ErrorKind::NoCurveFound, "max-char2 needs q = 4^(2a+1)");
        }
        Curve C(field, z, z, field.one(), z, z);
        if (count_points(C) != target) throw Error(ErrorKind::NoCurveFound, "y^2+y=x^3 is not maximal here");
        return C;
    }
    if (p == 2 || p == 3) throw Error(ErrorKind::NoCurveFound, "family needs characteristic > 3");
    std::vector<Felt> candidates;
    if (coeff) {
        candidates.push_back(*coeff);
    } else {
        // Ordinary families search F_p^*, the maximal family all of F_q^*.
        std::uint32_t limit = family == CurveFamily::Max ? field.order() : p;
        for (std::uint32_t i = 1; i < limit; ++i) candidates.push_back(Felt{i});
    }
    for (Felt c : candidates) {
        if (c.v == 0) continue;
        Curve C = family == CurveFamily::OrdJ1728 ? Curve(field, z, z, z, c, z) : Curve(field, z, z, z, z, c);
        if (count_points(C) == target) return C;
    }
    throw Error(ErrorKind::NoCurveFound, std::string("no ") + to_string(family) + " curve with N = " +
                                             std::to_string(target) + " over F_" + std::to_string(field.order()));
}

Curve find_special_curve(CurveFamily family, std::uint64_t base) {
    auto pp = prime_power(base);
    if (!pp) throw Error(ErrorKind::NotPrime, std::to_string(base) + " is not a prime power");
    bool ordinary = family == CurveFamily::OrdJ0 || family == CurveFamily::OrdJ1728;
    unsigned a = ordinary ? 2 * pp->second : pp->second;
    return find_special_curve(Field::make(pp->first, a), family);
}

}  // namespace ellrc
