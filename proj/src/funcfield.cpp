#include "ellrc/funcfield.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "ellrc/matrix.hpp"

namespace ellrc {

namespace {

// An exactly known zero series: empty coefficients at this sentinel order.
constexpr int kExactZero = INT_MAX / 4;

bool exact_zero(const Laurent& a) { return a.c.empty() && a.val == kExactZero; }

}  // namespace

Felt Laurent::coeff(int k) const {
    int i = k - val;
    if (i < 0 || i >= static_cast<int>(c.size())) return Felt{};
    return c[static_cast<std::size_t>(i)];
}

namespace series {

Laurent mul(const Field& F, const Laurent& a, const Laurent& b) {
    if (exact_zero(a) || exact_zero(b)) return Laurent{kExactZero, {}};
    std::size_t n = std::min(a.c.size(), b.c.size());
    Laurent out{a.val + b.val, std::vector<Felt>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c[i].v == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out.c[i + j] = F.fma(out.c[i + j], a.c[i], b.c[j]);
    }
    return out;
}

Laurent add(const Field& F, const Laurent& a, const Laurent& b) {
    if (exact_zero(a)) return b;
    if (exact_zero(b)) return a;
    int lo = std::min(a.val, b.val);
    int hi = std::min(a.precision(), b.precision());
    Laurent out{lo, std::vector<Felt>(static_cast<std::size_t>(std::max(0, hi - lo)))};
    for (int k = lo; k < hi; ++k) out.c[static_cast<std::size_t>(k - lo)] = F.add(a.coeff(k), b.coeff(k));
    return out;
}

Laurent scale(const Field& F, const Laurent& a, Felt s) {
    Laurent out = a;
    for (auto& x : out.c) x = F.mul(x, s);
    return out;
}

Laurent normalize(const Laurent& a) {
    std::size_t i = 0;
    while (i < a.c.size() && a.c[i].v == 0) ++i;
    return Laurent{a.val + static_cast<int>(i), std::vector<Felt>(a.c.begin() + static_cast<std::ptrdiff_t>(i), a.c.end())};
}

Laurent inverse(const Field& F, const Laurent& a) {
    if (a.c.empty() || a.c[0].v == 0) throw Error(ErrorKind::DivisionByZero, "series without a unit leading term");
    const std::size_t n = a.c.size();
    Laurent out{-a.val, std::vector<Felt>(n)};
    Felt inv0 = F.inv(a.c[0]);
    out.c[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Felt acc{};
        for (std::size_t i = 1; i <= k; ++i) acc = F.fma(acc, a.c[i], out.c[k - i]);
        out.c[k] = F.neg(F.mul(acc, inv0));
    }
    return out;
}

}  // namespace series

int Divisor::degree() const {
    int s = 0;
    for (const auto& [P, n] : terms) s += n;
    return s;
}

int Divisor::multiplicity(const Pt& P) const {
    int s = 0;
    for (const auto& [Q, n] : terms) {
        if (Q == P) s += n;
    }
    return s;
}

Divisor Divisor::multiple_of(const std::vector<Pt>& pts, int n) {
    Divisor D;
    for (const Pt& P : pts) D.terms.emplace_back(P, n);
    return D;
}

FunctionField::FunctionField(Curve curve) : curve_(std::move(curve)), rhs_(curve_.rhs()), lin_(curve_.lin()) {}

Func FunctionField::make(Poly u, Poly v, Poly d) const {
    const Field& F = field();
    poly::trim(u);
    poly::trim(v);
    poly::trim(d);
    if (d.empty()) throw Error(ErrorKind::ZeroDenominator, "function with zero denominator");
    if (u.empty() && v.empty()) return zero();
    Poly g = poly::gcd(F, poly::gcd(F, u, v), d);
    if (g.size() > 1) {
        u = poly::div_exact(F, u, g);
        v = poly::div_exact(F, v, g);
        d = poly::div_exact(F, d, g);
    }
    Felt lc = d.back();
    if (lc != F.one()) {
        Felt s = F.inv(lc);
        u = poly::scale(F, u, s);
        v = poly::scale(F, v, s);
        d = poly::scale(F, d, s);
    }
    return Func{std::move(u), std::move(v), std::move(d)};
}

Func FunctionField::constant(Felt c) const { return Func{poly::constant(c), {}, {field().one()}}; }
Func FunctionField::from_poly(Poly u) const { return make(std::move(u), {}, {field().one()}); }
Func FunctionField::x() const { return Func{{field().zero(), field().one()}, {}, {field().one()}}; }
Func FunctionField::y() const { return Func{{}, {field().one()}, {field().one()}}; }

Func FunctionField::add(const Func& f, const Func& g) const {
    const Field& F = field();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.d == g.d) return make(poly::add(F, f.u, g.u), poly::add(F, f.v, g.v), f.d);
    Poly c = poly::gcd(F, f.d, g.d);
    Poly fa = poly::div_exact(F, g.d, c);  // multiplier for f
    Poly ga = poly::div_exact(F, f.d, c);
    return make(poly::add(F, poly::mul(F, f.u, fa), poly::mul(F, g.u, ga)),
                poly::add(F, poly::mul(F, f.v, fa), poly::mul(F, g.v, ga)), poly::mul(F, f.d, fa));
}

Func FunctionField::neg(const Func& f) const {
    return Func{poly::neg(field(), f.u), poly::neg(field(), f.v), f.d};
}

Func FunctionField::sub(const Func& f, const Func& g) const { return add(f, neg(g)); }

Func FunctionField::scale(const Func& f, Felt c) const {
    if (c.v == 0) return zero();
    return Func{poly::scale(field(), f.u, c), poly::scale(field(), f.v, c), f.d};
}

Func FunctionField::mul(const Func& f, const Func& g) const {
    const Field& F = field();
    if (f.is_zero() || g.is_zero()) return zero();
    // y^2 = F(x) - h(x) y
    Poly vv = poly::mul(F, f.v, g.v);
    Poly u = poly::add(F, poly::mul(F, f.u, g.u), poly::mul(F, vv, rhs_));
    Poly v = poly::sub(F, poly::add(F, poly::mul(F, f.u, g.v), poly::mul(F, g.u, f.v)), poly::mul(F, vv, lin_));
    return make(std::move(u), std::move(v), poly::mul(F, f.d, g.d));
}

Poly FunctionField::numerator_norm(const Func& f) const {
    const Field& F = field();
    Poly uu = poly::mul(F, f.u, f.u);
    Poly uvh = poly::mul(F, poly::mul(F, f.u, f.v), lin_);
    Poly vvF = poly::mul(F, poly::mul(F, f.v, f.v), rhs_);
    return poly::sub(F, poly::sub(F, uu, uvh), vvF);
}

Func FunctionField::inv(const Func& f) const {
    const Field& F = field();
    if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero function");
    Poly N = numerator_norm(f);
    Poly cu = poly::sub(F, f.u, poly::mul(F, f.v, lin_));
    return make(poly::mul(F, f.d, cu), poly::neg(F, poly::mul(F, f.d, f.v)), N);
}

Func FunctionField::pow(const Func& f, unsigned e) const {
    Func result = constant(field().one());
    Func base = f;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Func FunctionField::conj(const Func& f) const {
    const Field& F = field();
    return make(poly::sub(F, f.u, poly::mul(F, f.v, lin_)), poly::neg(F, f.v), f.d);
}

bool FunctionField::is_constant(const Func& f) const { return f.v.empty() && f.u.size() <= 1 && f.d.size() == 1; }

std::vector<Pt> FunctionField::points_above(Felt alpha) const {
    const Field& F = field();
    std::vector<Pt> out;
    for (Felt b : solve_quadratic(F, F.one(), poly::eval(F, lin_, alpha), F.neg(poly::eval(F, rhs_, alpha)))) {
        out.push_back(Pt::affine(alpha, b));
    }
    return out;
}

bool FunctionField::is_ramified(const Pt& P) const {
    if (P.inf) return false;
    const Field& F = field();
    return F.add(F.add(P.y, P.y), poly::eval(F, lin_, P.x)).v == 0;
}

std::pair<Laurent, Laurent> FunctionField::local_coordinates(const Pt& P, int K) const {
    const Field& F = field();
    K = std::max(K, 2);
    const auto n = static_cast<std::size_t>(K);
    const Curve& C = curve_;
    if (P.inf) {
        // t = x/y, s = 1/y: s = t^3 + a2 t^2 s + a4 t s^2 + a6 s^3 - a1 t s - a3 s^2.
        const std::size_t len = n + 3;
        std::vector<Felt> s(len), s2(len), s3(len);
        auto at = [](const std::vector<Felt>& v, std::ptrdiff_t k) { return k < 0 ? Felt{} : v[static_cast<std::size_t>(k)]; };
        for (std::size_t k = 0; k < len; ++k) {
            auto kk = static_cast<std::ptrdiff_t>(k);
            // s starts at t^3, so s^2 and s^3 at order k only need s below k.
            Felt q{};
            for (std::size_t i = 1; i < k; ++i) q = F.fma(q, s[i], s[k - i]);
            s2[k] = q;
            Felt r{};
            for (std::size_t i = 1; i < k; ++i) r = F.fma(r, s[i], s2[k - i]);
            s3[k] = r;
            Felt acc = k == 3 ? F.one() : Felt{};
            acc = F.fma(acc, C.a2(), at(s, kk - 2));
            acc = F.fma(acc, C.a4(), at(s2, kk - 1));
            acc = F.fma(acc, C.a6(), s3[k]);
            acc = F.sub(acc, F.mul(C.a1(), at(s, kk - 1)));
            acc = F.sub(acc, F.mul(C.a3(), s2[k]));
            s[k] = acc;
        }
        Laurent S{0, std::vector<Felt>(s.begin() + 3, s.end())};
        Laurent Sinv = series::inverse(F, S);
        Laurent y{-3, Sinv.c};
        Laurent x{-2, Sinv.c};
        return {x, y};
    }
    Poly fs = poly::taylor_shift(F, rhs_, P.x);
    auto fcoef = [&](std::size_t k) { return k < fs.size() ? fs[k] : Felt{}; };
    const Felt h0 = poly::eval(F, lin_, P.x);
    if (!is_ramified(P)) {
        // t = x - alpha; Y_k (2 beta + h0) = f_k - a1 Y_{k-1} - sum_{0<i<k} Y_i Y_{k-i}
        std::vector<Felt> Y(n);
        Y[0] = P.y;
        Felt inv = F.inv(F.add(F.add(P.y, P.y), h0));
        for (std::size_t k = 1; k < n; ++k) {
            Felt acc = F.sub(fcoef(k), F.mul(C.a1(), Y[k - 1]));
            for (std::size_t i = 1; i < k; ++i) acc = F.sub(acc, F.mul(Y[i], Y[k - i]));
            Y[k] = F.mul(acc, inv);
        }
        std::vector<Felt> X(n);
        X[0] = P.x;
        X[1] = F.one();
        return {Laurent{0, X}, Laurent{0, Y}};
    }
    // t = y - beta, x = alpha + X(t):
    // X_k (f1 - a1 beta) = [k = 2] + a1 X_{k-1} - f2 (X^2)_k - (X^3)_k
    std::vector<Felt> X(n), X2(n), X3(n);
    Felt inv = F.inv(F.sub(fcoef(1), F.mul(C.a1(), P.y)));
    for (std::size_t k = 1; k < n; ++k) {
        Felt q{};
        for (std::size_t i = 1; i < k; ++i) q = F.fma(q, X[i], X[k - i]);
        X2[k] = q;
        Felt r{};
        for (std::size_t i = 1; i < k; ++i) r = F.fma(r, X[i], X2[k - i]);
        X3[k] = r;
        Felt acc = k == 2 ? F.one() : Felt{};
        acc = F.fma(acc, C.a1(), X[k - 1]);
        acc = F.sub(acc, F.mul(fcoef(2), X2[k]));
        acc = F.sub(acc, X3[k]);
        X[k] = F.mul(acc, inv);
    }
    X[0] = P.x;
    std::vector<Felt> Y(n);
    Y[0] = P.y;
    Y[1] = F.one();
    return {Laurent{0, X}, Laurent{0, Y}};
}

Laurent FunctionField::poly_series(const Poly& p, const std::pair<Laurent, Laurent>& xy, int K) const {
    const Field& F = field();
    if (p.empty()) return Laurent{kExactZero, {}};
    Laurent one{0, std::vector<Felt>(static_cast<std::size_t>(std::max(K, 2)))};
    one.c[0] = F.one();
    Laurent acc = series::scale(F, one, p[0]);
    Laurent pw = one;
    for (std::size_t i = 1; i < p.size(); ++i) {
        pw = series::mul(F, pw, xy.first);
        if (p[i].v != 0) acc = series::add(F, acc, series::scale(F, pw, p[i]));
    }
    return acc;
}

Laurent FunctionField::numerator_series(const Func& f, const std::pair<Laurent, Laurent>& xy, int K) const {
    const Field& F = field();
    Laurent a = poly_series(f.u, xy, K);
    if (f.v.empty()) return a;
    Laurent b = series::mul(F, poly_series(f.v, xy, K), xy.second);
    return series::add(F, a, b);
}

int FunctionField::valuation_at_infinity(const Func& f) const {
    int best = INT_MAX;
    if (!f.u.empty()) best = -2 * poly::degree(f.u);
    if (!f.v.empty()) best = std::min(best, -2 * poly::degree(f.v) - 3);
    return best + 2 * poly::degree(f.d);
}

int FunctionField::denominator_valuation(const Func& f, const Pt& P) const {
    if (P.inf) return -2 * poly::degree(f.d);
    if (poly::eval(field(), f.d, P.x).v != 0) return 0;
    int m = static_cast<int>(poly::root_multiplicity(field(), f.d, P.x));
    return is_ramified(P) ? 2 * m : m;
}

int FunctionField::valuation(const Func& f, const Pt& P) const {
    if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "valuation of the zero function");
    if (P.inf) return valuation_at_infinity(f);
    const int vd = denominator_valuation(f, P);
    if (vd == 0) {
        auto direct = evaluate_direct(f, P);
        if (direct && direct->v != 0) return 0;
    }
    // v_P(u + v y) <= e * v_alpha(norm) <= 2 deg(norm)
    const int cap = std::max(16, 4 * (poly::degree(numerator_norm(f)) + 1));
    for (int K = 8;; K *= 2) {
        Laurent num = numerator_series(f, local_coordinates(P, K), K);
        for (int k = 0; k < K && k < static_cast<int>(num.c.size()); ++k) {
            if (num.coeff(k).v != 0) return k - vd;
        }
        if (K > cap) throw Error(ErrorKind::PrecisionExhausted, "no nonzero term within precision " + std::to_string(K));
    }
}

LocalExpansion FunctionField::local_expansion(const Func& f, const Pt& P, int prec) const {
    const Field& F = field();
    if (prec < 1) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
    LocalExpansion out{P, P.inf ? Uniformizer::XOverY : (is_ramified(P) ? Uniformizer::YMinusBeta : Uniformizer::XMinusAlpha), {}};
    if (f.is_zero()) throw Error(ErrorKind::PrecisionExhausted, "zero function has no leading term");
    Laurent num, den;
    if (P.inf) {
        auto xy = local_coordinates(P, prec);
        num = series::normalize(numerator_series(f, xy, prec));
        den = series::normalize(poly_series(f.d, xy, prec));
    } else {
        const int vd = denominator_valuation(f, P);
        const int vn = valuation(f, P) + vd;
        num = series::normalize(numerator_series(f, local_coordinates(P, vn + prec), vn + prec));
        den = series::normalize(poly_series(f.d, local_coordinates(P, vd + prec), vd + prec));
    }
    num.c.resize(static_cast<std::size_t>(prec));
    den.c.resize(static_cast<std::size_t>(prec));
    Laurent q = series::mul(F, num, series::inverse(F, den));
    out.series = q;
    return out;
}

Felt FunctionField::coefficient(const Func& f, const Pt& P, int order) const {
    const Field& F = field();
    if (f.is_zero()) return Felt{};
    if (P.inf) {
        int v = valuation_at_infinity(f);
        if (v < order) throw Error(ErrorKind::InvalidArgument, "valuation below the requested order");
        if (v > order) return Felt{};
        bool u_leads = !f.u.empty() && (f.v.empty() || 2 * poly::degree(f.u) > 2 * poly::degree(f.v) + 3);
        return F.div(u_leads ? poly::lead(f.u) : poly::lead(f.v), poly::lead(f.d));
    }
    const int vd = denominator_valuation(f, P);
    const int idx = order + vd;
    if (idx < 0) return Felt{};
    Laurent num = numerator_series(f, local_coordinates(P, idx + 1), idx + 1);
    for (int k = 0; k < idx; ++k) {
        if (num.coeff(k).v != 0) throw Error(ErrorKind::InvalidArgument, "valuation below the requested order");
    }
    Laurent den = poly_series(f.d, local_coordinates(P, vd + 1), vd + 1);
    return F.div(num.coeff(idx), den.coeff(vd));
}

std::optional<Felt> FunctionField::evaluate_direct(const Func& f, const Pt& P) const {
    const Field& F = field();
    if (P.inf) {
        if (f.is_zero()) return Felt{};
        int v = valuation_at_infinity(f);
        if (v < 0) return std::nullopt;
        if (v > 0) return Felt{};
        return coefficient(f, P, 0);
    }
    Felt den = poly::eval(F, f.d, P.x);
    if (den.v == 0) return std::nullopt;
    Felt num = F.fma(poly::eval(F, f.u, P.x), poly::eval(F, f.v, P.x), P.y);
    return F.div(num, den);
}

Felt FunctionField::evaluate(const Func& f, const Pt& P) const {
    if (auto direct = evaluate_direct(f, P)) return *direct;
    if (f.is_zero()) return Felt{};
    int v = valuation(f, P);
    if (v < 0) throw Error(ErrorKind::PoleError, "pole of order " + std::to_string(-v) + " at " + curve_.render(P));
    if (v > 0) return Felt{};
    return coefficient(f, P, 0);
}

Func FunctionField::compose_poly(const Poly& p, const Func& g) const {
    Func acc = zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = add(mul(acc, g), constant(p[i]));
    return acc;
}

bool FunctionField::is_on_curve(const Func& xmap, const Func& ymap) const {
    Func lhs = mul(ymap, add(ymap, compose_poly(lin_, xmap)));
    return lhs == compose_poly(rhs_, xmap);
}

Func FunctionField::substitute(const Func& f, const Func& xmap, const Func& ymap, bool check) const {
    if (check && !is_on_curve(xmap, ymap)) {
        throw Error(ErrorKind::NotAnEndomorphism, "substitution does not preserve the curve equation");
    }
    Func num = add(compose_poly(f.u, xmap), mul(compose_poly(f.v, xmap), ymap));
    return div(num, compose_poly(f.d, xmap));
}

std::vector<Func> FunctionField::riemann_roch_basis(const Divisor& D) const {
    const Field& F = field();
    std::map<Pt, int> mult;
    for (const auto& [P, n] : D.terms) {
        if (!curve_.contains(P)) throw Error(ErrorKind::InvalidArgument, "divisor point not on the curve");
        mult[P] += n;
    }
    int deg = 0;
    for (const auto& [P, n] : mult) {
        if (n < 0) throw Error(ErrorKind::DegenerateDivisor, "divisor is not effective");
        deg += n;
    }
    if (deg < 1) throw Error(ErrorKind::DegenerateDivisor, "divisor of degree < 1");

    // Denominator exponents per finite x-coordinate.
    std::map<Felt, int> m_alpha;
    int n_inf = 0;
    for (const auto& [P, n] : mult) {
        if (n == 0) continue;
        if (P.inf) {
            n_inf = n;
            continue;
        }
        int need = n;
        if (is_ramified(P)) need = (n + 1) / 2 + (F.characteristic() == 2 ? 1 : 0);
        int& m = m_alpha[P.x];
        m = std::max(m, need);
    }
    Poly d{F.one()};
    for (const auto& [alpha, m] : m_alpha) d = poly::mul(F, d, poly::pow(F, poly::linear(F, alpha), static_cast<unsigned>(m)));
    const int budget = n_inf + 2 * poly::degree(d);
    const int du = budget / 2;
    const int dv = budget >= 3 ? (budget - 3) / 2 : -1;
    const std::size_t nu = static_cast<std::size_t>(du + 1);
    const std::size_t ncols = nu + static_cast<std::size_t>(dv + 1);

    Matrix cons(0, ncols);
    std::vector<Felt> row(ncols);
    for (const auto& [alpha, m] : m_alpha) {
        for (const Pt& P : points_above(alpha)) {
            int e = is_ramified(P) ? 2 : 1;
            auto it = mult.find(P);
            int K = m * e - (it == mult.end() ? 0 : it->second);
            if (K <= 0) continue;
            auto xy = local_coordinates(P, K);
            std::vector<Laurent> xpow(static_cast<std::size_t>(std::max(du, dv) + 1));
            xpow[0] = Laurent{0, std::vector<Felt>(static_cast<std::size_t>(std::max(K, 2)))};
            xpow[0].c[0] = F.one();
            for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = series::mul(F, xpow[i - 1], xy.first);
            std::vector<Laurent> ypow(static_cast<std::size_t>(dv + 1));
            for (std::size_t i = 0; i < ypow.size(); ++i) ypow[i] = series::mul(F, xpow[i], xy.second);
            for (int k = 0; k < K; ++k) {
                for (std::size_t i = 0; i < nu; ++i) row[i] = xpow[i].coeff(k);
                for (std::size_t i = 0; i < ypow.size(); ++i) row[nu + i] = ypow[i].coeff(k);
                cons.append_row(row);
            }
        }
    }
    Matrix ns = nullspace(F, std::move(cons));
    if (ns.rows() != static_cast<std::size_t>(deg)) {
        throw Error(ErrorKind::StructureInconsistent,
                    "l(D) = " + std::to_string(ns.rows()) + " but deg D = " + std::to_string(deg));
    }
    std::vector<Func> basis;
    basis.reserve(ns.rows());
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        auto vec = ns.row(r);
        Poly u(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(nu));
        Poly v(vec.begin() + static_cast<std::ptrdiff_t>(nu), vec.end());
        basis.push_back(make(std::move(u), std::move(v), d));
    }
    return basis;
}

Func FunctionField::combine(const std::vector<Felt>& coeffs, const std::vector<Func>& basis) const {
    if (coeffs.size() != basis.size()) throw Error(ErrorKind::InvalidArgument, "coefficient count mismatch");
    Func acc = zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i].v != 0) acc = add(acc, scale(basis[i], coeffs[i]));
    }
    return acc;
}

std::vector<Felt> FunctionField::coordinates_in_space(const Func& f, const std::vector<Func>& basis) const {
    const Field& F = field();
    if (basis.empty()) {
        if (f.is_zero()) return {};
        throw Error(ErrorKind::NotInSpace, "nonzero function and empty basis");
    }
    const std::size_t want = basis.size() + 16;
    Matrix M(0, basis.size());
    std::vector<Felt> rhs;
    std::vector<Felt> row(basis.size());
    for (const Pt& P : curve_.points()) {
        if (P.inf) continue;
        auto fv = evaluate_direct(f, P);
        if (!fv) continue;
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i) {
            auto bv = evaluate_direct(basis[i], P);
            if (!bv) ok = false;
            else row[i] = *bv;
        }
        if (!ok) continue;
        M.append_row(row);
        rhs.push_back(*fv);
        if (rhs.size() >= want) break;
    }
    auto sol = solve(F, M, rhs);
    if (!sol || !(combine(*sol, basis) == f)) throw Error(ErrorKind::NotInSpace, "function is not in the span");
    return *sol;
}

std::string FunctionField::render(const Func& f) const {
    const Field& F = field();
    std::string d = poly::render(F, f.d);
    return "(" + poly::render(F, f.u) + ")/(" + d + ") + (" + poly::render(F, f.v) + ")/(" + d + ")*y";
}

}  // namespace ellrc
