#include "ellrc/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ellrc {

namespace {

using ModPoly = std::vector<std::uint64_t>;  // constant term first, over F_p

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

ModPoly mod_reduce(ModPoly a, const ModPoly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return mod_reduce(std::move(c), f, p);
}

ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
    ModPoly result{1};
    base = mod_reduce(std::move(base), f, p);
    while (e) {
        if (e & 1) result = mul_mod(result, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod_reduce(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

std::uint32_t parse_u32(std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint32_t>& poly) {
    ModPoly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t a = f.size() - 1;
    if (a == 1) return true;
    if (f[0] == 0) return false;
    // Ben-Or: gcd(X^{p^i} - X, f) = 1 for i = 1 .. a/2.
    ModPoly h = pow_mod(ModPoly{0, 1}, p, f, p);
    for (std::size_t i = 1; i <= a / 2; ++i) {
        ModPoly g = h;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        if (g.empty()) return false;
        ModPoly d = gcd_mod(f, g, p);
        if (d.size() > 1) return false;
        h = pow_mod(h, p, f, p);
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p >= kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "p = " + std::to_string(p));
    return build(p, {0, 1});
}

Field Field::extension(std::uint64_t p, unsigned a) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (a < 2) return prime(p);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "p^a exceeds 2^31");
    }
    // Candidate (m0, ..., m_{a-1}) enumerated with m0 as the most significant digit.
    std::vector<std::uint32_t> m(a + 1, 0);
    m[a] = 1;
    for (std::uint64_t k = 0; k < q; ++k) {
        std::uint64_t t = k;
        for (unsigned i = a; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (is_irreducible_mod_p(p, m)) return build(p, m);
    }
    throw Error(ErrorKind::StructureInconsistent, "no irreducible polynomial found");
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree >= 1");
    }
    for (auto c : modulus) {
        if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (modulus.size() == 2) return prime(p);
    std::uint64_t q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "p^a exceeds 2^31");
    }
    if (!is_irreducible_mod_p(p, modulus)) {
        throw Error(ErrorKind::InvalidArgument, "modulus is reducible over F_p");
    }
    return build(p, std::move(modulus));
}

Field Field::make(std::uint64_t p, unsigned a) { return a <= 1 ? prime(p) : extension(p, a); }

Field Field::build(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    auto impl = std::make_shared<Impl>();
    impl->p = static_cast<std::uint32_t>(p);
    impl->a = static_cast<unsigned>(modulus.size() - 1);
    impl->modulus = std::move(modulus);
    std::uint64_t q = 1;
    impl->pow_p.push_back(1);
    for (unsigned i = 0; i < impl->a; ++i) {
        q *= p;
        impl->pow_p.push_back(static_cast<std::uint32_t>(q));
    }
    impl->q = static_cast<std::uint32_t>(q);
    impl->order_factors = prime_factors(q - 1);

    Field slow{impl};
    // Primitive element: smallest element of order q - 1.
    std::uint32_t prim = 1;
    if (q > 2) {
        for (std::uint32_t v = 2; v < q; ++v) {
            bool ok = true;
            for (auto l : impl->order_factors) {
                if (slow.pow(Felt{v}, (q - 1) / l) == slow.one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                prim = v;
                break;
            }
        }
    }
    impl->primitive = prim;

    if (q <= kTableLimit && q > 2) {
        const std::uint32_t n = impl->q - 1;
        std::vector<std::uint32_t> exp(2 * std::size_t{n});
        std::vector<std::uint32_t> log(impl->q, 0);
        Felt g{prim};
        Felt cur = slow.one();
        for (std::uint32_t k = 0; k < n; ++k) {
            exp[k] = cur.v;
            log[cur.v] = k;
            cur = slow.mul_slow(cur, g);
        }
        for (std::uint32_t k = 0; k < n; ++k) exp[n + k] = exp[k];
        std::vector<std::uint32_t> zech;
        if (impl->p != 2 && impl->a > 1) {
            zech.assign(n, kNone);
            for (std::uint32_t k = 0; k < n; ++k) {
                Felt s = slow.add_slow(Felt{exp[k]}, slow.one());
                if (s.v != 0) zech[k] = log[s.v];
            }
        }
        impl->exp = std::move(exp);
        impl->log = std::move(log);
        impl->zech = std::move(zech);
    }
    return Field{std::move(impl)};
}

Field Field::parse_header(std::string_view text) {
    std::vector<std::string_view> parts;
    for (auto part : split(text, ' ')) {
        if (!part.empty()) parts.push_back(part);
    }
    if (parts.size() != 3) throw Error(ErrorKind::ParseError, "field header needs 'p a m0,...,ma'");
    std::uint32_t p = parse_u32(parts[0]);
    std::uint32_t a = parse_u32(parts[1]);
    std::vector<std::uint32_t> m;
    for (auto c : split(parts[2], ',')) m.push_back(parse_u32(c));
    if (m.size() != a + 1) throw Error(ErrorKind::ParseError, "modulus length does not match degree");
    return with_modulus(p, std::move(m));
}

std::string Field::header() const {
    std::ostringstream os;
    os << impl_->p << ' ' << impl_->a << ' ';
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
        if (i) os << ',';
        os << impl_->modulus[i];
    }
    return os.str();
}

bool Field::operator==(const Field& other) const {
    return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus);
}

Felt Field::from_int(std::int64_t n) const {
    std::int64_t p = impl_->p;
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Felt{static_cast<std::uint32_t>(r)};
}

Felt Field::from_index(std::uint64_t index) const {
    if (index >= impl_->q) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    return Felt{static_cast<std::uint32_t>(index)};
}

Felt Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != impl_->a) throw Error(ErrorKind::InvalidArgument, "wrong number of coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= impl_->p) throw Error(ErrorKind::InvalidArgument, "coefficient not reduced mod p");
        v = v * impl_->p + coeffs[i];
    }
    return Felt{v};
}

std::vector<std::uint32_t> Field::coeffs(Felt x) const {
    std::vector<std::uint32_t> out(impl_->a);
    std::uint32_t v = x.v;
    for (unsigned i = 0; i < impl_->a; ++i) {
        out[i] = v % impl_->p;
        v /= impl_->p;
    }
    return out;
}

Felt Field::generator_x() const {
    if (impl_->a == 1) return Felt{0};
    return Felt{impl_->p};
}

Felt Field::add_slow(Felt x, Felt y) const {
    const Impl& f = *impl_;
    std::uint32_t out = 0, a = x.v, b = y.v;
    for (unsigned i = 0; i < f.a; ++i) {
        std::uint32_t s = a % f.p + b % f.p;
        if (s >= f.p) s -= f.p;
        out += s * f.pow_p[i];
        a /= f.p;
        b /= f.p;
    }
    return Felt{out};
}

Felt Field::neg_slow(Felt x) const {
    const Impl& f = *impl_;
    std::uint32_t out = 0, a = x.v;
    for (unsigned i = 0; i < f.a; ++i) {
        std::uint32_t c = a % f.p;
        out += (c == 0 ? 0 : f.p - c) * f.pow_p[i];
        a /= f.p;
    }
    return Felt{out};
}

Felt Field::mul_slow(Felt x, Felt y) const {
    const Impl& f = *impl_;
    if (f.a == 1) return Felt{static_cast<std::uint32_t>(std::uint64_t{x.v} * y.v % f.p)};
    const unsigned a = f.a;
    std::uint64_t xa[32], yb[32], t[64] = {};
    std::uint32_t u = x.v, w = y.v;
    for (unsigned i = 0; i < a; ++i) {
        xa[i] = u % f.p;
        yb[i] = w % f.p;
        u /= f.p;
        w /= f.p;
    }
    for (unsigned i = 0; i < a; ++i) {
        if (!xa[i]) continue;
        for (unsigned j = 0; j < a; ++j) t[i + j] = (t[i + j] + xa[i] * yb[j]) % f.p;
    }
    for (unsigned k = 2 * a - 2; k >= a; --k) {
        std::uint64_t c = t[k];
        if (!c) continue;
        t[k] = 0;
        for (unsigned i = 0; i < a; ++i) {
            t[k - a + i] = (t[k - a + i] + (f.p - c) * f.modulus[i]) % f.p;
        }
    }
    std::uint32_t out = 0;
    for (unsigned i = a; i-- > 0;) out = out * f.p + static_cast<std::uint32_t>(t[i]);
    return Felt{out};
}

Felt Field::pow(Felt x, std::uint64_t e) const {
    if (e == 0) return one();
    if (x.v == 0) return zero();
    const Impl& f = *impl_;
    if (!f.exp.empty()) {
        std::uint64_t l = (std::uint64_t{f.log[x.v]} * (e % (f.q - 1))) % (f.q - 1);
        return Felt{f.exp[l]};
    }
    Felt result = one();
    Felt base = x;
    while (e) {
        if (e & 1) result = mul_slow(result, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return result;
}

Felt Field::pow(Felt x, std::int64_t e) const {
    if (e >= 0) return pow(x, static_cast<std::uint64_t>(e));
    return pow(inv(x), static_cast<std::uint64_t>(-e));
}

bool Field::is_square(Felt x) const {
    if (x.v == 0 || impl_->p == 2) return true;
    if (!impl_->exp.empty()) return impl_->log[x.v] % 2 == 0;
    return pow(x, std::uint64_t{(impl_->q - 1) / 2}) == one();
}

std::optional<Felt> Field::sqrt(Felt x) const {
    const Impl& f = *impl_;
    if (x.v == 0) return zero();
    if (f.p == 2) return pow(x, std::uint64_t{f.q / 2});
    if (!is_square(x)) return std::nullopt;
    Felt r;
    if (!f.exp.empty()) {
        r = Felt{f.exp[f.log[x.v] / 2]};
    } else {
        // Tonelli-Shanks.
        std::uint64_t Q = f.q - 1;
        unsigned S = 0;
        while (Q % 2 == 0) {
            Q /= 2;
            ++S;
        }
        Felt z = one();
        for (std::uint32_t v = 2; v < f.q; ++v) {
            if (!is_square(Felt{v})) {
                z = Felt{v};
                break;
            }
        }
        unsigned M = S;
        Felt c = pow(z, Q);
        Felt t = pow(x, Q);
        r = pow(x, (Q + 1) / 2);
        while (t != one()) {
            unsigned i = 0;
            Felt tt = t;
            while (tt != one()) {
                tt = sqr(tt);
                ++i;
            }
            Felt b = c;
            for (unsigned j = 0; j + i + 1 < M; ++j) b = sqr(b);
            M = i;
            c = sqr(b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    Felt other = neg(r);
    return other < r ? other : r;
}

std::uint32_t Field::trace(Felt x) const {
    Felt acc = zero();
    Felt cur = x;
    for (unsigned i = 0; i < impl_->a; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    return acc.v;
}

std::uint64_t Field::multiplicative_order(Felt x) const {
    if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
    std::uint64_t o = impl_->q - 1;
    for (auto l : impl_->order_factors) {
        while (o % l == 0 && pow(x, o / l) == one()) o /= l;
    }
    return o;
}

Felt Field::primitive_element() const { return Felt{impl_->primitive}; }

std::string Field::render(Felt x) const {
    std::string out;
    std::uint32_t v = x.v;
    for (unsigned i = 0; i < impl_->a; ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v % impl_->p);
        v /= impl_->p;
    }
    return out;
}

Felt Field::parse(std::string_view text) const {
    std::vector<std::uint32_t> c;
    for (auto part : split(text, ',')) c.push_back(parse_u32(part));
    if (c.size() != impl_->a) throw Error(ErrorKind::ParseError, "element '" + std::string(text) + "' has wrong length");
    for (auto v : c) {
        if (v >= impl_->p) throw Error(ErrorKind::ParseError, "coefficient not reduced mod p");
    }
    return from_coeffs(c);
}

Felt find_root_of_unity(const Field& field, std::uint64_t n) {
    const std::uint64_t q1 = field.order() - 1;
    if (n == 0 || q1 % n != 0) {
        throw Error(ErrorKind::NoSuchRoot, std::to_string(n) + " does not divide q - 1 = " + std::to_string(q1));
    }
    for (std::uint32_t v = 1; v < field.order(); ++v) {
        if (field.multiplicative_order(Felt{v}) == n) return Felt{v};
    }
    throw Error(ErrorKind::NoSuchRoot, "no element of order " + std::to_string(n));
}

namespace {

// Solves w^2 + w = c over F_{2^a} by linear algebra over F_2.
std::vector<Felt> solve_artin_schreier(const Field& field, Felt c) {
    const unsigned a = field.degree();
    // Column i is L(X^i) = X^{2i} + X^i as a bit vector.
    std::vector<std::uint32_t> rows(a, 0);  // rows[bit] = bitmask over columns
    for (unsigned i = 0; i < a; ++i) {
        Felt b{1u << i};
        Felt img = field.add(field.sqr(b), b);
        for (unsigned bit = 0; bit < a; ++bit) {
            if (img.v >> bit & 1u) rows[bit] |= 1u << i;
        }
    }
    std::vector<std::uint32_t> rhs(a);
    for (unsigned bit = 0; bit < a; ++bit) rhs[bit] = c.v >> bit & 1u;
    std::vector<int> pivot_col;
    unsigned r = 0;
    for (unsigned col = 0; col < a && r < a; ++col) {
        unsigned sel = r;
        while (sel < a && !(rows[sel] >> col & 1u)) ++sel;
        if (sel == a) continue;
        std::swap(rows[sel], rows[r]);
        std::swap(rhs[sel], rhs[r]);
        for (unsigned k = 0; k < a; ++k) {
            if (k != r && (rows[k] >> col & 1u)) {
                rows[k] ^= rows[r];
                rhs[k] ^= rhs[r];
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    for (unsigned k = r; k < a; ++k) {
        if (rhs[k]) return {};
    }
    std::uint32_t w = 0;
    for (unsigned k = 0; k < r; ++k) {
        if (rhs[k]) w |= 1u << pivot_col[k];
    }
    Felt w0{w};
    Felt w1 = field.add(w0, field.one());
    return w0 < w1 ? std::vector<Felt>{w0, w1} : std::vector<Felt>{w1, w0};
}

}  // namespace

std::vector<Felt> solve_quadratic(const Field& field, Felt A, Felt B, Felt C) {
    const Felt zero = field.zero();
    if (A == zero && B == zero) throw Error(ErrorKind::InvalidArgument, "degenerate quadratic");
    if (A == zero) return {field.div(field.neg(C), B)};
    if (field.characteristic() == 2) {
        if (B == zero) return {*field.sqrt(field.div(C, A))};
        // y = (B/A) w with w^2 + w = AC/B^2
        Felt c = field.div(field.mul(A, C), field.sqr(B));
        std::vector<Felt> ws = solve_artin_schreier(field, c);
        Felt scale = field.div(B, A);
        std::vector<Felt> out;
        for (Felt w : ws) out.push_back(field.mul(scale, w));
        std::sort(out.begin(), out.end());
        return out;
    }
    Felt disc = field.sub(field.sqr(B), field.mul(field.from_int(4), field.mul(A, C)));
    auto s = field.sqrt(disc);
    if (!s) return {};
    Felt inv2a = field.inv(field.add(A, A));
    Felt r1 = field.mul(field.sub(*s, B), inv2a);
    Felt r2 = field.mul(field.sub(field.neg(*s), B), inv2a);
    if (r1 == r2) return {r1};
    return r1 < r2 ? std::vector<Felt>{r1, r2} : std::vector<Felt>{r2, r1};
}

}  // namespace ellrc
