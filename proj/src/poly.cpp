#include "ellrc/poly.hpp"

#include <algorithm>

namespace ellrc::poly {

void trim(Poly& a) {
    while (!a.empty() && a.back().v == 0) a.pop_back();
}

Poly constant(Felt c) {
    if (c.v == 0) return {};
    return {c};
}

Poly monomial(Felt c, std::size_t k) {
    if (c.v == 0) return {};
    Poly out(k + 1, Felt{});
    out[k] = c;
    return out;
}

Poly linear(const Field& F, Felt alpha) { return {F.neg(alpha), F.one()}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Felt x = i < a.size() ? a[i] : Felt{};
        Felt y = i < b.size() ? b[i] : Felt{};
        out[i] = F.add(x, y);
    }
    trim(out);
    return out;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Felt x = i < a.size() ? a[i] : Felt{};
        Felt y = i < b.size() ? b[i] : Felt{};
        out[i] = F.sub(x, y);
    }
    trim(out);
    return out;
}

Poly neg(const Field& F, const Poly& a) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.neg(a[i]);
    return out;
}

Poly scale(const Field& F, const Poly& a, Felt c) {
    if (c.v == 0) return {};
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
    return out;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.fma(out[i + j], a[i], b[j]);
    }
    trim(out);
    return out;
}

Poly pow(const Field& F, const Poly& a, unsigned e) {
    Poly result{F.one()};
    Poly base = a;
    while (e) {
        if (e & 1) result = mul(F, result, base);
        e >>= 1;
        if (e) base = mul(F, base, base);
    }
    return result;
}

Poly shift(const Poly& a, std::size_t k) {
    if (a.empty()) return {};
    Poly out(k, Felt{});
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly r = a;
    if (r.size() < b.size()) return {Poly{}, r};
    Poly qt(r.size() - b.size() + 1);
    const Felt lead_inv = F.inv(b.back());
    for (std::size_t k = r.size(); k-- >= b.size();) {
        Felt c = F.mul(r[k], lead_inv);
        std::size_t sh = k - (b.size() - 1);
        qt[sh] = c;
        if (c.v != 0) {
            for (std::size_t i = 0; i < b.size(); ++i) r[sh + i] = F.sub(r[sh + i], F.mul(c, b[i]));
        }
        if (k == 0) break;
    }
    trim(qt);
    trim(r);
    return {qt, r};
}

Poly div_exact(const Field& F, const Poly& a, const Poly& b) {
    auto [qt, r] = divmod(F, a, b);
    if (!r.empty()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return qt;
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
    trim(out);
    return out;
}

Felt eval(const Field& F, const Poly& a, Felt x) {
    Felt acc{};
    for (std::size_t i = a.size(); i-- > 0;) acc = F.fma(a[i], acc, x);
    return acc;
}

unsigned root_multiplicity(const Field& F, const Poly& a, Felt alpha) {
    if (a.empty()) throw Error(ErrorKind::InvalidArgument, "multiplicity in the zero polynomial");
    Poly t = taylor_shift(F, a, alpha);
    unsigned k = 0;
    while (t[k].v == 0) ++k;
    return k;
}

Poly taylor_shift(const Field& F, const Poly& a, Felt alpha) {
    // Horner in the shifted variable: result = (...(a_n)(x+alpha) + a_{n-1})...
    Poly out;
    Poly xa{alpha, F.one()};
    for (std::size_t i = a.size(); i-- > 0;) {
        out = mul(F, out, xa);
        out = add(F, out, constant(a[i]));
    }
    return out;
}

std::string render(const Field& F, const Poly& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += "; ";
        out += F.render(a[i]);
    }
    out += "]";
    return out;
}

Poly parse(const Field& F, std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw Error(ErrorKind::ParseError, "polynomial must be bracketed");
    }
    text = strip(text.substr(1, text.size() - 2));
    Poly out;
    while (!text.empty()) {
        std::size_t pos = text.find(';');
        out.push_back(F.parse(strip(text.substr(0, pos))));
        if (pos == std::string_view::npos) break;
        text = strip(text.substr(pos + 1));
    }
    trim(out);
    return out;
}

}  // namespace ellrc::poly
