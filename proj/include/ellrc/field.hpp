#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellrc/errors.hpp"

namespace ellrc {

/**
 * An element of F_{p^a}. The value is the base-p integer sum c_i p^i of its
 * power-basis coordinates, so element order ("serialization order") is the
 * order of that integer. Elements carry no field pointer; arithmetic goes
 * through the owning Field.
 */
struct Felt {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Felt, Felt) = default;
    friend constexpr auto operator<=>(Felt, Felt) = default;
};

/**
 * Finite field F_q, q = p^a, as F_p[X]/(modulus). Cheap to copy; all copies
 * share one immutable implementation, so a Field may be used from several
 * threads at once.
 *
 * Fields with q <= 2^22 get log/antilog (and, in odd characteristic, Zech)
 * tables; larger fields fall back to coefficient arithmetic.
 */
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

    static Field prime(std::uint64_t p);
    /// Lexicographically smallest monic irreducible modulus of degree a
    /// (coefficients compared from the constant term up).
    static Field extension(std::uint64_t p, unsigned a);
    /// `modulus` holds a+1 coefficients, constant term first, monic.
    static Field with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);
    /// prime(p) for a == 1, extension(p, a) otherwise.
    static Field make(std::uint64_t p, unsigned a);
    /// Parses the `p a m0,m1,...,ma` header.
    static Field parse_header(std::string_view text);

    std::uint32_t characteristic() const { return impl_->p; }
    unsigned degree() const { return impl_->a; }
    std::uint32_t order() const { return impl_->q; }
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
    bool has_tables() const { return !impl_->exp.empty(); }
    std::string header() const;

    bool operator==(const Field& other) const;

    Felt zero() const { return Felt{0}; }
    Felt one() const { return Felt{1}; }
    Felt from_int(std::int64_t n) const;
    Felt from_index(std::uint64_t index) const;
    Felt from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Felt x) const;
    /// The generator of F_q over F_p (the residue class of X).
    Felt generator_x() const;

    Felt add(Felt x, Felt y) const {
        const Impl& f = *impl_;
        if (f.p == 2) return Felt{x.v ^ y.v};
        if (f.a == 1) {
            std::uint32_t s = x.v + y.v;
            return Felt{s >= f.p ? s - f.p : s};
        }
        if (!f.zech.empty()) {
            if (x.v == 0) return y;
            if (y.v == 0) return x;
            std::uint32_t lx = f.log[x.v], ly = f.log[y.v];
            std::uint32_t d = ly >= lx ? ly - lx : ly + (f.q - 1) - lx;
            std::uint32_t z = f.zech[d];
            if (z == kNone) return Felt{0};
            return Felt{f.exp[lx + z]};
        }
        return add_slow(x, y);
    }

    Felt neg(Felt x) const {
        const Impl& f = *impl_;
        if (f.p == 2 || x.v == 0) return x;
        if (f.a == 1) return Felt{f.p - x.v};
        if (!f.exp.empty()) return Felt{f.exp[f.log[x.v] + (f.q - 1) / 2]};
        return neg_slow(x);
    }

    Felt sub(Felt x, Felt y) const { return add(x, neg(y)); }

    Felt mul(Felt x, Felt y) const {
        const Impl& f = *impl_;
        if (x.v == 0 || y.v == 0) return Felt{0};
        if (!f.exp.empty()) return Felt{f.exp[f.log[x.v] + f.log[y.v]]};
        if (f.a == 1) return Felt{static_cast<std::uint32_t>(std::uint64_t{x.v} * y.v % f.p)};
        return mul_slow(x, y);
    }

    Felt sqr(Felt x) const { return mul(x, x); }

    Felt inv(Felt x) const {
        if (x.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        const Impl& f = *impl_;
        if (!f.exp.empty()) return Felt{f.exp[(f.q - 1) - f.log[x.v]]};
        return pow(x, std::uint64_t{f.q} - 2);
    }

    Felt div(Felt x, Felt y) const { return mul(x, inv(y)); }
    Felt pow(Felt x, std::uint64_t e) const;
    Felt pow(Felt x, std::int64_t e) const;

    /// y * x + acc, the inner step of elimination and Horner loops.
    Felt fma(Felt acc, Felt x, Felt y) const { return add(acc, mul(x, y)); }

    bool is_square(Felt x) const;
    /// One square root (the smaller in element order when there are two), if any.
    std::optional<Felt> sqrt(Felt x) const;
    /// Absolute trace to F_p, as an integer in [0, p).
    std::uint32_t trace(Felt x) const;
    Felt frobenius(Felt x) const { return pow(x, std::uint64_t{impl_->p}); }
    std::uint64_t multiplicative_order(Felt x) const;
    Felt primitive_element() const;

    /// `c0,c1,...,c{a-1}`
    std::string render(Felt x) const;
    Felt parse(std::string_view text) const;

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    struct Impl {
        std::uint32_t p = 0;
        unsigned a = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> pow_p;  // p^i, i = 0..a
        std::vector<std::uint32_t> exp;    // length 2(q-1)
        std::vector<std::uint32_t> log;    // length q
        std::vector<std::uint32_t> zech;   // log(1 + g^k), odd p and a > 1 only
        std::uint32_t primitive = 0;
        std::vector<std::uint64_t> order_factors;  // primes dividing q-1
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static Field build(std::uint64_t p, std::vector<std::uint32_t> modulus);

    Felt add_slow(Felt x, Felt y) const;
    Felt neg_slow(Felt x) const;
    Felt mul_slow(Felt x, Felt y) const;

    std::shared_ptr<const Impl> impl_;
};

/// Deterministic primality test for 64-bit integers (trial division below 2^32 squared range).
bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Monic irreducibility over F_p of the given coefficient vector (constant term first).
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint32_t>& poly);

/// An element of exact multiplicative order n; the smallest in element order.
Felt find_root_of_unity(const Field& field, std::uint64_t n);

/// All roots of A y^2 + B y + C = 0 in the field, ascending. (A, B) must not both vanish.
std::vector<Felt> solve_quadratic(const Field& field, Felt A, Felt B, Felt C);

}  // namespace ellrc
