#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellrc/field.hpp"
#include "ellrc/poly.hpp"

namespace ellrc {

/// A rational point: affine (x, y) or the point at infinity O.
struct Pt {
    Felt x{};
    Felt y{};
    bool inf = false;

    static Pt infinity() { return Pt{Felt{}, Felt{}, true}; }
    static Pt affine(Felt x, Felt y) { return Pt{x, y, false}; }

    friend bool operator==(const Pt&, const Pt&) = default;
    /// Global point order: O first, then (x, y) by element order.
    friend bool operator<(const Pt& a, const Pt& b) {
        if (a.inf != b.inf) return a.inf;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct GroupStructure {
    std::uint64_t n1 = 1;  // E(F_q) = Z/n1 x Z/n2, n1 | n2
    std::uint64_t n2 = 1;
    Pt g1 = Pt::infinity();
    Pt g2 = Pt::infinity();
};

/**
 * Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
 * Point enumeration and group structure are computed on first use and
 * shared between copies.
 */
class Curve {
public:
    static constexpr std::uint64_t kMaxEnumerationOrder = std::uint64_t{1} << 22;

    Curve(Field field, Felt a1, Felt a2, Felt a3, Felt a4, Felt a6);

    const Field& field() const { return field_; }
    Felt a1() const { return a_[0]; }
    Felt a2() const { return a_[1]; }
    Felt a3() const { return a_[2]; }
    Felt a4() const { return a_[3]; }
    Felt a6() const { return a_[4]; }
    const std::array<Felt, 5>& coefficients() const { return a_; }
    Felt discriminant() const { return disc_; }

    /// x^3 + a2 x^2 + a4 x + a6
    const Poly& rhs() const { return rhs_; }
    /// a1 x + a3
    const Poly& lin() const { return lin_; }

    bool contains(const Pt& P) const;
    Pt neg(const Pt& P) const;
    Pt add(const Pt& P, const Pt& Q) const;
    Pt sub(const Pt& P, const Pt& Q) const { return add(P, neg(Q)); }
    Pt scalar_mul(std::int64_t n, const Pt& P) const;
    /// True when P = -P, i.e. 2y + a1 x + a3 = 0 (or P = O).
    bool is_two_torsion(const Pt& P) const;

    /// All rational points: O first, then ascending (x, y).
    const std::vector<Pt>& points() const;
    std::uint64_t count() const { return points().size(); }
    /// Position of P in points(); throws when P is not on the curve.
    std::size_t index_of(const Pt& P) const;
    std::uint64_t order_of(const Pt& P) const;
    const GroupStructure& structure() const;

    std::string render(const Pt& P) const;
    Pt parse_point(std::string_view text) const;
    /// `a1 a2 a3 a4 a6` with serialized elements.
    std::string render_coefficients() const;

    bool operator==(const Curve& other) const { return field_ == other.field_ && a_ == other.a_; }

private:
    struct Cache;

    Field field_;
    std::array<Felt, 5> a_;
    Felt disc_;
    Poly rhs_;
    Poly lin_;
    std::shared_ptr<Cache> cache_;
};

/// Number of rational points without storing them.
std::uint64_t count_points(const Curve& C);

/// {P : [n]P = O}, in point order.
std::vector<Pt> torsion_subgroup(const Curve& C, std::uint64_t n);
/// The subgroup generated by the given points; sorted with O last.
std::vector<Pt> generated_subgroup(const Curve& C, const std::vector<Pt>& gens);
/// A deterministic subgroup of order h, sorted with O last.
std::vector<Pt> subgroup_of_order(const Curve& C, std::uint64_t h);

enum class PrimeFamily { Eisenstein, Gaussian };
struct SpecialPrime {
    std::uint64_t p;
    std::uint64_t parameter;  // u for 3u^2+3u+1, v for v^2+1
};
std::vector<SpecialPrime> find_special_primes(PrimeFamily family, std::uint64_t limit);

enum class CurveFamily { OrdJ0, OrdJ1728, Max, MaxChar2 };
CurveFamily parse_curve_family(std::string_view name);
const char* to_string(CurveFamily family);

/// Target point count of a family over a field of square order Q.
std::uint64_t family_target_count(CurveFamily family, std::uint64_t Q);

/**
 * First curve of the family over `field` (coefficient searched in element
 * order) whose point count equals the family's target. With `coeff` set,
 * only that coefficient is tried.
 */
Curve find_special_curve(const Field& field, CurveFamily family, std::optional<Felt> coeff = std::nullopt);
/// Convenience: ord families take base q0 and work over F_{q0^2}; max families take q itself.
Curve find_special_curve(CurveFamily family, std::uint64_t base);

/// Integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);
/// (p, e) with n = p^e, or nothing when n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

}  // namespace ellrc
