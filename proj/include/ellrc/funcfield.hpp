#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellrc/curve.hpp"
#include "ellrc/poly.hpp"

namespace ellrc {

/// (u(x) + v(x) y) / d(x), canonical: gcd(u, v, d) = 1 and d monic.
struct Func {
    Poly u;
    Poly v;
    Poly d;

    bool is_zero() const { return u.empty() && v.empty(); }
    friend bool operator==(const Func&, const Func&) = default;
};

/// Truncated Laurent series sum c[i] t^(val+i), known modulo t^(val + c.size()).
/// c[0] may be zero; val is then only a lower bound for the order.
struct Laurent {
    int val = 0;
    std::vector<Felt> c;

    int precision() const { return val + static_cast<int>(c.size()); }
    Felt coeff(int k) const;
};

namespace series {
Laurent mul(const Field& F, const Laurent& a, const Laurent& b);
Laurent add(const Field& F, const Laurent& a, const Laurent& b);
Laurent scale(const Field& F, const Laurent& a, Felt s);
/// Drops leading zero coefficients; the result is empty when nothing nonzero is known.
Laurent normalize(const Laurent& a);
/// Inverse of a normalized series with nonzero leading coefficient.
Laurent inverse(const Field& F, const Laurent& a);
}  // namespace series

enum class Uniformizer { XMinusAlpha, YMinusBeta, XOverY };

struct LocalExpansion {
    Pt place;
    Uniformizer uniformizer;
    Laurent series;  // normalized: series.val is the valuation
};

/// Effective divisor on rational places, as (point, multiplicity) pairs.
struct Divisor {
    std::vector<std::pair<Pt, int>> terms;

    int degree() const;
    int multiplicity(const Pt& P) const;
    /// n * sum of the given points
    static Divisor multiple_of(const std::vector<Pt>& pts, int n);
};

/**
 * Arithmetic, valuations and Riemann-Roch spaces in the function field of
 * an elliptic curve. Stateless apart from the curve, so one instance may be
 * shared between threads.
 */
class FunctionField {
public:
    explicit FunctionField(Curve curve);

    const Curve& curve() const { return curve_; }
    const Field& field() const { return curve_.field(); }

    Func make(Poly u, Poly v, Poly d) const;
    Func zero() const { return Func{{}, {}, {field().one()}}; }
    Func constant(Felt c) const;
    Func from_poly(Poly u) const;
    Func x() const;
    Func y() const;

    Func add(const Func& f, const Func& g) const;
    Func sub(const Func& f, const Func& g) const;
    Func neg(const Func& f) const;
    Func scale(const Func& f, Felt c) const;
    Func mul(const Func& f, const Func& g) const;
    Func inv(const Func& f) const;
    Func div(const Func& f, const Func& g) const { return mul(f, inv(g)); }
    Func pow(const Func& f, unsigned e) const;
    /// Image under y -> -y - a1 x - a3.
    Func conj(const Func& f) const;
    /// u^2 - u v h - v^2 F, the norm of the numerator u + v y to F_q(x).
    Poly numerator_norm(const Func& f) const;
    bool is_constant(const Func& f) const;

    int valuation(const Func& f, const Pt& P) const;
    /// `prec` coefficients starting at the valuation.
    LocalExpansion local_expansion(const Func& f, const Pt& P, int prec) const;
    /// Coefficient of t^order in the expansion at P; requires v_P(f) >= order.
    Felt coefficient(const Func& f, const Pt& P, int order) const;
    /// f(P); PoleError when v_P(f) < 0.
    Felt evaluate(const Func& f, const Pt& P) const;
    /// Cheap evaluation when the denominator does not vanish at P.
    std::optional<Felt> evaluate_direct(const Func& f, const Pt& P) const;

    /// f(xmap, ymap). The pair must satisfy the curve equation identically.
    Func substitute(const Func& f, const Func& xmap, const Func& ymap, bool check = true) const;
    /// p(g) for a polynomial p.
    Func compose_poly(const Poly& p, const Func& g) const;
    bool is_on_curve(const Func& xmap, const Func& ymap) const;

    /// Basis of L(D) in reduced echelon form; always deg D elements.
    std::vector<Func> riemann_roch_basis(const Divisor& D) const;
    std::vector<Felt> coordinates_in_space(const Func& f, const std::vector<Func>& basis) const;
    Func combine(const std::vector<Felt>& coeffs, const std::vector<Func>& basis) const;

    /// Rational points with the given x-coordinate, ascending.
    std::vector<Pt> points_above(Felt alpha) const;
    /// `(u)/(d) + (v)/(d)*y`
    std::string render(const Func& f) const;

private:
    // Series of x and y in the local uniformizer at P with absolute
    // precision K (relative precision K at O).
    std::pair<Laurent, Laurent> local_coordinates(const Pt& P, int K) const;
    Laurent numerator_series(const Func& f, const std::pair<Laurent, Laurent>& xy, int K) const;
    Laurent poly_series(const Poly& p, const std::pair<Laurent, Laurent>& xy, int K) const;
    bool is_ramified(const Pt& P) const;
    int denominator_valuation(const Func& f, const Pt& P) const;
    int valuation_at_infinity(const Func& f) const;

    Curve curve_;
    Poly rhs_;
    Poly lin_;
};

}  // namespace ellrc
