#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellrc/funcfield.hpp"

namespace ellrc {

/// O-fixing automorphism (x, y) -> (c1 x + c2, c3 y + c4 x + c5).
struct AutoMap {
    Felt c1, c2, c3, c4, c5;

    friend bool operator==(const AutoMap&, const AutoMap&) = default;
    friend auto operator<=>(const AutoMap&, const AutoMap&) = default;
};

AutoMap identity_map(const Field& F);
AutoMap negation_map(const Curve& C);
Pt apply(const Curve& C, const AutoMap& s, const Pt& P);
/// (a o b)(P) = a(b(P))
AutoMap compose(const Field& F, const AutoMap& a, const AutoMap& b);
AutoMap inverse(const Field& F, const AutoMap& a);
/// The substitution preserves the curve equation identically.
bool preserves_curve(const FunctionField& K, const AutoMap& s);
std::pair<Func, Func> as_substitution(const FunctionField& K, const AutoMap& s);
std::string render(const Field& F, const AutoMap& s);

/// Generators of the O-fixing automorphisms this library knows for C.
std::vector<AutoMap> aut_catalog(const Curve& C);
/// Closure under composition, identity first, then ascending.
std::vector<AutoMap> generated_group(const Curve& C, const std::vector<AutoMap>& gens);

/// One generator from a token: neg, zeta3, zeta4, zeta6, y+1, char2(u,s,t).
/// In char2(u,s,t) the parameters are element indices.
AutoMap parse_aut_token(const Curve& C, std::string_view token);
/// Group generated by a comma- or space-separated token list (commas inside parentheses kept).
std::vector<AutoMap> parse_aut_group(const Curve& C, std::string_view tokens);

/// Coordinate maps of P -> P + Q as functions of (x, y).
std::pair<Func, Func> translation_maps(const FunctionField& K, const Pt& Q);

/// Group element P -> sigma(P) + Q.
struct GroupElement {
    Pt Q;
    AutoMap sigma;
};

/// G = T_H A with H a point subgroup (O last) and A a group of AutoMaps.
struct GroupSpec {
    std::vector<Pt> H;
    std::vector<AutoMap> A;
    std::vector<GroupElement> elements;

    std::size_t order() const { return elements.size(); }
};

GroupSpec make_group(const Curve& C, std::vector<Pt> H, std::vector<AutoMap> A);
Pt apply(const Curve& C, const GroupElement& g, const Pt& P);
/// (tau_P a)(tau_Q b) = tau_{P + a(Q)} ab
GroupElement group_product(const Curve& C, const GroupElement& g, const GroupElement& h);
/// G-orbit of P, in point order.
std::vector<Pt> orbit(const Curve& C, const GroupSpec& G, const Pt& P);

/// z with E^G = F_q(z) and (z)_inf = |A| sum_{P in H} P.
Func fixed_field_generator(const FunctionField& K, const GroupSpec& G);
/// Pointwise-invariance variant used as an independent cross-check: same z
/// built from symbolic substitution instead of point maps.
Func fixed_field_generator_symbolic(const FunctionField& K, const GroupSpec& G);

/// (a, b) with reference = a z + b identically, if any.
std::optional<std::pair<Felt, Felt>> affine_equivalence(const FunctionField& K, const Func& reference, const Func& z);

struct Fiber {
    Felt alpha;
    std::vector<Pt> places;
};

/// Level sets of z of full size |G| among points outside H, ordered by alpha.
std::vector<Fiber> split_fibers(const FunctionField& K, const GroupSpec& G, const Func& z, bool exclude_torsion);

}  // namespace ellrc
