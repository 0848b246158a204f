#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellrc/field.hpp"

namespace ellrc {

/// Univariate polynomial over a Field, constant term first, no trailing zeros.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Felt>;

namespace poly {

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_zero(const Poly& a) { return a.empty(); }
inline Felt lead(const Poly& a) { return a.empty() ? Felt{} : a.back(); }

Poly constant(Felt c);
Poly monomial(Felt c, std::size_t k);
/// x - alpha
Poly linear(const Field& F, Felt alpha);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Felt c);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly pow(const Field& F, const Poly& a, unsigned e);
Poly shift(const Poly& a, std::size_t k);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly div_exact(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& a);
Felt eval(const Field& F, const Poly& a, Felt x);
/// Multiplicity of alpha as a root.
unsigned root_multiplicity(const Field& F, const Poly& a, Felt alpha);
/// a(x + alpha): Taylor shift, so coefficient k is the k-th Taylor coefficient at alpha.
Poly taylor_shift(const Field& F, const Poly& a, Felt alpha);

/// `[e0; e1; ...]` with elements in field text form.
std::string render(const Field& F, const Poly& a);
Poly parse(const Field& F, std::string_view text);

}  // namespace poly
}  // namespace ellrc
