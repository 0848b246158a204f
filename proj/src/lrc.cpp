#include "ellrc/lrc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ellrc/rng.hpp"

namespace ellrc {

namespace {

Felt value_at(const FunctionField& K, const Func& f, const Pt& P) {
    if (auto v = K.evaluate_direct(f, P)) return *v;
    return K.evaluate(f, P);
}

// Finds c with sum_b c_b lambda[b][s] != 0 for every s.
std::optional<std::vector<Felt>> avoid_hyperplanes(const Field& F, const std::vector<std::vector<Felt>>& lambda,
                                                   SplitMix64& rng) {
    const std::size_t dim = lambda.size();
    const std::size_t nsupp = dim ? lambda[0].size() : 0;
    auto good = [&](const std::vector<Felt>& c) {
        for (std::size_t s = 0; s < nsupp; ++s) {
            Felt acc = F.zero();
            for (std::size_t b = 0; b < dim; ++b) acc = F.add(acc, F.mul(c[b], lambda[b][s]));
            if (acc.v == 0) return false;
        }
        return true;
    };
    std::vector<Felt> c(dim, F.zero());
    for (std::size_t b = 0; b < dim; ++b) {
        std::fill(c.begin(), c.end(), F.zero());
        c[b] = F.one();
        if (good(c)) return c;
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
            std::fill(c.begin(), c.end(), F.zero());
            c[a] = F.one();
            c[b] = F.one();
            if (good(c)) return c;
        }
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (auto& x : c) x = rng.element(F);
        if (good(c)) return c;
    }
    return std::nullopt;
}

std::vector<Felt> powers(const Field& F, Felt a, int count) {
    std::vector<Felt> out(static_cast<std::size_t>(count));
    Felt acc = F.one();
    for (auto& v : out) {
        v = acc;
        acc = F.mul(acc, a);
    }
    return out;
}

void require_group(const Curve& C, std::vector<AutoMap>& A) {
    std::vector<AutoMap> closed = generated_group(C, A);
    if (closed.size() != A.size()) A = closed;
}

std::vector<Pt> pole_order(const std::vector<Pt>& H, const std::vector<Pt>& wanted) {
    if (wanted.empty()) return H;
    if (wanted.size() != H.size() ||
        !std::is_permutation(wanted.begin(), wanted.end(), H.begin()))
        throw Error(ErrorKind::InvalidArgument, "pole order must be a permutation of H");
    return wanted;
}

void place_fibers(LrcCode& code, std::vector<Fiber> all) {
    code.available_fibers = all.size();
    if (code.m > all.size())
        throw Error(ErrorKind::NotEnoughFibers, "m = " + std::to_string(code.m) + " exceeds the " +
                                                    std::to_string(all.size()) + " completely split fibers");
    all.resize(code.m);
    code.fibers = std::move(all);
    code.places.clear();
    code.position.clear();
    for (const auto& fib : code.fibers) {
        for (const Pt& P : fib.places) {
            code.position.emplace(P, code.places.size());
            code.places.push_back(P);
        }
    }
    code.n = code.places.size();
}

std::vector<std::vector<Felt>> e_table(const LrcCode& code, const EBasis& e) {
    std::vector<std::vector<Felt>> out(code.n);
    for (std::size_t pos = 0; pos < code.n; ++pos) {
        out[pos].reserve(e.funcs.size());
        for (const Func& f : e.funcs) out[pos].push_back(value_at(code.K, f, code.places[pos]));
    }
    return out;
}

// Rows z^j (j <= t) and z^j e_l (2 <= l <= r, j < t) evaluated at the given positions.
Matrix space_rows(const LrcCode& code, const std::vector<std::vector<Felt>>& evals, const std::vector<Felt>& zvals,
                  int r, int t, const std::vector<std::size_t>& positions) {
    const Field& F = code.K.field();
    std::vector<std::vector<Felt>> zp(positions.size());
    for (std::size_t c = 0; c < positions.size(); ++c) zp[c] = powers(F, zvals[positions[c]], t + 1);
    const std::size_t rows = static_cast<std::size_t>(t) + 1 + static_cast<std::size_t>(r - 1) * t;
    Matrix M(rows, positions.size());
    std::size_t row = 0;
    for (int j = 0; j <= t; ++j, ++row)
        for (std::size_t c = 0; c < positions.size(); ++c) M.at(row, c) = zp[c][j];
    for (int l = 2; l <= r; ++l) {
        for (int j = 0; j < t; ++j, ++row) {
            for (std::size_t c = 0; c < positions.size(); ++c)
                M.at(row, c) = F.mul(zp[c][j], evals[positions[c]][l - 1]);
        }
    }
    return M;
}

std::vector<Felt> values_of(const LrcCode& code, const Func& f) {
    std::vector<Felt> out(code.n);
    for (std::size_t i = 0; i < code.n; ++i) out[i] = value_at(code.K, f, code.places[i]);
    return out;
}

std::vector<std::size_t> iota_positions(std::size_t n) {
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

}  // namespace

std::vector<int> e_pole_orders(std::size_t hsize, int i) {
    const int h = static_cast<int>(hsize);
    const int mu = i / h;
    const int nu = i % h;
    std::vector<int> out(hsize);
    for (int j = 0; j < h; ++j) out[j] = j < nu ? mu + 1 : mu;
    return out;
}

EBasis build_e_basis(const FunctionField& K, const std::vector<Pt>& H, int r, std::uint64_t seed) {
    const Field& F = K.field();
    if (H.empty()) throw Error(ErrorKind::InvalidArgument, "H is empty");
    if (H.size() >= F.order()) throw Error(ErrorKind::InvalidArgument, "|H| < q required");
    EBasis out{{K.constant(F.one())}, H};
    SplitMix64 rng(seed ^ 0x6e5ba515ULL);
    for (int i = 2; i <= r; ++i) {
        const auto orders = e_pole_orders(H.size(), i);
        Divisor D;
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < H.size(); ++j) {
            if (orders[j] > 0) {
                D.terms.emplace_back(H[j], orders[j]);
                support.push_back(j);
            }
        }
        const auto basis = K.riemann_roch_basis(D);
        if (basis.size() != static_cast<std::size_t>(i))
            throw Error(ErrorKind::ExistenceFailure, "l(D_" + std::to_string(i) + ") != deg D_" + std::to_string(i));
        std::vector<std::vector<Felt>> lambda(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t j : support) lambda[b].push_back(K.coefficient(basis[b], H[j], -orders[j]));
        auto c = avoid_hyperplanes(F, lambda, rng);
        if (!c) throw Error(ErrorKind::ExistenceFailure, "no e_" + std::to_string(i) + " with exact pole orders");
        Func f = K.combine(*c, basis);
        for (std::size_t j = 0; j < H.size(); ++j) {
            const int v = K.valuation(f, H[j]);
            if ((orders[j] > 0 && v != -orders[j]) || (orders[j] == 0 && v < 0))
                throw Error(ErrorKind::ExistenceFailure, "e_" + std::to_string(i) + " has the wrong pole pattern");
        }
        out.funcs.push_back(std::move(f));
    }
    return out;
}

std::vector<int> LrcCode::localities() const {
    if (mode == CodeMode::Single) return {r};
    return {r1, r2};
}

LrcCode build_code_single(const FunctionField& K, std::vector<Pt> H, std::vector<AutoMap> A, std::size_t m, int t,
                          const SingleOptions& opts) {
    const Curve& C = K.curve();
    const Field& F = K.field();
    require_group(C, A);
    LrcCode code(CodeMode::Single, K);
    code.G = make_group(C, std::move(H), std::move(A));
    code.H = pole_order(code.G.H, opts.pole_order);
    code.A = code.G.A;
    code.r = static_cast<int>(code.G.order()) - 1;
    code.t = t;
    code.m = m;
    code.exclude_torsion = opts.exclude_torsion;
    if (code.r < 1) throw Error(ErrorKind::InvalidArgument, "|H||A| >= 2 required");
    if (t < 1 || static_cast<std::size_t>(t) >= m) throw Error(ErrorKind::InvalidArgument, "1 <= t < m required");

    code.z = fixed_field_generator(K, code.G);
    place_fibers(code, split_fibers(K, code.G, code.z, opts.exclude_torsion));
    code.e = build_e_basis(K, code.H, code.r, opts.seed);
    code.e_values = e_table(code, code.e);

    std::vector<Felt> zvals(code.n);
    for (std::size_t i = 0; i < code.n; ++i) zvals[i] = code.fibers[i / code.fiber_size()].alpha;
    code.generator = space_rows(code, code.e_values, zvals, code.r, t, iota_positions(code.n));
    code.k = static_cast<std::size_t>(code.r) * t + 1;
    const std::size_t rk = rank(F, code.generator);
    if (rk != code.k)
        throw Error(ErrorKind::RankMismatch, "rank " + std::to_string(rk) + " != rt+1 = " + std::to_string(code.k));
    return code;
}

LrcCode build_code_two(const FunctionField& K, std::vector<Pt> H, std::vector<AutoMap> A1, std::vector<AutoMap> A2,
                       std::size_t m, std::int64_t d0, const TwoOptions& opts) {
    const Curve& C = K.curve();
    const Field& F = K.field();
    require_group(C, A1);
    require_group(C, A2);
    {
        std::set<AutoMap> s1(A1.begin(), A1.end());
        std::size_t common = 0;
        for (const auto& a : A2) common += s1.count(a);
        if (common != 1) throw Error(ErrorKind::SubgroupsIntersect, "|A1 cap A2| = 1 violated");
    }
    std::vector<AutoMap> gens = A1;
    gens.insert(gens.end(), A2.begin(), A2.end());
    std::vector<AutoMap> A = generated_group(C, gens);
    if (A.size() != A1.size() * A2.size())
        throw Error(ErrorKind::NotASubgroup, "A1 A2 is not a group of order |A1||A2|");

    LrcCode code(CodeMode::Two, K);
    code.G = make_group(C, H, A);
    code.G1 = make_group(C, H, A1);
    code.G2 = make_group(C, H, A2);
    code.H = pole_order(code.G.H, opts.pole_order);
    code.A1 = code.G1.A;
    code.A2 = code.G2.A;
    code.A = code.G.A;
    code.m = m;
    code.d0 = d0;
    code.exclude_torsion = opts.exclude_torsion;
    const int hs = static_cast<int>(code.H.size());
    const int a1 = static_cast<int>(code.A1.size());
    const int a2 = static_cast<int>(code.A2.size());
    if (a1 < 2 || a2 < 2) throw Error(ErrorKind::InvalidArgument, "A1 and A2 must be nontrivial");
    code.r1 = hs * a1 - 1;
    code.r2 = hs * (a2 - 1);

    code.z = fixed_field_generator(K, code.G);
    place_fibers(code, split_fibers(K, code.G, code.z, opts.exclude_torsion));
    const auto n = static_cast<std::int64_t>(code.n);
    if (d0 < 1 || d0 >= n) throw Error(ErrorKind::InvalidArgument, "1 <= d0 < n required");
    code.t1 = static_cast<int>((n - d0) / (code.r1 + 1));
    code.t2 = static_cast<int>((n - d0) / (code.r2 + hs));
    code.L = std::max(code.t1 * (code.r1 + 1), code.t2 * (code.r2 + hs));
    code.k_lower = std::int64_t{code.t1} * code.r1 + std::int64_t{code.t2} * code.r2 + 2 - code.L;

    code.z1 = fixed_field_generator(K, code.G1);
    code.z2 = fixed_field_generator(K, code.G2);
    if (opts.pole_order2.empty() || opts.pole_order2 == code.H) {
        code.e = build_e_basis(K, code.H, std::max(code.r1, code.r2), opts.seed);
        code.e_values = e_table(code, code.e);
    } else {
        code.e = build_e_basis(K, code.H, code.r1, opts.seed);
        code.e2 = build_e_basis(K, pole_order(code.G.H, opts.pole_order2), code.r2, opts.seed);
        code.e_values = e_table(code, code.e);
        code.e2_values = e_table(code, code.e2);
    }
    const auto& evals2 = code.e2_values.empty() ? code.e_values : code.e2_values;
    const auto z1v = values_of(code, code.z1);
    const auto z2v = values_of(code, code.z2);

    // Evaluation at any L + 1 places outside H is injective on L(L0 sum H).
    const std::size_t probe = std::min<std::size_t>(code.n, static_cast<std::size_t>(code.L) + 1);
    const auto probe_pos = iota_positions(probe);
    Matrix M1 = space_rows(code, code.e_values, z1v, code.r1, code.t1, probe_pos);
    Matrix M2 = space_rows(code, evals2, z2v, code.r2, code.t2, probe_pos);

    EchelonBasis sum(F, probe);
    std::size_t dim1 = 0;
    for (std::size_t i = 0; i < M1.rows(); ++i)
        dim1 += sum.insert(std::vector<Felt>(M1.row(i).begin(), M1.row(i).end()));
    EchelonBasis only2(F, probe);
    std::size_t dim2 = 0;
    for (std::size_t i = 0; i < M2.rows(); ++i) {
        std::vector<Felt> row(M2.row(i).begin(), M2.row(i).end());
        dim2 += only2.insert(row);
        sum.insert(std::move(row));
    }
    if (dim1 != M1.rows() || dim2 != M2.rows())
        throw Error(ErrorKind::RankMismatch, "e-basis products are not independent: dim V1 = " + std::to_string(dim1) +
                                                 ", dim V2 = " + std::to_string(dim2));
    code.k = dim1 + dim2 - sum.rank();
    if (static_cast<std::int64_t>(code.k) < code.k_lower)
        throw Error(ErrorKind::RankMismatch,
                    "k = " + std::to_string(code.k) + " below the lower bound " + std::to_string(code.k_lower));

    if (opts.build_generator && code.k > 0) {
        Matrix stacked(M1.rows() + M2.rows(), probe);
        for (std::size_t i = 0; i < M1.rows(); ++i) std::copy(M1.row(i).begin(), M1.row(i).end(), stacked.row(i).begin());
        for (std::size_t i = 0; i < M2.rows(); ++i)
            std::copy(M2.row(i).begin(), M2.row(i).end(), stacked.row(M1.rows() + i).begin());
        Matrix ln = left_nullspace(F, stacked);
        if (ln.rows() != code.k) throw Error(ErrorKind::RankMismatch, "intersection dimension disagrees");
        Matrix coeffs(ln.rows(), M1.rows());
        for (std::size_t i = 0; i < ln.rows(); ++i)
            std::copy(ln.row(i).begin(), ln.row(i).begin() + static_cast<std::ptrdiff_t>(M1.rows()),
                      coeffs.row(i).begin());
        Matrix full1 = space_rows(code, code.e_values, z1v, code.r1, code.t1, iota_positions(code.n));
        code.generator = multiply(F, coeffs, full1);
        rref(F, code.generator);
        if (rank(F, code.generator) != code.k) throw Error(ErrorKind::RankMismatch, "generator rank != k");
    }
    return code;
}

std::vector<Felt> encode(const LrcCode& code, const std::vector<Felt>& message) {
    if (!code.has_generator()) throw Error(ErrorKind::InvalidArgument, "code has no generator matrix");
    if (message.size() != code.k) throw Error(ErrorKind::InvalidArgument, "message length != k");
    return vec_mat(code.K.field(), message, code.generator);
}

RecoveringSets recovering_sets(const LrcCode& code, std::size_t pos) {
    if (pos >= code.n) throw Error(ErrorKind::InvalidArgument, "position out of range");
    const Curve& C = code.K.curve();
    const Pt& P = code.places[pos];
    auto positions = [&](const std::vector<Pt>& pts, const std::set<Pt>& skip) {
        std::vector<std::size_t> out;
        for (const Pt& Q : pts) {
            if (skip.count(Q)) continue;
            out.push_back(code.position.at(Q));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    RecoveringSets rs;
    if (code.mode == CodeMode::Single) {
        rs.I1 = positions(orbit(C, code.G, P), {P});
        return rs;
    }
    rs.I1 = positions(orbit(C, code.G1, P), {P});
    std::set<Pt> th;
    for (const Pt& Q : code.H) th.insert(C.add(P, Q));
    rs.I2 = positions(orbit(C, code.G2, P), th);
    std::vector<std::size_t> both;
    std::set_intersection(rs.I1.begin(), rs.I1.end(), rs.I2.begin(), rs.I2.end(), std::back_inserter(both));
    if (!both.empty()) throw Error(ErrorKind::StructureInconsistent, "recovering sets intersect");
    return rs;
}

Matrix e_matrix(const LrcCode& code, const std::vector<Pt>& pts, int count, int which) {
    const bool second = which == 2 && !code.e2_values.empty();
    const auto& table = second ? code.e2_values : code.e_values;
    const auto& funcs = second ? code.e2.funcs : code.e.funcs;
    Matrix M(static_cast<std::size_t>(count), pts.size());
    for (std::size_t c = 0; c < pts.size(); ++c) {
        auto it = code.position.find(pts[c]);
        for (int l = 0; l < count; ++l) {
            M.at(static_cast<std::size_t>(l), c) = it != code.position.end()
                                                       ? table[it->second][static_cast<std::size_t>(l)]
                                                       : value_at(code.K, funcs[static_cast<std::size_t>(l)], pts[c]);
        }
    }
    return M;
}

Felt repair(const LrcCode& code, const std::vector<std::optional<Felt>>& word, std::size_t pos, int which) {
    const Field& F = code.K.field();
    if (word.size() != code.n) throw Error(ErrorKind::InvalidArgument, "word length != n");
    const auto rs = recovering_sets(code, pos);
    const std::vector<std::size_t>* I = nullptr;
    if (which == 1) {
        I = &rs.I1;
    } else if (which == 2 && code.mode == CodeMode::Two) {
        I = &rs.I2;
    } else {
        throw Error(ErrorKind::InvalidArgument, "no recovering set " + std::to_string(which));
    }
    const auto& table = which == 2 && !code.e2_values.empty() ? code.e2_values : code.e_values;
    const std::size_t size = I->size();
    Matrix S(size, size);
    std::vector<Felt> rhs(size);
    for (std::size_t a = 0; a < size; ++a) {
        const std::size_t p = (*I)[a];
        if (!word[p]) throw Error(ErrorKind::MissingSymbols, "symbol " + std::to_string(p) + " is missing");
        rhs[a] = *word[p];
        for (std::size_t l = 0; l < size; ++l) S.at(a, l) = table[p][l];
    }
    auto c = solve_square(F, S, rhs);
    if (!c) throw Error(ErrorKind::SingularRepairMatrix, "repair matrix at position " + std::to_string(pos) + " is singular");
    Felt out = F.zero();
    for (std::size_t l = 0; l < size; ++l) out = F.add(out, F.mul((*c)[l], table[pos][l]));
    return out;
}

TorsionCondition check_torsion_condition(std::uint64_t q, std::uint64_t h, std::uint64_t a1, std::uint64_t a2) {
    const std::uint64_t s = isqrt(q);
    if (s * s != q) throw Error(ErrorKind::InvalidArgument, "q must be a square");
    if (h == 0 || (s + 1) % h != 0) throw Error(ErrorKind::HypothesisViolation, "h must divide sqrt(q) + 1");
    std::uint64_t full = 1;
    for (std::uint64_t l : prime_factors(s + 1)) {
        unsigned hl = 0, nl = 0;
        for (std::uint64_t v = s + 1; v % l == 0; v /= l) ++hl;
        for (std::uint64_t v = h; v % l == 0; v /= l) ++nl;
        const unsigned e = 2 * std::min(2 * nl, hl);
        for (unsigned i = 0; i < e; ++i) full *= l;
    }
    TorsionCondition out;
    out.lhs = h * h * a1 * a2;
    out.rhs = full - h * h;
    out.holds = out.lhs > out.rhs;
    return out;
}

std::uint64_t torsion_excess(const Curve& C, std::uint64_t h) {
    return torsion_subgroup(C, h * h).size() - torsion_subgroup(C, h).size();
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return Rational{num / (g ? g : 1), den / (g ? g : 1)};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::decimal(int places) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = num < 0;
    const __int128 a = static_cast<__int128>(negative ? -num : num) * scale;
    __int128 quo = a / den;
    const __int128 rem = a % den;
    if (2 * rem > den || (2 * rem == den && quo % 2 == 1)) ++quo;
    const auto whole = static_cast<std::int64_t>(quo / scale);
    auto frac = static_cast<std::int64_t>(quo % scale);
    std::string fs = std::to_string(frac);
    if (places > 0) fs.insert(0, static_cast<std::size_t>(places) - fs.size(), '0');
    std::string out = (negative && quo != 0 ? "-" : "") + std::to_string(whole);
    if (places > 0) out += "." + fs;
    return out;
}

namespace {
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t qt = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++qt;
    return qt;
}
}  // namespace

BoundsReport bounds(std::int64_t n, std::int64_t k, std::int64_t d, std::vector<std::int64_t> localities) {
    if (localities.empty()) throw Error(ErrorKind::InvalidArgument, "no localities");
    if (n < 1 || k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "1 <= k <= n required");
    for (auto r : localities)
        if (r < 1) throw Error(ErrorKind::InvalidArgument, "localities must be positive");
    std::sort(localities.begin(), localities.end());
    BoundsReport out;
    out.n = n;
    out.k = k;
    out.d = d;
    out.localities = localities;
    const auto t = static_cast<std::int64_t>(localities.size());
    out.classical = n - k - ceil_div(k, localities.front()) + 2;
    if (localities.front() == localities.back()) out.rawat = n - k - ceil_div(k * t, localities.front()) + t + 1;
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= t; ++i) {
        std::int64_t prod = 1;
        for (std::int64_t j = t + 1 - i; j <= t; ++j) {
            prod *= localities[static_cast<std::size_t>(j - 1)];
            if (prod > k) break;
        }
        sum += (k - 1) / prod;
    }
    out.floor_bound = n - k + 1 - sum;
    std::int64_t rsum = 1;
    for (auto r : localities) rsum += r;
    out.ceil_bound = n - k - ceil_div((k - 1) * t + 1, rsum) + 2;
    out.defect = Rational::make(out.floor_bound - d, n);
    out.ceil_defect = Rational::make(out.ceil_bound - d, n);
    return out;
}

namespace m_range {

std::int64_t single_ha(std::int64_t N, std::int64_t h, std::int64_t r) { return ceil_div(N - 2 * h, r + 1) - 1; }

std::int64_t single_2h(std::int64_t N, std::int64_t r) { return ceil_div(N, r + 1) - 2; }

std::int64_t two_maximal(std::int64_t q, std::int64_t h, std::int64_t a1, std::int64_t a2) {
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(q)));
    return ceil_div(q + 2 * s + 1 - 2 * h * h, h * h * a1 * a2) - 1;
}

std::int64_t two_ordinary(std::int64_t Q, std::int64_t h, std::int64_t a1, std::int64_t a2) {
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(Q)));
    return ceil_div(Q + 2 * s - 2 * h, h * a1 * a2) - 1;
}

std::int64_t two_char2(std::int64_t q) {
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(q)));
    return ceil_div(q + 2 * s - 24, 18);
}

}  // namespace m_range

}  // namespace ellrc
