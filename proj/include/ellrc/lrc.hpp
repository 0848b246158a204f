#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellrc/autgrp.hpp"
#include "ellrc/matrix.hpp"

namespace ellrc {

/// Pole orders of e_i along H: i = mu |H| + nu gives mu + 1 on the first nu points, mu after.
std::vector<int> e_pole_orders(std::size_t hsize, int i);

struct EBasis {
    std::vector<Func> funcs;  // e_1 = 1, e_2, ...
    std::vector<Pt> H;
};

/// e_1..e_r with the staircase pole pattern on H (O last in H).
EBasis build_e_basis(const FunctionField& K, const std::vector<Pt>& H, int r, std::uint64_t seed = 0);

enum class CodeMode { Single, Two };

struct LrcCode {
    LrcCode(CodeMode mode_, FunctionField K_) : mode(mode_), K(std::move(K_)) {}

    CodeMode mode = CodeMode::Single;
    FunctionField K;
    std::vector<Pt> H;        // e-basis order, O last
    std::vector<AutoMap> A;   // single mode
    std::vector<AutoMap> A1;  // two mode
    std::vector<AutoMap> A2;
    GroupSpec G;
    GroupSpec G1;
    GroupSpec G2;
    Func z;   // fixed field of G; defines the fibers
    Func z1;  // two mode: fixed fields of T_H A1 and T_H A2
    Func z2;
    EBasis e;
    EBasis e2;  // two mode, only when e^(2) uses its own pole order
    std::vector<Fiber> fibers;
    std::vector<Pt> places;
    std::map<Pt, std::size_t> position;
    std::vector<std::vector<Felt>> e_values;   // [position][l] = e_{l+1}(P)
    std::vector<std::vector<Felt>> e2_values;  // same for e^(2); empty when shared
    std::size_t m = 0;
    std::size_t available_fibers = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    int r = 0;
    int t = 0;
    int r1 = 0;
    int r2 = 0;
    std::int64_t d0 = 0;
    int t1 = 0;
    int t2 = 0;
    int L = 0;
    std::int64_t k_lower = 0;
    bool exclude_torsion = false;
    Matrix generator;  // k x n; empty when not built

    std::size_t fiber_size() const { return G.order(); }
    /// Total pole degree of V along H.
    int pole_budget() const { return mode == CodeMode::Single ? t * (r + 1) : L; }
    std::size_t d_lower() const { return n - static_cast<std::size_t>(pole_budget()); }
    std::vector<int> localities() const;
    bool has_generator() const { return generator.rows() == k && generator.cols() == n && k > 0; }
};

struct SingleOptions {
    bool exclude_torsion = false;
    /// Order P_1, ..., P_|H| = O used for the e-basis; default is point order with O last.
    std::vector<Pt> pole_order;
    std::uint64_t seed = 0;
};

struct TwoOptions {
    bool exclude_torsion = true;
    bool build_generator = true;
    std::vector<Pt> pole_order;
    /// Separate order for e^(2); defaults to pole_order.
    std::vector<Pt> pole_order2;
    std::uint64_t seed = 0;
};

LrcCode build_code_single(const FunctionField& K, std::vector<Pt> H, std::vector<AutoMap> A, std::size_t m, int t,
                          const SingleOptions& opts = {});
LrcCode build_code_two(const FunctionField& K, std::vector<Pt> H, std::vector<AutoMap> A1, std::vector<AutoMap> A2,
                       std::size_t m, std::int64_t d0, const TwoOptions& opts = {});

/// message (length k) times the generator matrix
std::vector<Felt> encode(const LrcCode& code, const std::vector<Felt>& message);

struct RecoveringSets {
    std::vector<std::size_t> I1;
    std::vector<std::size_t> I2;  // empty in single mode
};
RecoveringSets recovering_sets(const LrcCode& code, std::size_t pos);

/// Recovers position `pos` from the symbols of recovering set `which` (1 or 2).
/// Only those symbols are read; missing ones raise MissingSymbols.
Felt repair(const LrcCode& code, const std::vector<std::optional<Felt>>& word, std::size_t pos, int which);

/// Matrix whose rows are e_1..e_count (of e^(which)) evaluated at the points.
Matrix e_matrix(const LrcCode& code, const std::vector<Pt>& pts, int count, int which = 1);

struct TorsionCondition {
    bool holds = false;
    std::uint64_t lhs = 0;  // h^2 |A1| |A2|
    std::uint64_t rhs = 0;  // |E[h^2]| - |E[h]| predicted from the factorization of sqrt(q) + 1
};
/// Integer form of the condition for a maximal curve over F_q (q a square).
TorsionCondition check_torsion_condition(std::uint64_t q, std::uint64_t h, std::uint64_t a1, std::uint64_t a2);
/// |E[h^2]| - |E[h]| by enumeration.
std::uint64_t torsion_excess(const Curve& C, std::uint64_t h);

/// Exact nonnegative-denominator rational.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string str() const;
    /// Rounded to `places` decimals, ties to even.
    std::string decimal(int places) const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::vector<std::int64_t> localities;  // ascending
    std::int64_t classical = 0;
    std::optional<std::int64_t> rawat;  // equal localities only
    std::int64_t floor_bound = 0;
    std::int64_t ceil_bound = 0;
    Rational defect;       // (floor_bound - d) / n
    Rational ceil_defect;  // (ceil_bound - d) / n
};

BoundsReport bounds(std::int64_t n, std::int64_t k, std::int64_t d, std::vector<std::int64_t> localities);

/// Largest m allowed by each theorem's stated range (ceil/floor arithmetic as printed).
namespace m_range {
/// r = h|A| - 1, h || N
std::int64_t single_ha(std::int64_t N, std::int64_t h, std::int64_t r);
/// r = 2h - 1, h | N
std::int64_t single_2h(std::int64_t N, std::int64_t r);
/// maximal curve over F_q, H = E[h]
std::int64_t two_maximal(std::int64_t q, std::int64_t h, std::int64_t a1, std::int64_t a2);
/// field of order Q = q^2, N = Q + 2 sqrt(Q)
std::int64_t two_ordinary(std::int64_t Q, std::int64_t h, std::int64_t a1, std::int64_t a2);
/// y^2 + y = x^3 over F_q, q an odd power of 4
std::int64_t two_char2(std::int64_t q);
}  // namespace m_range

}  // namespace ellrc
