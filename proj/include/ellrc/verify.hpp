#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellrc/lrc.hpp"

namespace ellrc {

struct Check {
    std::string name;
    bool ok = false;
    std::string details;
};

struct VerifyReport {
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t budget_used = 0;

    bool ok() const;
    void add(std::string name, bool ok, std::string details = {});
    void merge(const VerifyReport& other);
};

/// Default number of weight computations allowed for brute force; ELLRC_BUDGET overrides.
std::uint64_t default_budget();

/// Hamming weight.
std::size_t weight(const std::vector<Felt>& word);

/// Exact minimum distance of the row space of G by enumerating messages up to scalars.
/// BudgetExceeded when q^k exceeds the budget.
std::size_t min_distance_exact(const Field& F, const Matrix& G, std::uint64_t budget);
std::size_t min_distance_exact(const LrcCode& code, std::uint64_t budget);

struct DistanceCertificate {
    std::size_t lower = 0;           // n - pole budget
    std::size_t witness_weight = 0;  // weight of an explicit codeword
    std::vector<Felt> witness;
    bool exact = false;              // lower == witness_weight
};
/// Single mode: f = prod_{i<=t} (z - alpha_i). Two mode: lightest of `samples` random codewords.
DistanceCertificate distance_certificate(const LrcCode& code, std::uint64_t seed = 1, std::size_t samples = 1000);

/// Erase-and-repair round trips over every position and recovering set.
VerifyReport repair_audit(const LrcCode& code, std::size_t trials, std::uint64_t seed);
/// Invertibility of every r x r submatrix of each fiber matrix and of each M'.
VerifyReport matrix_audit(const LrcCode& code);
/// z-invariance, Abel sums of fibers, l(D) = deg D for the e-basis divisors.
VerifyReport structure_audit(const LrcCode& code);
/// The theorem identities for the code's mode.
VerifyReport theorem_audit(const LrcCode& code, std::optional<std::size_t> exact_distance = std::nullopt);
/// Hasse-Weil, [N]P = O, group structure, and the closed-form count when `family` is given.
VerifyReport curve_sanity(const Curve& C, std::optional<CurveFamily> family = std::nullopt);

/// Minimum weight over random codewords (nonzero messages).
std::size_t sampled_min_weight(const LrcCode& code, std::size_t samples, std::uint64_t seed);

struct VerifyOptions {
    bool exact_distance = false;
    std::size_t repair_trials = 100;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0: default_budget()
};
VerifyReport verify_code(const LrcCode& code, const VerifyOptions& opts);

}  // namespace ellrc
