#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gdrazin/additive.hpp"
#include "gdrazin/block.hpp"
#include "gdrazin/perturbation.hpp"

namespace gdrazin {

/// SplitMix64: state advances by the golden-ratio increment and each output
/// is the state passed through the standard 64-bit finalizer. Given the same
/// seed the stream is identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform integer in [lo, hi] by rejection (no modulo bias).
    long uniform(long lo, long hi);
    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den);

private:
    std::uint64_t state_;
};

enum class CaseFamily { Additive, Block, Perturbation };

/// A case id from any of the three families ("L2.1", "T3.1", "T4.4", ...).
/// "ab=0" is accepted as an alias for "L2.1".
struct CaseRef {
    CaseFamily family;
    AdditiveCase additive = AdditiveCase::AbZero;
    BlockCase block = BlockCase::T31;
    PertCase pert = PertCase::T41;

    std::string_view id() const;
};

bool parse_case(std::string_view id, CaseRef& out);
/// Every case id, additive first, in table order.
std::vector<CaseRef> all_cases();

struct MatrixPair {
    Matrix a, b;
    friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

using InstanceBody = std::variant<MatrixPair, BlockSpec, SchurSpec>;

struct Instance {
    std::string case_id;
    std::uint64_t seed = 0;
    InstanceBody body;
};

struct GenRecipe {
    CaseRef target;
    /// Pair dimension, or the A-block dimension for block and Schur cases.
    std::size_t n = 4;
    /// Y-block dimension; unused for pairs.
    std::size_t m = 2;
    std::uint64_t seed = 0;
    /// Pairs: a not nilpotent and b != 0. Block: AB != 0 or CB != 0 and M
    /// not nilpotent. Schur: A not nilpotent and BC != 0.
    bool nontrivial = true;
    /// Pairs only: additionally b not nilpotent.
    bool both_nonnilpotent = false;
    /// Block only: AB != 0 and CB != 0 (the lemma cases with a zero A block
    /// can never satisfy AB != 0).
    bool products_nonzero = false;
    std::size_t max_attempts = 4000;
};

/// Default dimensions used by the CLI and the suites for instance `seed`:
/// pairs 4..8, block n 2..4 with m 1..2 (2..3 for C3.2), Schur n 2..5 with m 1..3.
GenRecipe default_recipe(const CaseRef& target, std::uint64_t seed);

/// Deterministic instance for the recipe. The output satisfies the case
/// predicate (re-checked) and the requested nontriviality; entries are
/// integers with |v| <= 3. Seed 0 of C3.4 (n = 3, m = 1) and of T4.1
/// (n = 4, m = 2) returns the two canonical worked examples. Throws
/// GeneratorExhausted after max_attempts.
Instance generate(const GenRecipe& recipe);

/// Predicate for any case family, with the body type the case expects.
ConditionReport check_instance(const CaseRef& c, const InstanceBody& body);

/// Every instance of the case whose entries come from `values`: pairs of
/// dim x dim matrices, or block specs with n = m = dim. Only dim <= 3 is
/// accepted (DimensionError otherwise). Not available for Schur cases.
std::vector<InstanceBody> exhaustive_small(const CaseRef& c, std::size_t dim, const std::vector<long>& values);

/// The two worked examples.
BlockSpec fixture_rank_one_blocks();  // 3 + 1 blocks, C3.4
SchurSpec fixture_schur_blocks();     // 4 + 2 blocks, T4.1 (D supplied)

}  // namespace gdrazin
