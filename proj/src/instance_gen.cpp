#include "gdrazin/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "gdrazin/drazin.hpp"
#include "gdrazin/errors.hpp"

namespace gdrazin {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform(0, static_cast<long>(den) - 1)) < num; }

std::string_view CaseRef::id() const {
    switch (family) {
        case CaseFamily::Additive: return case_id(additive);
        case CaseFamily::Block: return case_id(block);
        case CaseFamily::Perturbation: return case_id(pert);
    }
    return "?";
}

bool parse_case(std::string_view id, CaseRef& out) {
    if (id == "ab=0") id = "L2.1";
    CaseRef r;
    if (parse_additive_case(id, r.additive)) {
        r.family = CaseFamily::Additive;
    } else if (parse_block_case(id, r.block)) {
        r.family = CaseFamily::Block;
    } else if (parse_pert_case(id, r.pert)) {
        r.family = CaseFamily::Perturbation;
    } else {
        return false;
    }
    out = r;
    return true;
}

std::vector<CaseRef> all_cases() {
    std::vector<CaseRef> out;
    for (AdditiveCase c : all_additive_cases()) out.push_back({CaseFamily::Additive, c});
    for (BlockCase c : all_block_cases()) {
        CaseRef r{CaseFamily::Block};
        r.block = c;
        out.push_back(r);
    }
    for (PertCase c : all_pert_cases()) {
        CaseRef r{CaseFamily::Perturbation};
        r.pert = c;
        out.push_back(r);
    }
    return out;
}

BlockSpec fixture_rank_one_blocks() {
    return {Matrix::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 1}}), Matrix::from_rows({{1}, {1}, {-1}}),
            Matrix::from_rows({{1, 0, 1}}), Matrix::zero(1)};
}

SchurSpec fixture_schur_blocks() {
    return {Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}}),
            Matrix::from_rows({{1, 0}, {1, -1}, {-1, 1}, {1, -1}}),
            Matrix::from_rows({{1, 1, 1, 1}, {1, -1, -1, 1}}), Matrix::from_rows({{1, 0}, {1, 0}})};
}

ConditionReport check_instance(const CaseRef& c, const InstanceBody& body) {
    switch (c.family) {
        case CaseFamily::Additive:
            if (const auto* p = std::get_if<MatrixPair>(&body)) return check_additive(c.additive, p->a, p->b);
            break;
        case CaseFamily::Block:
            if (const auto* s = std::get_if<BlockSpec>(&body)) return check_case(c.block, *s);
            break;
        case CaseFamily::Perturbation:
            if (const auto* s = std::get_if<SchurSpec>(&body)) return check_pert(c.pert, *s);
            break;
    }
    throw DimensionError("instance body does not match the family of case " + std::string(c.id()));
}

GenRecipe default_recipe(const CaseRef& target, std::uint64_t seed) {
    GenRecipe r;
    r.target = target;
    r.seed = seed;
    switch (target.family) {
        case CaseFamily::Additive:
            r.n = 4 + seed % 5;
            r.m = 0;
            break;
        case CaseFamily::Block:
            // Scalar B and C cannot meet the nontriviality flags, and BC = 0
            // with B, C != 0 needs m >= 2.
            r.n = 2 + seed % 3;
            r.m = (target.block == BlockCase::C32 ? 2 : 1) + (seed / 3) % 2;
            if (seed == 0 && target.block == BlockCase::C34) r.n = 3, r.m = 1;
            break;
        case CaseFamily::Perturbation:
            r.n = 2 + seed % 4;
            r.m = 1 + (seed / 4) % 3;
            if (seed == 0 && target.pert == PertCase::T41) r.n = 4, r.m = 2;
            break;
    }
    return r;
}

namespace {

constexpr long kEntryBound = 3;

bool within_bound(const Matrix& x) {
    for (const auto& v : x.entries()) {
        if (!v.is_real() || v.re().get_den() != 1) return false;
        if (abs(v.re()) > kEntryBound) return false;
    }
    return true;
}

Matrix random_sparse(SplitMix64& rng, std::size_t rows, std::size_t cols, std::uint64_t density_pct) {
    Matrix x(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.chance(density_pct, 100)) x(i, j) = GaussianRational(rng.uniform(0, 1) ? 1 : -1);
    return x;
}

// Elementary shear I + t e_ij and its inverse I - t e_ij.
struct Shear {
    Matrix s, s_inv;
};

Shear random_shear(SplitMix64& rng, std::size_t dim) {
    Shear sh{Matrix::identity(dim), Matrix::identity(dim)};
    if (dim < 2) return sh;
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 2));
    if (j >= i) ++j;
    const long t = rng.uniform(0, 1) ? 1 : -1;
    sh.s(i, j) = GaussianRational(t);
    sh.s_inv(i, j) = GaussianRational(-t);
    return sh;
}

// Random permutation matrix and its inverse (transpose).
Shear random_permutation(SplitMix64& rng, std::size_t dim) {
    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
    for (std::size_t i = dim; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1));
        std::swap(perm[i - 1], perm[j]);
    }
    Matrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) p(i, perm[i]) = GaussianRational(1);
    return {p, p.transpose()};
}

// Similarity on X (dim n) and Y (dim m): every predicate used here is a set
// of words in the blocks, so it is preserved.
void mix(SplitMix64& rng, InstanceBody& body, std::size_t n, std::size_t m) {
    auto conj = [](InstanceBody& b, const Shear& x, const Shear& y) -> InstanceBody {
        if (const auto* p = std::get_if<MatrixPair>(&b)) return MatrixPair{x.s * p->a * x.s_inv, x.s * p->b * x.s_inv};
        if (const auto* s = std::get_if<BlockSpec>(&b)) {
            return BlockSpec{x.s * s->A * x.s_inv, x.s * s->B * y.s_inv, y.s * s->C * x.s_inv, y.s * s->D * y.s_inv};
        }
        const auto& s = std::get<SchurSpec>(b);
        return SchurSpec{x.s * s.A * x.s_inv, x.s * s.B * y.s_inv, y.s * s.C * x.s_inv, std::nullopt};
    };
    auto bounded = [](const InstanceBody& b) {
        if (const auto* p = std::get_if<MatrixPair>(&b)) return within_bound(p->a) && within_bound(p->b);
        if (const auto* s = std::get_if<BlockSpec>(&b))
            return within_bound(s->A) && within_bound(s->B) && within_bound(s->C) && within_bound(s->D);
        const auto& s = std::get<SchurSpec>(b);
        return within_bound(s.A) && within_bound(s.B) && within_bound(s.C);
    };

    body = conj(body, random_permutation(rng, n), random_permutation(rng, m));
    const std::size_t shears = 2 * (n + m);
    for (std::size_t k = 0; k < shears; ++k) {
        const bool on_x = m == 0 || rng.chance(n, n + m);
        const Shear x = on_x ? random_shear(rng, n) : Shear{Matrix::identity(n), Matrix::identity(n)};
        const Shear y = on_x ? Shear{Matrix::identity(m), Matrix::identity(m)} : random_shear(rng, m);
        InstanceBody next = conj(body, x, y);
        if (bounded(next)) body = std::move(next);
    }
}

// Splits `total` into `parts` summands in [0, cap] in random order.
std::vector<std::size_t> split_dim(SplitMix64& rng, std::size_t total, std::size_t parts, std::size_t cap) {
    std::vector<std::size_t> out(parts, 0);
    for (std::size_t left = total; left > 0; --left) {
        std::size_t k;
        do {
            k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(parts) - 1));
        } while (out[k] >= cap);
        ++out[k];
    }
    return out;
}

bool words_zero_a(const CaseRef& c) {
    return c.family == CaseFamily::Block && (c.block == BlockCase::L36 || c.block == BlockCase::L310);
}
bool words_zero_d(const CaseRef& c) {
    return c.family == CaseFamily::Block && (c.block == BlockCase::L36 || c.block == BlockCase::L37);
}

InstanceBody random_piece(SplitMix64& rng, const CaseRef& c, std::size_t n, std::size_t m) {
    const std::uint64_t density = 25 + static_cast<std::uint64_t>(rng.uniform(0, 35));
    switch (c.family) {
        case CaseFamily::Additive:
            return MatrixPair{random_sparse(rng, n, n, density), random_sparse(rng, n, n, density)};
        case CaseFamily::Block: {
            BlockSpec s{random_sparse(rng, n, n, density), random_sparse(rng, n, m, density),
                        random_sparse(rng, m, n, density), random_sparse(rng, m, m, density)};
            if (words_zero_a(c)) s.A = Matrix::zero(n);
            if (words_zero_d(c)) s.D = Matrix::zero(m);
            return s;
        }
        case CaseFamily::Perturbation:
            return SchurSpec{random_sparse(rng, n, n, density), random_sparse(rng, n, m, density),
                             random_sparse(rng, m, n, density), std::nullopt};
    }
    throw std::logic_error("unknown case family");
}

InstanceBody direct_sum(const InstanceBody& x, const InstanceBody& y) {
    if (const auto* p = std::get_if<MatrixPair>(&x)) {
        const auto& q = std::get<MatrixPair>(y);
        return MatrixPair{block_diag(p->a, q.a), block_diag(p->b, q.b)};
    }
    if (const auto* s = std::get_if<BlockSpec>(&x)) {
        const auto& t = std::get<BlockSpec>(y);
        return BlockSpec{block_diag(s->A, t.A), block_diag(s->B, t.B), block_diag(s->C, t.C),
                         block_diag(s->D, t.D)};
    }
    const auto& s = std::get<SchurSpec>(x);
    const auto& t = std::get<SchurSpec>(y);
    return SchurSpec{block_diag(s.A, t.A), block_diag(s.B, t.B), block_diag(s.C, t.C), std::nullopt};
}

bool meets_flags(const GenRecipe& r, const InstanceBody& body) {
    if (!r.nontrivial && !r.both_nonnilpotent && !r.products_nonzero) return true;
    if (const auto* p = std::get_if<MatrixPair>(&body)) {
        if (r.nontrivial && (is_nilpotent(p->a) || p->b.is_zero())) return false;
        if (r.both_nonnilpotent && (is_nilpotent(p->a) || is_nilpotent(p->b))) return false;
        return true;
    }
    if (const auto* s = std::get_if<BlockSpec>(&body)) {
        if (r.nontrivial) {
            if (s->B.is_zero() || s->C.is_zero()) return false;
            // (0 B; C 0) with (CB)^2 = 0 is always nilpotent.
            if (r.target.block != BlockCase::L36 && is_nilpotent(assemble_block(*s))) return false;
        }
        if (r.products_nonzero && ((s->A * s->B).is_zero() || (s->C * s->B).is_zero())) return false;
        return true;
    }
    const auto& s = std::get<SchurSpec>(body);
    if (r.nontrivial && (is_nilpotent(s.A) || (s.B * s.C).is_zero())) return false;
    return true;
}

std::uint64_t case_hash(std::string_view id) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

constexpr std::size_t kPieceCap = 3;
constexpr std::size_t kPairPieceCap = 4;
constexpr std::size_t kPieceAttempts = 400;

}  // namespace

Instance generate(const GenRecipe& recipe) {
    const CaseRef& c = recipe.target;
    const std::string id(c.id());
    const bool pairs = c.family == CaseFamily::Additive;
    const std::size_t n = recipe.n;
    const std::size_t m = pairs ? 0 : recipe.m;

    Instance out;
    out.case_id = id;
    out.seed = recipe.seed;

    if (recipe.seed == 0) {
        std::optional<InstanceBody> fixture;
        if (c.family == CaseFamily::Block && c.block == BlockCase::C34 && n == 3 && m == 1) {
            fixture = fixture_rank_one_blocks();
        } else if (c.family == CaseFamily::Perturbation && c.pert == PertCase::T41 && n == 4 && m == 2) {
            fixture = fixture_schur_blocks();
        }
        if (fixture && check_instance(c, *fixture).all_hold() && meets_flags(recipe, *fixture)) {
            out.body = *fixture;
            return out;
        }
    }

    SplitMix64 rng(recipe.seed ^ case_hash(id) ^ (static_cast<std::uint64_t>(n) << 48) ^
                   (static_cast<std::uint64_t>(m) << 56));
    const std::size_t cap = pairs ? kPairPieceCap : kPieceCap;
    const std::size_t parts = std::max<std::size_t>(1, (std::max(n, m) + cap - 1) / cap);

    for (std::size_t attempt = 0; attempt < recipe.max_attempts; ++attempt) {
        const std::vector<std::size_t> ns = split_dim(rng, n, parts, cap);
        const std::vector<std::size_t> ms = pairs ? std::vector<std::size_t>(parts, 0) : split_dim(rng, m, parts, cap);

        std::optional<InstanceBody> body;
        bool ok = true;
        for (std::size_t k = 0; k < parts && ok; ++k) {
            std::optional<InstanceBody> piece;
            for (std::size_t t = 0; t < kPieceAttempts; ++t) {
                InstanceBody cand = random_piece(rng, c, ns[k], ms[k]);
                if (check_instance(c, cand).all_hold()) {
                    piece = std::move(cand);
                    break;
                }
            }
            if (!piece) {
                ok = false;
                break;
            }
            body = body ? direct_sum(*body, *piece) : std::move(*piece);
        }
        if (!ok || !body) continue;
        mix(rng, *body, n, m);
        if (!check_instance(c, *body).all_hold()) {
            throw OracleIntegrityError("generator: similarity broke the predicate of " + id);
        }
        if (!meets_flags(recipe, *body)) continue;
        out.body = std::move(*body);
        return out;
    }
    throw GeneratorExhausted("no instance for case " + id + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             " seed=" + std::to_string(recipe.seed) + " after " +
                             std::to_string(recipe.max_attempts) + " attempts");
}

std::vector<InstanceBody> exhaustive_small(const CaseRef& c, std::size_t dim, const std::vector<long>& values) {
    if (dim == 0 || dim > 3) throw DimensionError("exhaustive_small: dimension must be 1..3");
    if (values.empty()) throw DimensionError("exhaustive_small: empty value set");
    if (c.family == CaseFamily::Perturbation) {
        throw DimensionError("exhaustive_small: not available for perturbation cases");
    }
    const std::size_t slots = (c.family == CaseFamily::Additive ? 2 : 4) * dim * dim;
    constexpr double kMaxCombinations = 1 << 22;
    double combos = 1;
    for (std::size_t i = 0; i < slots; ++i) combos *= static_cast<double>(values.size());
    if (combos > kMaxCombinations) throw DimensionError("exhaustive_small: enumeration too large");

    std::vector<InstanceBody> out;
    std::vector<std::size_t> digit(slots, 0);
    auto fill = [&](std::size_t offset, std::size_t rows, std::size_t cols) {
        Matrix x(rows, cols);
        for (std::size_t i = 0; i < rows * cols; ++i) x(i / cols, i % cols) = GaussianRational(values[digit[offset + i]]);
        return x;
    };
    const std::size_t sq = dim * dim;
    while (true) {
        InstanceBody body;
        if (c.family == CaseFamily::Additive) {
            body = MatrixPair{fill(0, dim, dim), fill(sq, dim, dim)};
        } else {
            body = BlockSpec{fill(0, dim, dim), fill(sq, dim, dim), fill(2 * sq, dim, dim), fill(3 * sq, dim, dim)};
        }
        if (check_instance(c, body).all_hold()) out.push_back(std::move(body));

        std::size_t k = 0;
        while (k < slots && ++digit[k] == values.size()) digit[k++] = 0;
        if (k == slots) break;
    }
    return out;
}

}  // namespace gdrazin
