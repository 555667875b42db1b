#include "commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <vector>

#include "gdrazin/additive.hpp"
#include "gdrazin/block.hpp"
#include "gdrazin/drazin.hpp"
#include "gdrazin/errors.hpp"
#include "gdrazin/perturbation.hpp"

namespace gdrazin::cli {

using io::Json;

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string valid_ids() {
    std::string out;
    for (const CaseRef& c : all_cases()) {
        if (!out.empty()) out += ", ";
        out += c.id();
    }
    return out;
}

// Per-case tallies of a RunReport. Obligation counts are keyed by name so
// the printed order does not depend on evaluation order.
struct CaseTally {
    std::string name;
    std::size_t instances = 0, passed = 0, failed = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> obligations;  // held, failed

    void record(const ConditionReport& r) {
        for (const Condition& c : r.conditions) {
            auto& [held, failed_count] = obligations[c.name];
            ++(c.holds ? held : failed_count);
        }
    }

    Json to_json() const {
        Json doc;
        doc["case"] = name;
        doc["instances"] = instances;
        doc["passed"] = passed;
        doc["failed"] = failed;
        if (!obligations.empty()) {
            Json ob;
            for (const auto& [key, counts] : obligations) ob[key] = Json::array({counts.first, counts.second});
            doc["obligations"] = std::move(ob);
        }
        return doc;
    }
};

struct RunReport {
    std::string command;
    std::vector<CaseTally> cases;
    std::vector<Json> failures;
    std::vector<std::string> notes;

    CommandResult finish(Clock::time_point start) const {
        Json doc;
        doc["command"] = command;
        Json rows = Json::array();
        for (const CaseTally& t : cases) rows.push_back(t.to_json());
        doc["cases"] = std::move(rows);
        doc["failures"] = failures;
        doc["notes"] = notes;
        doc["ok"] = failures.empty();
        doc["duration_ms"] = elapsed_ms(start);
        return {std::move(doc), failures.empty() ? kExitOk : kExitFailures, 2};
    }
};

Json failure_row(const std::string& case_name, std::optional<std::uint64_t> seed, const std::string& stage,
                 const std::string& detail) {
    Json row;
    row["case"] = case_name;
    if (seed) row["seed"] = *seed;
    row["stage"] = stage;
    row["detail"] = detail;
    return row;
}

void add_condition(Json& row, const Condition& c) {
    row["condition"] = c.name;
    row["residual"] = io::to_json(c.residual);
}

// ---- verification of one generated instance --------------------------------

struct Outcome {
    Matrix inverse;
    Matrix assembled;
    ConditionReport obligations;
};

Outcome run_additive(AdditiveCase c, const MatrixPair& p) {
    Outcome out;
    out.assembled = p.a + p.b;
    const auto traced = [&](bool dual, auto formula) {
        SumResult r = dual ? formula(p.b.transpose(), p.a.transpose()) : formula(p.a, p.b);
        out.inverse = dual ? r.inverse.transpose() : r.inverse;
        out.obligations = std::move(r.trace.obligations);
    };
    const auto thm22 = [](const Matrix& a, const Matrix& b) { return sum_thm22(a, b); };
    const auto thm25 = [](const Matrix& a, const Matrix& b) { return sum_thm25(a, b); };
    switch (c) {
        case AdditiveCase::Thm22: traced(false, thm22); break;
        case AdditiveCase::Thm22Dual: traced(true, thm22); break;
        case AdditiveCase::Thm25: traced(false, thm25); break;
        case AdditiveCase::Thm25Dual: traced(true, thm25); break;
        default: out.inverse = additive_drazin(c, p.a, p.b); break;
    }
    return out;
}

Outcome run_instance(const CaseRef& c, const InstanceBody& body) {
    switch (c.family) {
        case CaseFamily::Additive: return run_additive(c.additive, std::get<MatrixPair>(body));
        case CaseFamily::Block: {
            const BlockSpec& s = std::get<BlockSpec>(body);
            BlockDerivation d = gdrazin_block_traced(c.block, s);
            return {std::move(d.inverse), assemble_block(s), std::move(d.obligations)};
        }
        case CaseFamily::Perturbation: {
            const SchurSpec& s = std::get<SchurSpec>(body);
            PertDerivation d = gdrazin_pert_traced(c.pert, s);
            return {std::move(d.inverse), s.assemble(), std::move(d.obligations)};
        }
    }
    throw std::logic_error("unknown case family");
}

// Appends one tally for `count` instances starting at `seed`.
void verify_into(RunReport& report, const CaseRef& c, std::size_t count, std::uint64_t seed) {
    CaseTally tally;
    tally.name = c.id();
    const std::string name(c.id());
    for (std::uint64_t k = seed; k < seed + count; ++k) {
        ++tally.instances;
        Instance inst;
        try {
            inst = generate(default_recipe(c, k));
        } catch (const GeneratorExhausted& e) {
            ++tally.failed;
            report.failures.push_back(failure_row(name, k, "generator", e.what()));
            continue;
        }
        const auto fail = [&](const std::string& stage, const std::string& detail, const Condition* cond) {
            ++tally.failed;
            Json row = failure_row(name, k, stage, detail);
            if (cond) add_condition(row, *cond);
            row["instance"] = io::to_json(inst.body);
            report.failures.push_back(std::move(row));
        };

        const ConditionReport hyp = check_instance(c, inst.body);
        if (!hyp.all_hold()) {
            fail("hypothesis", "generated instance violates its hypotheses", hyp.first_failure());
            continue;
        }
        Outcome out;
        try {
            out = run_instance(c, inst.body);
        } catch (const OracleIntegrityError& e) {
            const Condition* step = nullptr;
            ConditionReport ob;
            if (c.family == CaseFamily::Perturbation) {
                ob = pert_obligations(c.pert, std::get<SchurSpec>(inst.body));
                step = ob.first_failure();
            }
            fail("derivation", e.what(), step);
            continue;
        } catch (const std::exception& e) {
            fail("formula", e.what(), nullptr);
            continue;
        }
        tally.record(out.obligations);

        const ConditionReport axioms = verify_axioms(out.assembled, out.inverse);
        if (!axioms.all_hold()) {
            fail("axioms", "closed form is not a Drazin inverse", axioms.first_failure());
            continue;
        }
        const Matrix oracle = drazin_inverse(out.assembled);
        if (out.inverse != oracle) {
            const Condition diff{"formula=oracle", false, out.inverse - oracle};
            fail("oracle", "closed form differs from the core-nilpotent inverse", &diff);
            continue;
        }
        ++tally.passed;
    }
    report.cases.push_back(std::move(tally));
}

// ---- selftest ---------------------------------------------------------------

struct Check {
    std::string name;
    std::function<std::optional<std::string>()> run;  // nullopt = pass
};

void checks_into(RunReport& report, const std::string& group, const std::vector<Check>& checks) {
    CaseTally tally;
    tally.name = group;
    for (const Check& check : checks) {
        ++tally.instances;
        std::optional<std::string> problem;
        try {
            problem = check.run();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem) {
            ++tally.failed;
            report.failures.push_back(failure_row(group, std::nullopt, check.name, *problem));
        } else {
            ++tally.passed;
        }
    }
    report.cases.push_back(std::move(tally));
}

std::optional<std::string> expect(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return what;
}

std::optional<std::string> expect_equal(const Matrix& got, const Matrix& want) {
    if (got == want) return std::nullopt;
    return "got " + got.to_string() + ", expected " + want.to_string();
}

Matrix frozen_rank_one_inverse() {
    return Matrix::from_rows({{1, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}});
}

Matrix frozen_schur_inverse() {
    Matrix x(6, 6);
    const GaussianRational row[] = {GaussianRational::fraction(1, 4),  GaussianRational::fraction(1, 4),
                                    GaussianRational::fraction(1, 4),  GaussianRational::fraction(1, 8),
                                    GaussianRational::fraction(5, 16), GaussianRational::fraction(-1, 16)};
    for (std::size_t r : {0u, 4u, 5u})
        for (std::size_t c = 0; c < 6; ++c) x(r, c) = row[c];
    return x;
}

std::vector<Check> rank_one_checks(const std::function<BlockSpec()>& load) {
    return {
        {"matches-embedded", [=] { return expect(load() == fixture_rank_one_blocks(), "differs from the embedded copy"); }},
        {"C3.4-conditions", [=] {
             const ConditionReport r = check_case(BlockCase::C34, load());
             return r.all_hold() ? std::nullopt : std::optional<std::string>(r.first_failure()->name + " fails");
         }},
        {"C3.2-rejects-BC", [=] {
             const Condition* bc = check_case(BlockCase::C32, load()).find("BC=0");
             return expect(bc && !bc->holds, "BC=0 unexpectedly holds");
         }},
        {"closed-form", [=] { return expect_equal(gdrazin_block(BlockCase::C34, load()), frozen_rank_one_inverse()); }},
        {"oracle", [=] { return expect_equal(drazin_inverse(assemble_block(load())), frozen_rank_one_inverse()); }},
    };
}

std::vector<Check> schur_checks(const std::function<SchurSpec()>& load) {
    return {
        {"matches-embedded", [=] { return expect(load() == fixture_schur_blocks(), "differs from the embedded copy"); }},
        {"A^d", [=] {
             Matrix want = Matrix::zero(4);
             want(0, 0) = 1;
             return expect_equal(drazin(load().A).inverse, want);
         }},
        {"A^pi", [=] {
             Matrix want = Matrix::identity(4);
             want(0, 0) = 0;
             return expect_equal(drazin(load().A).idempotent, want);
         }},
        {"T4.1-conditions", [=] {
             const ConditionReport r = check_pert(PertCase::T41, load());
             if (r.conditions.size() != 6) return std::optional<std::string>("expected six conditions");
             return r.all_hold() ? std::nullopt : std::optional<std::string>(r.first_failure()->name + " fails");
         }},
        {"closed-form", [=] { return expect_equal(gdrazin_pert(PertCase::T41, load()), frozen_schur_inverse()); }},
        {"oracle", [=] { return expect_equal(drazin_inverse(load().assemble()), frozen_schur_inverse()); }},
    };
}

GaussianRational random_scalar(SplitMix64& rng) {
    const GaussianRational re = GaussianRational::fraction(rng.uniform(-9, 9), rng.uniform(1, 6));
    if (!rng.chance(1, 2)) return re;
    return {re.re(), GaussianRational::fraction(rng.uniform(-9, 9), rng.uniform(1, 6)).re()};
}

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix x(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) x(r, c) = random_scalar(rng);
    return x;
}

Matrix random_int_matrix(SplitMix64& rng, std::size_t n) {
    Matrix x(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng.chance(1, 2)) x(r, c) = rng.uniform(-2, 2);
    return x;
}

std::vector<Check> algebra_checks() {
    std::vector<Check> checks;
    checks.push_back({"scalar-field", [] {
                          SplitMix64 rng(101);
                          for (int t = 0; t < 200; ++t) {
                              const GaussianRational x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
                              if ((x + y) - y != x) return expect(false, "(x+y)-y != x for x = " + x.to_string());
                              if (x * (y + z) != x * y + x * z) return expect(false, "distributivity fails");
                              if (!y.is_zero() && (x * y) / y != x) return expect(false, "(xy)/y != x");
                              if (GaussianRational::parse(x.to_string()) != x) return expect(false, "text round trip");
                          }
                          return std::optional<std::string>();
                      }});
    checks.push_back({"matrix-ring", [] {
                          SplitMix64 rng(102);
                          for (int t = 0; t < 30; ++t) {
                              const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
                              const Matrix a = random_matrix(rng, n, n + 1), b = random_matrix(rng, n + 1, n),
                                           c = random_matrix(rng, n, 2);
                              if ((a * b) * c != a * (b * c)) return expect(false, "associativity");
                              if ((a * b).transpose() != b.transpose() * a.transpose()) return expect(false, "transpose");
                              if (rank(a) + null_space_basis(a).cols() != a.cols()) return expect(false, "rank-nullity");
                          }
                          return std::optional<std::string>();
                      }});
    checks.push_back({"matrix-inverse", [] {
                          SplitMix64 rng(103);
                          for (int t = 0; t < 30; ++t) {
                              const Matrix a = random_matrix(rng, 3, 3);
                              if (rank(a) < 3) continue;
                              if (inverse(a) * a != Matrix::identity(3)) return expect(false, "inverse(a) a != I");
                          }
                          return std::optional<std::string>();
                      }});
    checks.push_back({"drazin-axioms", [] {
                          SplitMix64 rng(104);
                          for (int t = 0; t < 40; ++t) {
                              const Matrix a = random_int_matrix(rng, static_cast<std::size_t>(rng.uniform(2, 6)));
                              const DrazinTriple d = drazin(a);
                              if (!verify_axioms(a, d.inverse).all_hold()) return expect(false, "axioms fail");
                              if (d.idempotent * d.idempotent != d.idempotent) return expect(false, "A^pi not idempotent");
                          }
                          return std::optional<std::string>();
                      }});
    checks.push_back({"drazin-trivial", [] {
                          if (auto p = expect_equal(drazin_inverse(Matrix::identity(3)), Matrix::identity(3))) return p;
                          if (index(Matrix::identity(3)) != 0) return expect(false, "index(I) != 0");
                          const Matrix nil = Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
                          if (index(nil) != 3) return expect(false, "index of the 3x3 shift != 3");
                          return expect_equal(drazin_inverse(nil), Matrix::zero(3));
                      }});
    return checks;
}

// The two instance families on which a derivation step is not implied by
// the case's hypotheses. Counted, not failed: `verify` on these seeds
// reports them as failures.
void gap_notes(RunReport& report) {
    std::size_t c45 = 0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        const SchurSpec s = std::get<SchurSpec>(generate(default_recipe(require_case("C4.5"), k)).body);
        if (!derive_commutation(s)) ++c45;
    }
    report.notes.push_back("C4.5: ABCA^d=BCAA^d fails on " + std::to_string(c45) +
                           " of 20 instances (seeds 0-19); A^2BCA=ABCA^2 alone does not imply it");
    const SchurSpec t44 = std::get<SchurSpec>(generate(default_recipe(require_case("T4.4"), 151)).body);
    const Condition* step = pert_obligations(PertCase::T44, t44).find("P^2QP=0");
    if (step && !step->holds)
        report.notes.push_back("T4.4 seed 151: hypotheses hold but P^2QP=0 fails, so the sum step is not certified");
}

}  // namespace

CaseRef require_case(std::string_view id) {
    CaseRef c;
    if (!parse_case(id, c)) throw UsageError("unknown case id \"" + std::string(id) + "\"; valid ids: " + valid_ids());
    return c;
}

CommandResult cmd_drazin(const std::filesystem::path& path) {
    const Matrix a = io::matrix_from_json(io::read_document(path));
    if (!a.is_square()) {
        throw DimensionError(path.string() + ": expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
    return {io::to_json(drazin(a)), kExitOk, 3};
}

CommandResult cmd_check(std::string_view case_id, const std::filesystem::path& path) {
    const CaseRef c = require_case(case_id);
    io::Json doc = io::read_document(path);
    if (doc.is_object() && doc.contains("instance")) doc = doc["instance"];
    const ConditionReport r = check_instance(c, io::body_from_json(c, doc));
    return {io::to_json(r), r.all_hold() ? kExitOk : kExitFailures, 2};
}

CommandResult cmd_verify(std::string_view case_id, std::size_t count, std::uint64_t seed) {
    const auto start = Clock::now();
    const CaseRef c = require_case(case_id);
    if (count == 0) throw UsageError("--count must be at least 1");
    RunReport report;
    report.command = "verify " + std::string(c.id()) + " --count " + std::to_string(count) + " --seed " +
                     std::to_string(seed);
    verify_into(report, c, count, seed);
    return report.finish(start);
}

CommandResult cmd_gen(std::string_view case_id, std::uint64_t seed, std::optional<std::size_t> n,
                      std::optional<std::size_t> m) {
    const CaseRef c = require_case(case_id);
    GenRecipe r = default_recipe(c, seed);
    if (n) r.n = *n;
    if (m) r.m = *m;
    return {io::to_json(generate(r)), kExitOk, 4};
}

CommandResult cmd_selftest(const std::optional<std::filesystem::path>& fixture_dir) {
    const auto start = Clock::now();
    RunReport report;
    report.command = "selftest";

    std::function<BlockSpec()> rank_one = fixture_rank_one_blocks;
    std::function<SchurSpec()> schur = fixture_schur_blocks;
    if (fixture_dir) {
        const auto dir = *fixture_dir;
        rank_one = [dir] { return io::block_from_json(io::read_document(dir / "rank_one_blocks.json")); };
        schur = [dir] { return io::schur_from_json(io::read_document(dir / "schur_blocks.json")); };
    }
    checks_into(report, "fixture:rank-one-blocks", rank_one_checks(rank_one));
    checks_into(report, "fixture:schur-blocks", schur_checks(schur));
    checks_into(report, "algebra", algebra_checks());
    for (const CaseRef& c : all_cases()) verify_into(report, c, 3, 1);
    gap_notes(report);

    try {
        const BlockSpec s = rank_one();
        if ((s.A * s.B).is_zero() && (s.C * s.B).is_zero())
            report.notes.push_back("fixture:rank-one-blocks has AB = 0 and CB = 0");
    } catch (const std::exception&) {
        // Already reported by the fixture checks.
    }
    return report.finish(start);
}

}  // namespace gdrazin::cli
