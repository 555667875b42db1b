#include "gdrazin/perturbation.hpp"

#include <array>
#include <string>

#include "gdrazin/additive.hpp"
#include "gdrazin/drazin.hpp"
#include "gdrazin/errors.hpp"

namespace gdrazin {

void SchurSpec::validate() const {
    const std::size_t n = A.rows(), m = C.rows();
    if (!A.is_square() || B.rows() != n || B.cols() != m || C.cols() != n) {
        throw DimensionError("SchurSpec: need A n x n, B n x m, C m x n");
    }
    if (D && (D->rows() != m || D->cols() != m)) throw DimensionError("SchurSpec: D must be m x m");
}

Matrix SchurSpec::schur_d() const {
    validate();
    return C * drazin_inverse(A) * B;
}

BlockSpec SchurSpec::blocks() const { return {A, B, C, schur_d()}; }

Matrix SchurSpec::assemble() const { return assemble_block(blocks()); }

namespace {

struct CaseRow {
    PertCase value;
    std::string_view id;
};

constexpr std::array<CaseRow, 5> kCases{{
    {PertCase::T41, "T4.1"},
    {PertCase::C42, "C4.2"},
    {PertCase::T44, "T4.4"},
    {PertCase::C45, "C4.5"},
    {PertCase::C46, "C4.6"},
}};

bool first_chain(PertCase c) { return c == PertCase::T41 || c == PertCase::C42; }
bool is_corollary(PertCase c) { return c == PertCase::C42 || c == PertCase::C45 || c == PertCase::C46; }

// Products shared by the predicates and the proof chains.
struct Parts {
    std::size_t n, m;
    Matrix a, b, c, ad, api, d;
    Matrix bc, aad;

    explicit Parts(const SchurSpec& s) : n(s.n()), m(s.m()), a(s.A), b(s.B), c(s.C) {
        s.validate();
        const DrazinTriple t = drazin(a);
        ad = t.inverse;
        api = t.idempotent;
        d = c * ad * b;
        bc = b * c;
        aad = a * ad;
    }
};

struct Chain {
    Matrix p, q, p_d, q_d, inner_sum;
    ConditionReport obligations;
};

// Drazin inverse of X Y where X = (AA^d; CA^d), Y = (A, AA^dB), from the
// reversed product Y X = inner via Cline's formula.
Matrix rank_factor_drazin(const Parts& s, const Matrix& inner_d) {
    const Matrix x = vstack({s.aad, s.c * s.ad});
    const Matrix y = hstack({s.a, s.aad * s.b});
    return x * inner_d * inner_d * y;
}

Matrix commuting_sum_drazin(const Matrix& x, const Matrix& y, ConditionReport& ob, const std::string& name) {
    ob.add(name, x * y - y * x);
    return drazin_inverse(x + y);
}

Chain build_chain(PertCase c, const Parts& s) {
    Chain ch;
    ConditionReport& ob = ch.obligations;
    ob.case_id = std::string(case_id(c)) + "-derivation";
    const std::size_t n = s.n, m = s.m;
    const Matrix zn = Matrix::zero(n), zm = Matrix::zero(m);
    const Matrix znm = Matrix::zero(n, m), zmn = Matrix::zero(m, n);

    // Established by the corollary chains, assumed by the theorems.
    ob.add("ABCA^d=BCAA^d", s.a * s.bc * s.ad - s.bc * s.aad);

    const Matrix a2ad = s.a * s.aad;
    const Matrix xy = assemble_block({a2ad, s.aad * s.b, s.c * s.aad, s.d});
    const Matrix x = vstack({s.aad, s.c * s.ad});
    const Matrix y = hstack({s.a, s.aad * s.b});
    const Matrix bcad = s.bc * s.ad;

    if (first_chain(c)) {
        ch.p = assemble_block({s.a * s.api, znm, zmn, zm});
        ch.q = assemble_block({a2ad, s.b, s.c, s.d});
        const Matrix q2 = assemble_block({zn, s.api * s.b, s.c * s.api, zm});
        const Matrix pq = ch.p * ch.q;
        ob.add("PQP=0", pq * ch.p);
        ob.add("QPQ=0", ch.q * pq);
        ob.add("P^2Q^2=0", ch.p * pq * ch.q);
        ob.add("PQ^3=0", pq * ch.q * ch.q);
        ob.add_fact("P nilpotent", is_nilpotent(ch.p), ch.p);
        ob.add("Q=Q1+Q2", ch.q - xy - q2);
        ob.add("Q2Q1=0", q2 * xy);
        const Matrix q2_sq = q2 * q2;
        ob.add("Q2^4=0", q2_sq * q2_sq);
        ob.add("Q1=(AA^d;CA^d)(A,AA^dB)", x * y - xy);
        ob.add("BCA^d=AA^dBCA^d", bcad - s.aad * bcad);
        ob.add("(A,AA^dB)(AA^d;CA^d)=A^2A^d+BCA^d", y * x - a2ad - bcad);
        ch.inner_sum = a2ad + bcad;
        const Matrix inner_d = commuting_sum_drazin(a2ad, bcad, ob, "(A^2A^d)(BCA^d)=(BCA^d)(A^2A^d)");
        const Matrix q1_d = rank_factor_drazin(s, inner_d);
        ch.p_d = Matrix::zero(n + m);
        // Q2 Q1 = 0 and Q2 is nilpotent.
        ch.q_d = ab_zero_formula(q2, Matrix::zero(n + m), xy, q1_d, n + m);
    } else {
        ch.p = assemble_block({s.a, s.aad * s.b, s.c, s.d});
        ch.q = assemble_block({zn, s.api * s.b, zmn, zm});
        const Matrix p2 = assemble_block({s.a * s.api, znm, s.c * s.api, zm});
        const Matrix qp = ch.q * ch.p;
        ob.add("P^2QP=0", ch.p * ch.p * qp);
        ob.add("(QP)^2=0", qp * qp);
        ob.add("Q^2=0", ch.q * ch.q);
        ob.add("P=P1+P2", ch.p - xy - p2);
        ob.add("P2P1=0", p2 * xy);
        ob.add_fact("P2 nilpotent", is_nilpotent(p2), p2);
        ob.add("P1=(AA^d;CA^d)(A,AA^dB)", x * y - xy);
        const Matrix inner_b = s.aad * bcad;
        ob.add("(A,AA^dB)(AA^d;CA^d)=A^2A^d+AA^dBCA^d", y * x - a2ad - inner_b);
        ch.inner_sum = a2ad + inner_b;
        const Matrix inner_d =
            commuting_sum_drazin(a2ad, inner_b, ob, "(A^2A^d)(AA^dBCA^d)=(AA^dBCA^d)(A^2A^d)");
        const Matrix p1_d = rank_factor_drazin(s, inner_d);
        ch.p_d = ab_zero_formula(p2, Matrix::zero(n + m), xy, p1_d, n + m);
        ch.q_d = Matrix::zero(n + m);
    }
    return ch;
}

}  // namespace

std::string_view case_id(PertCase c) {
    for (const auto& row : kCases)
        if (row.value == c) return row.id;
    return "?";
}

bool parse_pert_case(std::string_view id, PertCase& out) {
    for (const auto& row : kCases) {
        if (row.id == id) {
            out = row.value;
            return true;
        }
    }
    return false;
}

const std::vector<PertCase>& all_pert_cases() {
    static const std::vector<PertCase> cases = [] {
        std::vector<PertCase> v;
        for (const auto& row : kCases) v.push_back(row.value);
        return v;
    }();
    return cases;
}

ConditionReport check_pert(PertCase c, const SchurSpec& spec) {
    const Parts s(spec);
    ConditionReport r;
    r.case_id = std::string(case_id(c));
    const Matrix a2 = s.a * s.a;
    const Matrix commutation = s.a * s.bc * s.ad - s.bc * s.aad;
    const Matrix corollary_commutation = a2 * s.bc * s.a - s.a * s.bc * a2;
    switch (c) {
        case PertCase::T41:
        case PertCase::C42:
            r.add("CA^piAB=0", s.c * s.api * s.a * s.b);
            r.add("A^piA^2BC=0", s.api * a2 * s.bc);
            r.add("A^piBCA^2=0", s.api * s.bc * a2);
            r.add("A^piBCB=0", s.api * s.bc * s.b);
            if (c == PertCase::T41) {
                r.add("ABCA^d=BCAA^d", commutation);
            } else {
                r.add("A^2BCA=ABCA^2", corollary_commutation);
            }
            break;
        case PertCase::T44:
        case PertCase::C45:
            r.add("A^piA^2BC=0", s.api * a2 * s.bc);
            r.add("A^piBCBC=0", s.api * s.bc * s.bc);
            r.add("CA^piABC=0", s.c * s.api * s.a * s.bc);
            if (c == PertCase::T44) {
                r.add("ABCA^d=BCAA^d", commutation);
            } else {
                r.add("A^2BCA=ABCA^2", corollary_commutation);
            }
            break;
        case PertCase::C46:
            r.add("A^piBC=0", s.api * s.bc);
            r.add("A^2BCA=ABCA^2", corollary_commutation);
            break;
    }
    r.add("D=CA^dB", spec.D ? *spec.D - s.d : Matrix::zero(s.m));
    return r;
}

bool derive_commutation(const SchurSpec& spec) {
    const Parts s(spec);
    return (s.a * s.bc * s.ad - s.bc * s.aad).is_zero();
}

ConditionReport pert_obligations(PertCase c, const SchurSpec& spec) {
    return build_chain(c, Parts(spec)).obligations;
}

PertDerivation gdrazin_pert_traced(PertCase c, const SchurSpec& spec) {
    check_pert(c, spec).require();
    const Parts s(spec);
    Chain ch = build_chain(c, s);
    const std::string id(case_id(c));
    if (is_corollary(c) && !ch.obligations.find("ABCA^d=BCAA^d")->holds) {
        throw OracleIntegrityError(id + ": ABCA^d=BCAA^d does not follow from the hypotheses");
    }
    ch.obligations.require_integrity(id);

    PertDerivation out;
    out.p = ch.p;
    out.q = ch.q;
    out.p_d = ch.p_d;
    out.q_d = ch.q_d;
    out.inner_sum = ch.inner_sum;
    out.obligations = std::move(ch.obligations);
    out.inverse = first_chain(c) ? sum_thm22(out.p, out.p_d, out.q, out.q_d).inverse
                                 : sum_thm25(out.p, out.p_d, out.q, out.q_d).inverse;
    verify_axioms(spec.assemble(), out.inverse).require_integrity(id + " result");
    return out;
}

Matrix gdrazin_pert(PertCase c, const SchurSpec& s) { return gdrazin_pert_traced(c, s).inverse; }

}  // namespace gdrazin
