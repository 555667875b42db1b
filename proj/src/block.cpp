#include "gdrazin/block.hpp"

#include <array>
#include <initializer_list>
#include <string>

#include "gdrazin/additive.hpp"
#include "gdrazin/drazin.hpp"
#include "gdrazin/errors.hpp"

namespace gdrazin {

namespace {

// How M = p + q is split and where p^d, q^d come from.
enum class Split {
    UpperTriangular,  // p = (A B; 0 D), q = (0 0; C 0)
    LowerTriangular,  // p = (A 0; C D), q = (0 B; 0 0)
    AntiDiagonal,     // p = (0 B; 0 0), q = (0 0; C 0)
    DiagAAntiDiag,    // p = diag(A, 0), q = (0 B; C 0) via L3.6
    DiagDAntiDiag,    // p = diag(0, D), q = (0 B; C 0) via L3.6
    DiagDRest,        // p = diag(0, D), q = (A B; C 0) via L3.7
    DiagARest,        // p = diag(A, 0), q = (0 B; C D) via L3.10
};

struct CaseRow {
    BlockCase value;
    std::string_view id;
    std::vector<std::string_view> words;
    Split split;
};

const std::array<CaseRow, 11>& case_table() {
    static const std::array<CaseRow, 11> table{{
        {BlockCase::T31, "T3.1", {"ABC", "DCA", "DCB", "CBCA", "CBCB"}, Split::UpperTriangular},
        {BlockCase::C32, "C3.2", {"BC", "DC"}, Split::UpperTriangular},
        {BlockCase::T33, "T3.3", {"ABC", "ABD", "DCB", "BCBC", "BCBD"}, Split::LowerTriangular},
        {BlockCase::C34, "C3.4", {"ABC", "ABD", "BCB", "DCB"}, Split::LowerTriangular},
        {BlockCase::L36, "L3.6", {"CBCB", "A", "D"}, Split::AntiDiagonal},
        {BlockCase::L37, "L3.7", {"ABC", "CBCB", "D"}, Split::DiagAAntiDiag},
        {BlockCase::T38, "T3.8", {"ABC", "DCA", "DCB", "CBCB"}, Split::DiagDRest},
        {BlockCase::C39, "C3.9", {"ABC", "CBC", "DCA", "DCB"}, Split::DiagDRest},
        {BlockCase::L310, "L3.10", {"DCB", "CBCB", "A"}, Split::DiagDAntiDiag},
        {BlockCase::T311, "T3.11", {"ABC", "ABD", "DCB", "CBCB"}, Split::DiagARest},
        {BlockCase::C312, "C3.12", {"ABC", "ABD", "BCB", "DCB"}, Split::DiagARest},
    }};
    return table;
}

const CaseRow& row_for(BlockCase c) {
    for (const auto& row : case_table())
        if (row.value == c) return row;
    throw std::logic_error("unknown block case");
}

const Matrix& letter(const BlockSpec& s, char ch) {
    switch (ch) {
        case 'A': return s.A;
        case 'B': return s.B;
        case 'C': return s.C;
        case 'D': return s.D;
    }
    throw std::logic_error(std::string("bad block letter ") + ch);
}

Matrix word_product(const BlockSpec& s, std::string_view word) {
    Matrix out = letter(s, word.front());
    for (std::size_t i = 1; i < word.size(); ++i) out = out * letter(s, word[i]);
    return out;
}

ConditionReport additive_obligations(std::string case_id, const Matrix& p, const Matrix& q) {
    ConditionReport r;
    r.case_id = std::move(case_id);
    const Matrix qp = q * p;
    r.add("pq^2=0", p * q * q);
    r.add("p^2qp=0", p * p * qp);
    r.add("(qp)^2=0", qp * qp);
    return r;
}

// Sub-matrix (A' B'; C' D') of a derivation handed to a lemma case.
BlockDerivation delegate(BlockCase lemma, const BlockSpec& sub, std::string_view parent) {
    const ConditionReport pre = check_case(lemma, sub);
    pre.require_integrity(std::string(parent) + ": hypotheses of " + std::string(case_id(lemma)) +
                          " for the summand q");
    return gdrazin_block_traced(lemma, sub);
}

}  // namespace

std::string_view case_id(BlockCase c) { return row_for(c).id; }

bool parse_block_case(std::string_view id, BlockCase& out) {
    for (const auto& row : case_table()) {
        if (row.id == id) {
            out = row.value;
            return true;
        }
    }
    return false;
}

const std::vector<BlockCase>& all_block_cases() {
    static const std::vector<BlockCase> cases = [] {
        std::vector<BlockCase> v;
        for (const auto& row : case_table()) v.push_back(row.value);
        return v;
    }();
    return cases;
}

ConditionReport check_case(BlockCase c, const BlockSpec& s) {
    s.validate();
    const CaseRow& row = row_for(c);
    ConditionReport r;
    r.case_id = std::string(row.id);
    for (std::string_view w : row.words) r.add(std::string(w) + "=0", word_product(s, w));
    return r;
}

Matrix upper_triangular_drazin(const Matrix& a, const Matrix& b, const Matrix& d) {
    const BlockSpec spec{a, b, Matrix::zero(d.rows(), a.cols()), d};
    spec.validate();
    const std::size_t n = a.rows(), m = d.rows();
    const DrazinTriple ta = drazin(a);
    const DrazinTriple td = drazin(d);

    Matrix s = -(ta.inverse * b * td.inverse);
    Matrix ad_pow = ta.inverse * ta.inverse;  // (A^d)^(i+2)
    Matrix dd_pow = td.inverse * td.inverse;  // (D^d)^(i+2)
    Matrix a_pow = Matrix::identity(n);       // A^i
    Matrix d_pow = Matrix::identity(m);       // D^i
    for (std::size_t i = 0; i <= n + m; ++i) {
        s += ad_pow * b * d_pow * td.idempotent;
        s += ta.idempotent * a_pow * b * dd_pow;
        ad_pow = ad_pow * ta.inverse;
        dd_pow = dd_pow * td.inverse;
        a_pow = a_pow * a;
        d_pow = d_pow * d;
    }
    const Matrix result = assemble_block({ta.inverse, s, Matrix::zero(m, n), td.inverse});
    verify_axioms(assemble_block(spec), result).require_integrity("upper_triangular_drazin");
    return result;
}

Matrix lower_triangular_drazin(const Matrix& a, const Matrix& c, const Matrix& d) {
    // (A 0; C D)^T = (A^T C^T; 0 D^T).
    return upper_triangular_drazin(a.transpose(), c.transpose(), d.transpose()).transpose();
}

BlockDerivation gdrazin_block_traced(BlockCase c, const BlockSpec& s) {
    check_case(c, s).require();
    const CaseRow& row = row_for(c);
    const std::size_t n = s.n(), m = s.m();
    const Matrix zn = Matrix::zero(n), zm = Matrix::zero(m);
    const Matrix znm = Matrix::zero(n, m), zmn = Matrix::zero(m, n);

    BlockDerivation out;
    switch (row.split) {
        case Split::UpperTriangular:
            out.p = assemble_block({s.A, s.B, zmn, s.D});
            out.q = assemble_block({zn, znm, s.C, zm});
            out.p_d = upper_triangular_drazin(s.A, s.B, s.D);
            out.q_d = Matrix::zero(n + m);  // q^2 = 0
            break;
        case Split::LowerTriangular:
            out.p = assemble_block({s.A, znm, s.C, s.D});
            out.q = assemble_block({zn, s.B, zmn, zm});
            out.p_d = lower_triangular_drazin(s.A, s.C, s.D);
            out.q_d = Matrix::zero(n + m);
            break;
        case Split::AntiDiagonal:
            // This order needs only (CB)^2 = 0; the reverse one needs (BC)^2 = 0.
            out.p = assemble_block({zn, s.B, zmn, zm});
            out.q = assemble_block({zn, znm, s.C, zm});
            out.p_d = Matrix::zero(n + m);
            out.q_d = Matrix::zero(n + m);
            break;
        case Split::DiagAAntiDiag:
        case Split::DiagDAntiDiag: {
            const bool keep_a = row.split == Split::DiagAAntiDiag;
            out.p = assemble_block({keep_a ? s.A : zn, znm, zmn, keep_a ? zm : s.D});
            out.q = assemble_block({zn, s.B, s.C, zm});
            out.p_d = assemble_block(
                {keep_a ? drazin_inverse(s.A) : zn, znm, zmn, keep_a ? zm : drazin_inverse(s.D)});
            out.q_d = delegate(BlockCase::L36, {zn, s.B, s.C, zm}, row.id).inverse;
            break;
        }
        case Split::DiagDRest:
            out.p = assemble_block({zn, znm, zmn, s.D});
            out.q = assemble_block({s.A, s.B, s.C, zm});
            out.p_d = assemble_block({zn, znm, zmn, drazin_inverse(s.D)});
            out.q_d = delegate(BlockCase::L37, {s.A, s.B, s.C, zm}, row.id).inverse;
            break;
        case Split::DiagARest:
            out.p = assemble_block({s.A, znm, zmn, zm});
            out.q = assemble_block({zn, s.B, s.C, s.D});
            out.p_d = assemble_block({drazin_inverse(s.A), znm, zmn, zm});
            out.q_d = delegate(BlockCase::L310, {zn, s.B, s.C, s.D}, row.id).inverse;
            break;
    }

    out.obligations = additive_obligations(std::string(row.id) + "-splitting", out.p, out.q);
    out.obligations.require_integrity(std::string(row.id));
    out.inverse = sum_thm25(out.p, out.p_d, out.q, out.q_d).inverse;
    verify_axioms(assemble_block(s), out.inverse).require_integrity(std::string(row.id) + " result");
    return out;
}

Matrix gdrazin_block(BlockCase c, const BlockSpec& s) { return gdrazin_block_traced(c, s).inverse; }

Matrix antidiag_drazin(const Matrix& b, const Matrix& c) {
    const BlockSpec s{Matrix::zero(b.rows()), b, c, Matrix::zero(c.rows())};
    return gdrazin_block(BlockCase::L36, s);
}

}  // namespace gdrazin
