#include <gtest/gtest.h>

#include <random>

#include "gdrazin/errors.hpp"
#include "gdrazin/matrix.hpp"
#include "gdrazin/scalar.hpp"
#include "support/oracle.hpp"

using namespace gdrazin;
using gdrazin::testing::random_int_matrix;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational::fraction(n, d); }

Matrix example_4_3_a() {
    return Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}});
}

}  // namespace

TEST(GaussianRational, ParsesGrammar) {
    EXPECT_EQ(GaussianRational::parse("3"), q(3));
    EXPECT_EQ(GaussianRational::parse("-1/2"), q(-1, 2));
    EXPECT_EQ(GaussianRational::parse("2i"), GaussianRational(0, 2));
    EXPECT_EQ(GaussianRational::parse("i"), GaussianRational(0, 1));
    EXPECT_EQ(GaussianRational::parse("1/2-3/4i"), GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)));
    EXPECT_EQ(GaussianRational::parse("5+i"), GaussianRational(5, 1));
}

TEST(GaussianRational, NormalizesNonCanonicalInput) {
    const auto z = GaussianRational::parse("4/6+10/5i");
    EXPECT_EQ(z.re(), mpq_class(2, 3));
    EXPECT_EQ(z.im(), mpq_class(2));
    EXPECT_EQ(z.to_string(), "2/3+2i");
    EXPECT_EQ(GaussianRational::parse("-0/7").to_string(), "0");
}

TEST(GaussianRational, RejectsMalformedInput) {
    for (const char* bad : {"", "1/0", "1/", "/2", "1+2", "i+1", "1.5", "2ii", "1+2i+3i", "abc"}) {
        EXPECT_THROW(GaussianRational::parse(bad), ParseError) << bad;
    }
}

TEST(GaussianRational, TextRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 40);
    for (int t = 0; t < 500; ++t) {
        const GaussianRational z(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        EXPECT_EQ(GaussianRational::parse(z.to_string()), z) << z;
    }
    EXPECT_EQ(GaussianRational(0, -1).to_string(), "-1i");
    EXPECT_EQ(GaussianRational(2, -1).to_string(), "2-i");
}

TEST(GaussianRational, FieldArithmetic) {
    const GaussianRational z(mpq_class(1, 2), mpq_class(-3, 4));
    EXPECT_EQ(z * z.reciprocal(), q(1));
    EXPECT_EQ(z * z.conj(), GaussianRational(z.norm()));
    EXPECT_EQ((z + z) / q(2), z);
    EXPECT_THROW(q(0).reciprocal(), SingularMatrixError);
}

TEST(Matrix, IdentityIsMultiplicativeUnit) {
    const Matrix x = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    EXPECT_EQ(Matrix::identity(2) * x, x);
    EXPECT_EQ(x * Matrix::identity(3), x);
}

TEST(Matrix, TransposeIsInvolution) {
    const Matrix x = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    EXPECT_EQ(x.transpose().transpose(), x);
}

TEST(Matrix, ReciprocalDiagonal) {
    Matrix half_third(2, 2);
    half_third(0, 0) = q(1, 2);
    half_third(1, 1) = q(1, 3);
    EXPECT_EQ(half_third * Matrix::from_rows({{2, 0}, {0, 3}}), Matrix::identity(2));
}

TEST(Matrix, DimensionMismatchIsRejected) {
    const Matrix a(2, 3);
    const Matrix b(2, 2);
    EXPECT_THROW(a * a, DimensionError);
    EXPECT_THROW(a + b, DimensionError);
    EXPECT_THROW(mat_pow(a, 2), DimensionError);
    EXPECT_THROW(inverse(a), DimensionError);
}

TEST(Matrix, Powers) {
    const Matrix jordan = Matrix::from_rows({{0, 1}, {0, 0}});
    EXPECT_EQ(mat_pow(jordan, 0), Matrix::identity(2));
    EXPECT_TRUE(mat_pow(jordan, 2).is_zero());
    // Hand multiplication of the printed 4x4 A: only the (1,1) entry survives.
    EXPECT_EQ(mat_pow(example_4_3_a(), 2), Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST(Matrix, Rank) {
    EXPECT_EQ(rank(Matrix::zero(3)), 0u);
    EXPECT_EQ(rank(Matrix::identity(5)), 5u);
    EXPECT_EQ(rank(example_4_3_a()), 2u);
}

TEST(Matrix, Inverse) {
    EXPECT_EQ(inverse(Matrix::identity(3)), Matrix::identity(3));
    Matrix expected(2, 2);
    expected(0, 0) = q(1, 2);
    expected(1, 1) = q(1, 3);
    EXPECT_EQ(inverse(Matrix::from_rows({{2, 0}, {0, 3}})), expected);
    EXPECT_THROW(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), SingularMatrixError);
    EXPECT_EQ(inverse(Matrix(0, 0)), Matrix(0, 0));
}

TEST(Matrix, ComplexInverse) {
    Matrix x(2, 2);
    x(0, 0) = GaussianRational(1, 1);
    x(0, 1) = GaussianRational(2);
    x(1, 0) = GaussianRational(0, -1);
    x(1, 1) = GaussianRational(mpq_class(1, 2), 3);
    EXPECT_EQ(x * inverse(x), Matrix::identity(2));
    EXPECT_EQ(inverse(x) * x, Matrix::identity(2));
}

TEST(Matrix, RandomInverseProperty) {
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 50) {
        const Matrix x = random_int_matrix(rng, 3, 3, -2, 2);
        if (rank(x) < 3) continue;
        const Matrix xi = inverse(x);
        EXPECT_EQ(x * xi, Matrix::identity(3));
        EXPECT_EQ(xi * x, Matrix::identity(3));
        ++checked;
    }
}

TEST(Matrix, Bases) {
    EXPECT_EQ(column_space_basis(Matrix::identity(3)).cols(), 3u);
    EXPECT_EQ(null_space_basis(Matrix::identity(3)).cols(), 0u);
    EXPECT_EQ(column_space_basis(Matrix::zero(3)).cols(), 0u);
    EXPECT_EQ(null_space_basis(Matrix::zero(3)).cols(), 3u);

    const Matrix kernel = null_space_basis(Matrix::from_rows({{0, 1}, {0, 0}}));
    ASSERT_EQ(kernel.cols(), 1u);
    EXPECT_FALSE(kernel(0, 0).is_zero());
    EXPECT_TRUE(kernel(1, 0).is_zero());
}

TEST(Matrix, AlgebraicIdentitiesOnRandomMatrices) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t p = dim(rng), r = dim(rng), s = dim(rng), u = dim(rng);
        const Matrix x = random_int_matrix(rng, p, r, -3, 3, 0.7);
        const Matrix y = random_int_matrix(rng, r, s, -3, 3, 0.7);
        const Matrix y2 = random_int_matrix(rng, r, s, -3, 3, 0.7);
        const Matrix z = random_int_matrix(rng, s, u, -3, 3, 0.7);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + y2), x * y + x * y2);
        EXPECT_EQ((y + y2).transpose(), y.transpose() + y2.transpose());
        EXPECT_EQ((x * y).transpose(), y.transpose() * x.transpose());
    }
}

TEST(Matrix, RankAndBasisProperties) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        // Low density gives a good spread of rank-deficient cases.
        const Matrix x = random_int_matrix(rng, rows, cols, -2, 2, 0.35);
        const std::size_t r = rank(x);
        EXPECT_EQ(r, rank(x.transpose()));

        const Matrix range = column_space_basis(x);
        const Matrix kernel = null_space_basis(x);
        EXPECT_EQ(range.cols(), r);
        EXPECT_EQ(rank(range), r);
        EXPECT_EQ(kernel.cols(), cols - r);
        EXPECT_EQ(rank(kernel), cols - r);
        EXPECT_TRUE((x * kernel).is_zero());
        // Range columns lie in the image: appending them does not raise rank.
        EXPECT_EQ(rank(hstack({x, range})), r);

        Matrix left = random_int_matrix(rng, rows, rows, -2, 2);
        Matrix right = random_int_matrix(rng, cols, cols, -2, 2);
        if (rank(left) == rows && rank(right) == cols) {
            EXPECT_EQ(rank(left * x * right), r);
        }
    }
}

TEST(Matrix, AssembleBlock) {
    BlockSpec zero{Matrix::zero(2), Matrix::zero(2, 1), Matrix::zero(1, 2), Matrix::zero(1)};
    EXPECT_TRUE(assemble_block(zero).is_zero());

    const BlockSpec ex35{Matrix::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 1}}), Matrix::from_rows({{1}, {1}, {-1}}),
                         Matrix::from_rows({{1, 0, 1}}), Matrix::zero(1)};
    EXPECT_EQ(assemble_block(ex35),
              Matrix::from_rows({{0, 0, 0, 1}, {0, 0, 0, 1}, {1, 0, 1, -1}, {1, 0, 1, 0}}));

    BlockSpec bad = ex35;
    bad.B = Matrix::zero(2, 1);
    EXPECT_THROW(assemble_block(bad), DimensionError);
}

TEST(Matrix, ExtractInvertsAssemble) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> dim(0, 4);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = dim(rng), m = dim(rng);
        const BlockSpec s{random_int_matrix(rng, n, n, -3, 3), random_int_matrix(rng, n, m, -3, 3),
                          random_int_matrix(rng, m, n, -3, 3), random_int_matrix(rng, m, m, -3, 3)};
        EXPECT_EQ(extract_block(assemble_block(s), n), s);
    }
}
