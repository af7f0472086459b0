#include <doctest.h>

#include "oracle.hpp"
#include "sweedler/matrix.hpp"

using namespace sweedler;

namespace {

const Field Q = Field::rationals();

Matrix from_oracle(const oracle::Mat& m) {
    Matrix out(m.size(), m.empty() ? 0 : m[0].size(), Q);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out(i, j) = Scalar::rational(Rational::fraction(m[i][j].n, m[i][j].d));
    return out;
}

}  // namespace

TEST_CASE("rref on the named examples") {
    const Matrix id2 = Matrix::identity(2, Q);
    const Echelon e1 = id2.rref();
    CHECK(e1.reduced == id2);
    CHECK(e1.pivots == std::vector<std::size_t>{0, 1});

    const Matrix m = Matrix::from_rows(Q, {{2, 4}, {1, 2}});
    const Echelon e2 = m.rref();
    CHECK(e2.reduced == Matrix::from_rows(Q, {{1, 2}, {0, 0}}));
    CHECK(e2.pivots == std::vector<std::size_t>{0});

    // over F_2: [[1,1],[1,1]] reduces by hand to [[1,1],[0,0]]
    const Field f2 = Field::prime(2);
    Matrix m2(2, 2, f2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m2(i, j) = Scalar::one(f2);
    const Echelon e3 = m2.rref();
    Matrix expect(2, 2, f2);
    expect(0, 0) = Scalar::one(f2);
    expect(0, 1) = Scalar::one(f2);
    CHECK(e3.reduced == expect);
    CHECK(e3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref against the independent elimination oracle") {
    unsigned long long seed = 12345;
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(std::abs(oracle::lcg_next(seed))) % 4;
        const std::size_t cols = 1 + static_cast<std::size_t>(std::abs(oracle::lcg_next(seed))) % 4;
        oracle::Mat sample(rows, std::vector<oracle::Frac>(cols));
        for (auto& row : sample)
            for (auto& cell : row) cell = oracle::Frac{oracle::lcg_next(seed), 1};
        const oracle::Reduced expected = oracle::rref(sample);
        const Echelon got = from_oracle(sample).rref();
        CHECK(got.pivots == expected.pivots);
        CHECK(got.reduced == from_oracle(expected.m));
    }
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    unsigned long long seed = 777;
    for (int trial = 0; trial < 20; ++trial) {
        oracle::Mat sample(3, std::vector<oracle::Frac>(4));
        for (auto& row : sample)
            for (auto& cell : row) cell = oracle::Frac{oracle::lcg_next(seed), 1};
        const Matrix m = from_oracle(sample);
        const Matrix r = m.rref().reduced;
        CHECK(r.rref().reduced == r);
        CHECK(m.rank() + m.kernel_basis().size() == m.cols());
    }
}

TEST_CASE("kernel bases") {
    CHECK(Matrix::identity(3, Q).kernel_basis().empty());

    const std::vector<Matrix> z = Matrix(2, 2, Q).kernel_basis();
    REQUIRE(z.size() == 2);
    CHECK(z[0] == Matrix::unit_column(2, 0, Q));
    CHECK(z[1] == Matrix::unit_column(2, 1, Q));

    // solving x + 2y = 0 by hand gives (-2, 1)
    const std::vector<Matrix> k = Matrix::from_rows(Q, {{1, 2}}).kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Matrix::from_rows(Q, {{-2}, {1}}));

    // kernel vectors are genuine solutions
    const Matrix m = Matrix::from_rows(Q, {{1, 2, 3}, {2, 4, 6}});
    for (const Matrix& v : m.kernel_basis()) CHECK((m * v).is_zero());
}

TEST_CASE("kron follows the flat index convention") {
    CHECK(Matrix::kron(Matrix::identity(2, Q), Matrix::identity(3, Q)) == Matrix::identity(6, Q));

    // the flip on k^2 (x) k^2 sends flat index 1 = (0,1) to flat index 2 = (1,0)
    const Matrix tau = Matrix::tensor_permutation({2, 2}, {1, 0}, Q);
    CHECK(tau * Matrix::unit_column(4, 1, Q) == Matrix::unit_column(4, 2, Q));
    CHECK(tau * Matrix::unit_column(4, 0, Q) == Matrix::unit_column(4, 0, Q));
    CHECK(tau.is_permutation());

    unsigned long long seed = 42;
    for (int trial = 0; trial < 8; ++trial) {
        auto sample = [&] {
            oracle::Mat s(2, std::vector<oracle::Frac>(2));
            for (auto& row : s)
                for (auto& cell : row) cell = oracle::Frac{oracle::lcg_next(seed), 1};
            return from_oracle(s);
        };
        const Matrix a = sample(), b = sample(), c = sample(), d = sample();
        CHECK(Matrix::kron(a, b) * Matrix::kron(c, d) == Matrix::kron(a * c, b * d));
    }
}

TEST_CASE("inverse and solve") {
    const Matrix m = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
    const Matrix inv = m.inverse();
    CHECK(inv * m == Matrix::identity(2, Q));
    CHECK(m * inv == Matrix::identity(2, Q));
    CHECK_THROWS_AS(Matrix::from_rows(Q, {{1, 2}, {2, 4}}).inverse(), singular_error);

    const Matrix rhs = Matrix::from_rows(Q, {{5}, {6}});
    const auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    CHECK(m * *x == rhs);

    const Matrix wide = Matrix::from_rows(Q, {{1, 2}, {2, 4}});
    CHECK(!wide.solve(Matrix::from_rows(Q, {{1}, {3}})).has_value());
    CHECK(wide.in_column_space(Matrix::from_rows(Q, {{1}, {2}})));
    CHECK(!wide.in_column_space(Matrix::from_rows(Q, {{1}, {3}})));
}

TEST_CASE("row space accumulates a canonical basis") {
    RowSpace rs(3, Q);
    CHECK(rs.insert_column(Matrix::from_rows(Q, {{1}, {1}, {0}})));
    CHECK(rs.insert_column(Matrix::from_rows(Q, {{0}, {2}, {2}})));
    CHECK(!rs.insert_column(Matrix::from_rows(Q, {{1}, {3}, {2}})));  // dependent
    CHECK(rs.rank() == 2);
    CHECK(rs.contains_column(Matrix::from_rows(Q, {{2}, {0}, {-2}})));
    CHECK(!rs.contains_column(Matrix::from_rows(Q, {{1}, {0}, {0}})));

    // insertion order does not change the canonical basis
    RowSpace other(3, Q);
    other.insert_column(Matrix::from_rows(Q, {{0, 2, 2}}).transpose());
    other.insert_column(Matrix::from_rows(Q, {{1, 1, 0}}).transpose());
    CHECK(rs.basis_matrix() == other.basis_matrix());
}

TEST_CASE("matrix shape errors") {
    const Matrix a = Matrix::identity(2, Q);
    const Matrix b = Matrix::identity(3, Q);
    CHECK_THROWS_AS(a + b, error);
    CHECK_THROWS_AS(a * b, error);
    CHECK_THROWS_AS(a + Matrix::identity(2, Field::prime(3)), field_mismatch);
}
