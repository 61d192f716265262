#include <doctest.h>

#include <random>

#include "cyclohecke/linalg.hpp"

using namespace cyclohecke;

namespace {

// Fraction-free (Bareiss) determinant over exact integers, an oracle
// independent of the rref code path.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    int n = static_cast<int>(a.size());
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Matrix random_int_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-5, 5);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto [red, pivots] = rref(Matrix::identity(3));
    CHECK(red == Matrix::identity(3));
    CHECK(pivots == std::vector<int>{0, 1, 2});

    Matrix ones(2, 2);
    ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
    auto [red2, pivots2] = rref(ones);
    CHECK(pivots2.size() == 1);
    CHECK(red2.at(0, 0) == 1);
    CHECK(red2.at(0, 1) == 1);
    CHECK(red2.at(1, 0) == 0);
    CHECK(red2.at(1, 1) == 0);
}

TEST_CASE("rref rank agrees with the fraction-free determinant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_int_matrix(6, rng);
        std::vector<std::vector<mpz_class>> ints(6, std::vector<mpz_class>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) ints[i][j] = m.at(i, j).get_num();
        bool full_rank = rank(m) == 6;
        CHECK(full_rank == (bareiss_det(ints) != 0));
    }
    // force singularity with a duplicated row
    Matrix m = random_int_matrix(6, rng);
    for (int j = 0; j < 6; ++j) m.at(5, j) = m.at(0, j);
    CHECK(rank(m) < 6);
    std::vector<std::vector<mpz_class>> ints(6, std::vector<mpz_class>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) ints[i][j] = m.at(i, j).get_num();
    CHECK(bareiss_det(ints) == 0);
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_int_matrix(5, rng);
        Matrix once = rref(m).first;
        CHECK(rref(once).first == once);
    }
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace_basis(Matrix::identity(4)).empty());
    CHECK(nullspace_basis(Matrix(3, 3)).size() == 3);
}

TEST_CASE("nullspace of a thin-factor product has the forced dimension") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dist(-4, 4);
    Matrix a(6, 2), b(2, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 2; ++j) {
            a.at(i, j) = dist(rng);
            b.at(j, i) = dist(rng);
        }
    Matrix m = a * b;
    auto kernel = nullspace_basis(m);
    CHECK(static_cast<int>(kernel.size()) == 6 - rank(m));
    CHECK(rank(m) <= 2);
    for (const auto& v : kernel) {
        Vec mv = m.apply(v);
        for (const auto& c : mv) CHECK(c == 0);
    }
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_int_matrix(5, rng);
        if (trial % 2 == 0)
            for (int j = 0; j < 5; ++j) m.at(3, j) = m.at(1, j) * 2;
        CHECK(rank(m) + static_cast<int>(nullspace_basis(m).size()) == m.cols());
    }
}

TEST_CASE("in_span") {
    Vec zero(3, Rat(0));
    Vec e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)}, e3{Rat(0), Rat(0), Rat(1)};
    std::vector<Vec> basis{e1, e2};
    CHECK(in_span(zero, basis));
    CHECK(in_span(e1, basis));
    CHECK_FALSE(in_span(e3, basis));
    CHECK(in_span(zero, {}));
    CHECK_FALSE(in_span(e1, {}));
}

TEST_CASE("solve and inverse") {
    Matrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    auto x = solve(m, {Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK(m * m.inverse() == Matrix::identity(2));

    Matrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 1;
    CHECK_FALSE(solve(singular, {Rat(0), Rat(1)}).has_value());
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("RowSpace coordinates recover the inserted combination") {
    RowSpace space(3);
    Vec v1{Rat(1), Rat(1), Rat(0)}, v2{Rat(0), Rat(1), Rat(1)};
    CHECK(space.insert(v1));
    CHECK(space.insert(v2));
    CHECK_FALSE(space.insert({Rat(1), Rat(2), Rat(1)}));  // v1 + v2
    auto coords = space.coordinates({Rat(2), Rat(3), Rat(1)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == 1);
    CHECK_FALSE(space.coordinates({Rat(1), Rat(0), Rat(0)}).has_value());
}
