#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclohecke/rational.hpp"

namespace cyclohecke {

using Vec = std::vector<Rat>;

/// Dense matrix over Q. Deliberately simple: the algebras at desk scale
/// have at most a few hundred PBW monomials, and exactness matters more
/// than speed here.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rat& c) const;
    bool operator==(const Matrix& o) const;

    Matrix transpose() const;
    /// Exact inverse; throws std::domain_error if singular.
    Matrix inverse() const;
    bool is_zero() const;

    Vec apply(const Vec& v) const;
    Matrix pow(int k) const;

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero in
/// column order). Returns the echelon matrix and the pivot column indices.
std::pair<Matrix, std::vector<int>> rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}; size cols - rank.
std::vector<Vec> nullspace_basis(const Matrix& m);

/// Some solution of m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

bool in_span(const Vec& v, const std::vector<Vec>& basis);

/// Incremental row space over Q with coordinate tracking: insert vectors
/// one at a time, query membership, and recover coordinates of a vector
/// in terms of the inserted spanning set.
class RowSpace {
public:
    explicit RowSpace(int ambient_dim) : n_(ambient_dim) {}

    /// Returns true if v enlarged the space.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return n_; }

    /// Coordinates of v with respect to the vectors that were accepted by
    /// insert(), in insertion order. Empty optional if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    struct EchelonRow {
        int pivot;
        Vec row;     // normalized, pivot entry = 1
        Vec coords;  // expression in terms of accepted vectors
    };
    int n_;
    std::vector<EchelonRow> rows_;
};

}  // namespace cyclohecke
