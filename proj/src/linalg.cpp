#include "cyclohecke/linalg.hpp"

#include <stdexcept>

namespace cyclohecke {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Rat& c) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (a != 0 && v[j] != 0) r[i] += a * v[j];
        }
    return r;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    Matrix acc = identity(rows_);
    for (int t = 0; t < k; ++t) acc = acc * *this;
    return acc;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [red, pivots] = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

std::pair<Matrix, std::vector<int>> rref(const Matrix& m) {
    Matrix a = m;
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat inv = 1 / a.at(r, c);
        for (int j = c; j < cols; ++j)
            if (a.at(r, j) != 0) a.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = a.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                if (a.at(r, j) != 0) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).second.size()); }

std::vector<Vec> nullspace_basis(const Matrix& m) {
    auto [red, pivots] = rref(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto [red, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(static_cast<int>(r), m.cols());
    return x;
}

bool in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) {
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    }
    for (const auto& b : basis)
        if (b.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
    RowSpace space(static_cast<int>(v.size()));
    for (const auto& b : basis) space.insert(b);
    return space.contains(v);
}

bool RowSpace::insert(const Vec& v) {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("RowSpace: dimension mismatch");
    Vec w = v;
    Vec coords(rows_.size() + 1, Rat(0));
    coords.back() = 1;
    for (const auto& er : rows_) {
        const Rat& f = w[er.pivot];
        if (f == 0) continue;
        Rat ff = f;
        for (int j = 0; j < n_; ++j)
            if (er.row[j] != 0) w[j] -= ff * er.row[j];
        for (size_t k = 0; k < er.coords.size(); ++k) coords[k] -= ff * er.coords[k];
    }
    int pivot = -1;
    for (int j = 0; j < n_; ++j)
        if (w[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    Rat inv = 1 / w[pivot];
    for (int j = 0; j < n_; ++j)
        if (w[j] != 0) w[j] *= inv;
    for (auto& c : coords) c *= inv;
    rows_.push_back({pivot, std::move(w), std::move(coords)});
    return true;
}

bool RowSpace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("RowSpace: dimension mismatch");
    // rows_[k].coords may be shorter than the final accepted count; missing
    // entries are zero.
    size_t width = 0;
    for (const auto& er : rows_) width = std::max(width, er.coords.size());
    Vec coords(width, Rat(0));
    Vec w = v;
    for (const auto& er : rows_) {
        const Rat& f = w[er.pivot];
        if (f == 0) continue;
        Rat ff = f;
        for (int j = 0; j < n_; ++j)
            if (er.row[j] != 0) w[j] -= ff * er.row[j];
        for (size_t k = 0; k < er.coords.size(); ++k) coords[k] += ff * er.coords[k];
    }
    for (int j = 0; j < n_; ++j)
        if (w[j] != 0) return std::nullopt;
    return coords;
}

}  // namespace cyclohecke
