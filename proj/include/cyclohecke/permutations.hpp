#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cyclohecke {

/// Permutation of {1..d} in one-line notation. Composition is right to
/// left: (v * w)(i) = v(w(i)), i.e. w acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);
    /// Adjacent transposition s_i = (i i+1) in S_d, 1 <= i <= d-1.
    static Permutation transposition(int i, int d);
    /// The cycle (points[0] points[1] ...) completed by fixed points in S_d.
    static Permutation from_cycle(const std::vector<int>& points, int d);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& w) const;
    Permutation inverse() const;
    bool is_identity() const;
    int inversions() const;
    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Cycle in S_d: ordered points up to rotation. Canonical form rotates the
/// minimal point to the front; equality and ordering use that form.
class Cycle {
public:
    explicit Cycle(std::vector<int> points);

    const std::vector<int>& points() const { return points_; }
    int length() const { return static_cast<int>(points_.size()); }
    std::vector<int> support() const;
    int min_point() const { return points_.front(); }

    Permutation as_permutation(int d) const;
    std::string to_string() const;

    auto operator<=>(const Cycle&) const = default;

private:
    std::vector<int> points_;  // canonical rotation
};

/// Disjoint cycles covering {1..d}, 1-cycles included, sorted by minimal
/// point of support.
std::vector<Cycle> cycle_decomposition(const Permutation& w);

/// Cycle notation, 1-cycles omitted; identity renders as "()".
std::string cycle_string(const Permutation& w);

/// Indices i_1..i_k with w = s_{i_1} ... s_{i_k} and k = inversions(w).
std::vector<int> reduced_word(const Permutation& w);

Permutation product_of_word(const std::vector<int>& word, int d);

/// All of S_d in lexicographic one-line order.
std::vector<Permutation> all_permutations(int d);

/// Minimal-length left coset representatives of S_{d'} x S_{d''} in
/// S_{d'+d''}: the permutations increasing on each of the two blocks.
std::vector<Permutation> coset_representatives(int d_prime, int d_double_prime);

/// Splits u uniquely as rep * (p' x p'') with rep a minimal-length coset
/// representative; returns (rep, p) with p in S_{d'} x S_{d''}.
std::pair<Permutation, Permutation> coset_decompose(const Permutation& u, int d_prime);

}  // namespace cyclohecke
