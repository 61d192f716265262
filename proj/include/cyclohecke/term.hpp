#pragma once

#include <compare>
#include <map>
#include <vector>

#include "cyclohecke/linalg.hpp"
#include "cyclohecke/permutations.hpp"
#include "cyclohecke/rational.hpp"

namespace cyclohecke {

/// One basis monomial x^exps * w, shared by the filtered and graded
/// algebras. Canonical order: lexicographic on exps, then on the one-line
/// notation of the permutation.
struct Term {
    std::vector<int> exps;
    Permutation perm;

    int degree() const {
        int t = 0;
        for (int e : exps) t += e;
        return t;
    }

    auto operator<=>(const Term&) const = default;
};

using TermMap = std::map<Term, Rat>;

/// Adds c * t, erasing the entry when the coefficient cancels.
inline void add_term(TermMap& m, const Term& t, const Rat& c) {
    if (c == 0) return;
    auto it = m.find(t);
    if (it == m.end()) {
        m.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

/// All l^d * d! monomials x^a * w with exponents < l, in canonical order,
/// with index lookup. Fixes the column indexing of every brute-force
/// matrix in the library.
class MonomialBasis {
public:
    MonomialBasis(int d, int l);

    int size() const { return static_cast<int>(terms_.size()); }
    const Term& term(int index) const { return terms_[index]; }
    int index_of(const Term& t) const;

    Vec to_vector(const TermMap& m) const;
    TermMap from_vector(const Vec& v) const;

private:
    std::vector<Term> terms_;
    std::map<Term, int> index_;
};

}  // namespace cyclohecke
