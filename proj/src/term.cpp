#include "cyclohecke/term.hpp"

#include <stdexcept>

namespace cyclohecke {

MonomialBasis::MonomialBasis(int d, int l) {
    std::vector<Permutation> perms = all_permutations(d);
    std::vector<int> exps(d, 0);
    for (;;) {
        for (const auto& w : perms) terms_.push_back(Term{exps, w});
        int k = d - 1;
        while (k >= 0 && exps[k] == l - 1) exps[k--] = 0;
        if (k < 0) break;
        ++exps[k];
    }
    // exponent vectors were produced in lexicographic order and
    // all_permutations is lexicographic, so terms_ is already sorted
    for (int i = 0; i < static_cast<int>(terms_.size()); ++i) index_[terms_[i]] = i;
}

int MonomialBasis::index_of(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::invalid_argument("term outside monomial basis");
    return it->second;
}

Vec MonomialBasis::to_vector(const TermMap& m) const {
    Vec v(terms_.size(), Rat(0));
    for (const auto& [t, c] : m) v[index_of(t)] = c;
    return v;
}

TermMap MonomialBasis::from_vector(const Vec& v) const {
    if (v.size() != terms_.size()) throw std::invalid_argument("vector length mismatch");
    TermMap m;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) m.emplace(terms_[i], v[i]);
    return m;
}

}  // namespace cyclohecke
