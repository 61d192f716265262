#include "cyclohecke/specht.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclohecke {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) {
                    if (b.at(p, q) == 0) continue;
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
                }
        }
    return r;
}

long count_syt_rec(const std::vector<int>& shape, std::vector<int>& filled, int placed, int total) {
    if (placed == total) return 1;
    long count = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] >= shape[r]) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        ++filled[r];
        count += count_syt_rec(shape, filled, placed + 1, total);
        --filled[r];
    }
    return count;
}

// permutations of S_d preserving each of the given blocks setwise
std::vector<Permutation> block_stabilizer(const std::vector<std::vector<int>>& blocks, int d) {
    std::vector<Permutation> out{Permutation::identity(d)};
    for (const auto& block : blocks) {
        std::vector<int> target = block;
        std::sort(target.begin(), target.end());
        std::vector<Permutation> grown;
        std::vector<int> image = target;
        do {
            std::vector<int> im(d);
            for (int i = 1; i <= d; ++i) im[i - 1] = i;
            for (size_t k = 0; k < target.size(); ++k) im[target[k] - 1] = image[k];
            Permutation p{std::vector<int>(im)};
            for (const auto& prev : out) grown.push_back(prev * p);
        } while (std::next_permutation(image.begin(), image.end()));
        out = std::move(grown);
    }
    return out;
}

}  // namespace

Matrix Representation::act(const Permutation& w) const {
    if (w.degree() != d) throw std::invalid_argument("degree mismatch");
    Matrix m = Matrix::identity(dim);
    for (int i : reduced_word(w)) m = m * s[i - 1];
    return m;
}

long count_standard_tableaux(const Partition& lambda) {
    std::vector<int> shape = lambda.parts();
    std::vector<int> filled(shape.size(), 0);
    if (shape.empty()) return 1;
    return count_syt_rec(shape, filled, 0, lambda.size());
}

Representation specht_representation(const Partition& lambda) {
    int d = lambda.size();
    Representation rep;
    rep.d = d;
    if (d == 0) {
        rep.dim = 1;
        return rep;
    }
    // row-reading standard tableau: rows filled with consecutive numbers
    std::vector<std::vector<int>> rows, cols;
    int next = 1;
    for (int part : lambda.parts()) {
        std::vector<int> row;
        for (int j = 0; j < part; ++j) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    for (int c = 0; c < lambda.parts()[0]; ++c) {
        std::vector<int> col;
        for (const auto& row : rows)
            if (c < static_cast<int>(row.size())) col.push_back(row[c]);
        cols.push_back(std::move(col));
    }
    // Young symmetrizer a_T b_T as a sparse group algebra element
    std::map<Permutation, Rat> symmetrizer;
    for (const auto& p : block_stabilizer(rows, d))
        for (const auto& q : block_stabilizer(cols, d)) {
            Permutation key = p * q;
            Rat& c = symmetrizer[key];
            c += q.sign();
            if (c == 0) symmetrizer.erase(key);
        }

    std::vector<Permutation> group = all_permutations(d);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
    int n = static_cast<int>(group.size());

    long expected = count_standard_tableaux(lambda);
    RowSpace space(n);
    std::vector<Vec> basis_vectors;
    for (const auto& w : group) {
        Vec row(n, Rat(0));
        for (const auto& [u, c] : symmetrizer) row[index[w * u]] += c;
        if (space.insert(row)) basis_vectors.push_back(std::move(row));
        // past small rank the full scan is wasteful; the ideal has
        // dimension = #SYT, so stop as soon as that many independent
        // vectors are found (for small d scan everything and let the
        // dimension check below bite)
        if (d > 5 && space.dim() == expected) break;
    }
    if (space.dim() != expected)
        throw std::logic_error("Specht ideal dimension differs from standard tableau count");
    rep.dim = static_cast<int>(expected);

    for (int i = 1; i < d; ++i) {
        Permutation si = Permutation::transposition(i, d);
        Matrix m(rep.dim, rep.dim);
        for (int k = 0; k < rep.dim; ++k) {
            Vec moved(n, Rat(0));
            for (int idx = 0; idx < n; ++idx) {
                if (basis_vectors[k][idx] == 0) continue;
                moved[index[si * group[idx]]] += basis_vectors[k][idx];
            }
            auto coords = space.coordinates(moved);
            if (!coords) throw std::logic_error("Specht ideal is not closed under the action");
            for (int j = 0; j < rep.dim; ++j) m.at(j, k) = (*coords)[j];
        }
        rep.s.push_back(std::move(m));
    }
    return rep;
}

Representation dualize(const Representation& rep) {
    Representation out;
    out.d = rep.d;
    out.dim = rep.dim;
    for (const auto& m : rep.s) out.s.push_back(m.inverse().transpose());
    for (const auto& m : rep.x) out.x.push_back(m.inverse().transpose());
    return out;
}

Representation affinize(const Representation& rep, const Rat& q) {
    if (rep.affinized()) throw std::invalid_argument("representation already affinized");
    Representation out = rep;
    Matrix x1 = Matrix::identity(rep.dim) * q;
    out.x.push_back(x1);
    for (int i = 1; i < rep.d; ++i)
        out.x.push_back(rep.s[i - 1] * out.x[i - 1] * rep.s[i - 1] + rep.s[i - 1]);
    return out;
}

Representation induce_product(const Representation& m1, const Representation& m2) {
    if (m2.d == 0) return m1;
    if (m1.d == 0) return m2;
    if (!m1.affinized() || !m2.affinized())
        throw std::invalid_argument("induce_product needs affinized factors");
    int dp = m1.d, dpp = m2.d, d = dp + dpp;
    auto reps = coset_representatives(dp, dpp);
    int nc = static_cast<int>(reps.size());
    int inner = m1.dim * m2.dim;
    Representation out;
    out.d = d;
    out.dim = nc * inner;

    auto parabolic_act = [&](const Permutation& p) {
        std::vector<int> im1(dp), im2(dpp);
        for (int i = 1; i <= dp; ++i) im1[i - 1] = p(i);
        for (int i = 1; i <= dpp; ++i) im2[i - 1] = p(dp + i) - dp;
        return kron(m1.act(Permutation(std::move(im1))), m2.act(Permutation(std::move(im2))));
    };
    auto parabolic_x = [&](int m) {
        if (m <= dp) return kron(m1.x[m - 1], Matrix::identity(m2.dim));
        return kron(Matrix::identity(m1.dim), m2.x[m - dp - 1]);
    };
    auto add_block = [&](Matrix& big, int row_block, int col_block, const Matrix& small,
                         const Rat& c) {
        for (int i = 0; i < inner; ++i)
            for (int j = 0; j < inner; ++j)
                if (small.at(i, j) != 0)
                    big.at(row_block * inner + i, col_block * inner + j) += c * small.at(i, j);
    };
    std::map<Permutation, int> rep_index;
    for (int k = 0; k < nc; ++k) rep_index[reps[k]] = k;

    for (int i = 1; i < d; ++i) {
        Permutation si = Permutation::transposition(i, d);
        Matrix big(out.dim, out.dim);
        for (int k = 0; k < nc; ++k) {
            auto [r, p] = coset_decompose(si * reps[k], dp);
            add_block(big, rep_index.at(r), k, parabolic_act(p), 1);
        }
        out.s.push_back(std::move(big));
    }
    for (int i = 1; i <= d; ++i) {
        Matrix big(out.dim, out.dim);
        for (int k = 0; k < nc; ++k) {
            int m = reps[k].inverse()(i);
            // x_i r_k = r_k x_m - (corrections of r_k x_m = x_i r_k + ...)
            add_block(big, k, k, parabolic_x(m), 1);
            for (const auto& [sign, u] : perm_times_x(reps[k], m).corrections) {
                auto [r, p] = coset_decompose(u, dp);
                add_block(big, rep_index.at(r), k, parabolic_act(p), Rat(-sign));
            }
        }
        out.x.push_back(std::move(big));
    }
    return out;
}

Representation dual_specht(const Multipartition& mp, const std::vector<Rat>& q) {
    if (mp.level() != static_cast<int>(q.size()))
        throw std::invalid_argument("level of multipartition must equal length of q");
    Representation acc;
    acc.d = 0;
    acc.dim = 1;
    for (int r = 1; r <= mp.level(); ++r) {
        const Partition& comp = mp.component(r);
        if (comp.size() == 0) continue;
        Representation factor = affinize(dualize(specht_representation(comp)), q[r - 1]);
        acc = induce_product(acc, factor);
    }
    return acc;
}

Matrix evaluate_element(const Representation& rep, const HeckeElement& elem) {
    Matrix total(rep.dim, rep.dim);
    for (const auto& [t, c] : elem.terms()) {
        Matrix m = Matrix::identity(rep.dim);
        for (int i = 1; i <= rep.d; ++i)
            for (int k = 0; k < t.exps[i - 1]; ++k) m = m * rep.x[i - 1];
        m = m * rep.act(t.perm);
        total = total + m * c;
    }
    return total;
}

Matrix power_sum_action(const Representation& rep, int r) {
    Matrix total(rep.dim, rep.dim);
    for (int i = 1; i <= rep.d; ++i) total = total + rep.x[i - 1].pow(r);
    return total;
}

std::optional<std::vector<Rat>> power_sum_scalars(const Representation& rep) {
    std::vector<Rat> scalars;
    for (int r = 1; r <= rep.d; ++r) {
        Matrix m = power_sum_action(rep, r);
        Rat c = m.at(0, 0);
        if (!(m == Matrix::identity(rep.dim) * c)) return std::nullopt;
        scalars.push_back(c);
    }
    return scalars;
}

ResidueMultiset central_character(const Representation& rep,
                                  const std::vector<ResidueMultiset>& candidates) {
    auto scalars = power_sum_scalars(rep);
    if (!scalars) throw std::domain_error("module is not of a single central character");
    std::vector<ResidueMultiset> matches;
    for (const auto& cand : candidates) {
        if (cand.size() != rep.d) continue;
        bool ok = true;
        for (int r = 1; r <= rep.d && ok; ++r) ok = cand.power_sum(r) == (*scalars)[r - 1];
        if (ok && std::find(matches.begin(), matches.end(), cand) == matches.end())
            matches.push_back(cand);
    }
    if (matches.size() != 1)
        throw std::domain_error("central character matched " + std::to_string(matches.size()) +
                                " candidate residue multisets");
    return matches[0];
}

bool acts_with_character(const Representation& rep, const ResidueMultiset& residues) {
    if (residues.size() != rep.d) return false;
    for (int r = 1; r <= rep.d; ++r) {
        Matrix expected = Matrix::identity(rep.dim) * residues.power_sum(r);
        if (!(power_sum_action(rep, r) == expected)) return false;
    }
    return true;
}

}  // namespace cyclohecke
