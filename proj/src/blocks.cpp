#include "cyclohecke/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclohecke {

namespace {

// chi(i) evaluated on the power sum p_d((r))
Rat block_power_sum(const ResidueMultiset& i, int r) { return i.power_sum(r); }

// smallest c >= 1 such that z* = sum_r c^{r-1} p_d((r)) takes distinct
// values on all blocks
std::pair<int, std::vector<Rat>> separating_weights(const std::vector<BlockDescriptor>& blocks,
                                                    int d) {
    for (int c = 1;; ++c) {
        std::vector<Rat> values;
        Rat cr(c);
        for (const auto& b : blocks) {
            Rat v = 0, w = 1;
            for (int r = 1; r <= d; ++r) {
                v += w * block_power_sum(b.residues, r);
                w *= cr;
            }
            values.push_back(v);
        }
        std::vector<Rat> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return {c, values};
    }
}

}  // namespace

std::vector<BlockDescriptor> enumerate_blocks(const SpecPtr& spec) {
    if (!spec->roots()) throw std::invalid_argument("block enumeration needs a spec built from roots");
    std::map<ResidueMultiset, std::vector<Multipartition>> fibers;
    for (const auto& mp : enumerate_multipartitions(spec->d(), spec->l()))
        fibers[residue_tuple(mp, *spec->roots())].push_back(mp);
    std::vector<BlockDescriptor> out;
    for (auto& [res, fiber] : fibers) {
        BlockDescriptor b;
        b.residues = res;
        b.fiber = std::move(fiber);
        b.center_dimension = static_cast<int>(b.fiber.size());
        out.push_back(std::move(b));
    }
    return out;
}

Rat chi_evaluate(const ResidueMultiset& i, const Partition& mu) {
    int d = i.size();
    if (mu.length() > d) throw std::invalid_argument("partition longer than the residue multiset");
    Rat total = 0;
    for (const auto& nu : distinct_rearrangements(mu.padded(d))) {
        Rat prod = 1;
        for (int k = 0; k < d; ++k)
            for (int t = 0; t < nu[k]; ++t) prod *= i.entries()[k];
        total += prod;
    }
    return total;
}

std::vector<BlockDescriptor> block_idempotents(const SpecPtr& spec) {
    auto blocks = enumerate_blocks(spec);
    int d = spec->d(), l = spec->l();
    MonomialBasis basis(d, l);
    auto center = center_basis_raw(spec);
    int n = static_cast<int>(center.size());
    if (n != static_cast<int>(enumerate_multipartitions(d, l).size()))
        throw std::logic_error("center dimension does not match the multipartition count");

    RowSpace center_space(basis.size());
    for (const auto& z : center) center_space.insert(basis.to_vector(z.terms()));
    auto center_coords = [&](const HeckeElement& z) {
        auto c = center_space.coordinates(basis.to_vector(z.terms()));
        if (!c) throw std::logic_error("element unexpectedly outside the center");
        return *c;
    };

    // multiplication by a separating central element z* on the center
    auto [cweight, theta] = separating_weights(blocks, d);
    HeckeElement zstar = HeckeElement::zero(spec);
    Rat w(1), cw(cweight);
    for (int r = 1; r <= d; ++r) {
        zstar = zstar + p_element(Partition({r}), spec) * w;
        w *= cw;
    }
    Matrix mult(n, n);
    for (int j = 0; j < n; ++j) {
        Vec co = center_coords(zstar * center[j]);
        for (int i = 0; i < n; ++i) mult.at(i, j) = co[i];
    }

    // generalized eigenspaces K_i = ker (M - theta_i)^n must fill the center
    std::vector<std::vector<Vec>> eigenspaces;
    int total_dim = 0;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        Matrix shifted = mult - Matrix::identity(n) * theta[bi];
        auto kernel = nullspace_basis(shifted.pow(n));
        total_dim += static_cast<int>(kernel.size());
        eigenspaces.push_back(std::move(kernel));
    }
    if (total_dim != n)
        throw std::logic_error(
            "generalized eigenspaces of the separating element do not exhaust the center; some "
            "central character is missing");

    // decompose 1 = sum of components in the eigenspaces
    Vec one_coords = center_coords(HeckeElement::one(spec));
    Matrix stacked(n, n);
    std::vector<int> offsets;
    {
        int col = 0;
        for (const auto& space : eigenspaces) {
            offsets.push_back(col);
            for (const auto& v : space) {
                for (int i = 0; i < n; ++i) stacked.at(i, col) = v[i];
                ++col;
            }
        }
    }
    auto sol = solve(stacked, one_coords);
    if (!sol) throw std::logic_error("identity element not decomposable over the eigenspaces");

    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        Vec comp(n, Rat(0));
        for (size_t k = 0; k < eigenspaces[bi].size(); ++k) {
            const Rat& c = (*sol)[offsets[bi] + k];
            if (c == 0) continue;
            for (int i = 0; i < n; ++i) comp[i] += c * eigenspaces[bi][k][i];
        }
        HeckeElement b = HeckeElement::zero(spec);
        for (int i = 0; i < n; ++i)
            if (comp[i] != 0) b = b + center[i] * comp[i];
        blocks[bi].idempotent = b;
    }

    // verification: idempotent, orthogonal, complete, central, and
    // chi(j)(b(i)) = delta_{ij} on the p-basis expansion
    HeckeElement sum = HeckeElement::zero(spec);
    for (const auto& b : blocks) sum = sum + *b.idempotent;
    if (!(sum == HeckeElement::one(spec))) throw std::logic_error("block idempotents do not sum to 1");
    for (size_t i = 0; i < blocks.size(); ++i) {
        const HeckeElement& bi = *blocks[i].idempotent;
        if (!(bi * bi == bi)) throw std::logic_error("block idempotent is not idempotent");
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (!(bi * *blocks[j].idempotent).is_zero())
                throw std::logic_error("block idempotents are not orthogonal");
        for (int g = 1; g < d; ++g)
            if (!(bi.s_times(g) == bi.times_s(g)))
                throw std::logic_error("block idempotent is not central");
        if (d >= 1 && !(bi.x_times(1) == bi.times_x(1)))
            throw std::logic_error("block idempotent is not central");
    }
    // chi evaluation through the p-basis
    auto p_set = enumerate_p_set(d, l);
    RowSpace p_space(basis.size());
    std::vector<HeckeElement> p_basis;
    for (const auto& mu : p_set) {
        p_basis.push_back(p_element(mu, spec));
        p_space.insert(basis.to_vector(p_basis.back().terms()));
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto coords = p_space.coordinates(basis.to_vector(blocks[i].idempotent->terms()));
        if (!coords) throw std::logic_error("idempotent not in the span of the p-basis");
        for (size_t j = 0; j < blocks.size(); ++j) {
            Rat chi = 0;
            for (size_t k = 0; k < p_set.size(); ++k)
                if ((*coords)[k] != 0) chi += (*coords)[k] * chi_evaluate(blocks[j].residues, p_set[k]);
            if (chi != Rat(i == j ? 1 : 0))
                throw std::logic_error("chi interpolation property fails on an idempotent");
        }
    }
    return blocks;
}

std::map<ResidueMultiset, int> block_center_dimensions(const SpecPtr& spec) {
    auto blocks = block_idempotents(spec);
    MonomialBasis basis(spec->d(), spec->l());
    auto center = center_basis_raw(spec);
    std::map<ResidueMultiset, int> dims;
    int total = 0;
    for (const auto& b : blocks) {
        RowSpace cut(basis.size());
        for (const auto& z : center) cut.insert(basis.to_vector((*b.idempotent * z).terms()));
        if (cut.dim() != static_cast<int>(b.fiber.size()))
            throw std::logic_error("block center dimension differs from its fiber size");
        dims[b.residues] = cut.dim();
        total += cut.dim();
    }
    if (total != static_cast<int>(center.size()))
        throw std::logic_error("block center dimensions do not sum to the full center dimension");
    return dims;
}

}  // namespace cyclohecke
