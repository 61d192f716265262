#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclohecke/hecke.hpp"
#include "cyclohecke/partitions.hpp"

namespace cyclohecke {

/// One block of H_d^q: its central character class i (a residue multiset),
/// the multipartitions whose dual Specht module lies in it, its primitive
/// central idempotent b(i), and the dimension of its center.
struct BlockDescriptor {
    ResidueMultiset residues;
    std::vector<Multipartition> fiber;
    std::optional<HeckeElement> idempotent;
    int center_dimension = 0;
};

/// Residue multisets i^q_lambda over all multipartitions, deduplicated,
/// with fibers; sorted by residue multiset. Requires a spec built from
/// roots. Idempotents are not filled in; center_dimension is set to the
/// fiber size, which the cutting computation re-derives independently.
std::vector<BlockDescriptor> enumerate_blocks(const SpecPtr& spec);

/// Value of the monomial symmetric polynomial p_d(mu) at the entries of i.
Rat chi_evaluate(const ResidueMultiset& i, const Partition& mu);

/// Blocks with their primitive central idempotents. Computed inside the
/// brute-force center as the components of 1 under the generalized
/// eigenspace decomposition of a separating central element; verifies
/// b^2 = b, pairwise orthogonality, sum = 1, centrality, and the
/// chi-interpolation property chi(j)(b(i)) = delta_{ij}.
std::vector<BlockDescriptor> block_idempotents(const SpecPtr& spec);

/// Per-block center dimensions computed two ways: rank of b(i) Z and the
/// fiber size |{lambda : i^q_lambda = i}|; throws if they disagree.
std::map<ResidueMultiset, int> block_center_dimensions(const SpecPtr& spec);

}  // namespace cyclohecke
