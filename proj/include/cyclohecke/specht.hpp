#pragma once

#include <optional>
#include <vector>

#include "cyclohecke/hecke.hpp"
#include "cyclohecke/linalg.hpp"
#include "cyclohecke/partitions.hpp"

namespace cyclohecke {

/// Matrix representation: generator matrices for s_1..s_{d-1}, and for
/// x_1..x_d once affinized. All entries exact rationals.
struct Representation {
    int d = 0;
    int dim = 0;
    std::vector<Matrix> s;  // d-1 matrices
    std::vector<Matrix> x;  // empty until affinized, then d matrices

    bool affinized() const { return !x.empty(); }
    Matrix act(const Permutation& w) const;
};

/// Number of standard tableaux of shape lambda, by direct backtracking
/// over fillings.
long count_standard_tableaux(const Partition& lambda);

/// The Specht module S^lambda of S_d as the left ideal generated by the
/// Young symmetrizer of the row-reading standard tableau, with a basis
/// extracted by exact row reduction.
Representation specht_representation(const Partition& lambda);

/// Replaces every generator matrix by the transpose of its inverse.
Representation dualize(const Representation& rep);

/// Extends an S_d representation to H_d with x_1 = q and
/// x_{i+1} = s_i x_i s_i + s_i.
Representation affinize(const Representation& rep, const Rat& q);

/// M' o M'' = H_d (x)_{H_{d'} (x) H_{d''}} (M' (x) M''): carrier indexed by
/// minimal coset representatives times the tensor basis; generator actions
/// by straightening generator * representative into representative *
/// (parabolic element).
Representation induce_product(const Representation& m1, const Representation& m2);

/// S^q_lambda: the iterated induction product of affinized dual Specht
/// modules, one factor per component of the multipartition.
Representation dual_specht(const Multipartition& mp, const std::vector<Rat>& q);

/// Evaluates a normal-form element through the representation matrices.
Matrix evaluate_element(const Representation& rep, const HeckeElement& elem);

/// Action of p_d((r)) = x_1^r + ... + x_d^r; requires affinized rep.
Matrix power_sum_action(const Representation& rep, int r);

/// The scalars by which p_d((1)), ..., p_d((d)) act; empty optional if
/// some power sum acts non-scalarly.
std::optional<std::vector<Rat>> power_sum_scalars(const Representation& rep);

/// Recovers the residue multiset of the representation by matching the
/// power-sum scalars against the candidate multisets. Throws if no or
/// several candidates match, or if some power sum is non-scalar.
ResidueMultiset central_character(const Representation& rep,
                                  const std::vector<ResidueMultiset>& candidates);

/// True if every p_d((r)) acts by the r-th power sum of the multiset.
bool acts_with_character(const Representation& rep, const ResidueMultiset& residues);

}  // namespace cyclohecke
