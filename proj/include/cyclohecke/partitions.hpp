#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cyclohecke/rational.hpp"

namespace cyclohecke {

/// Integer partition: weakly decreasing positive parts, stored dense.
/// The empty partition is the empty sequence.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                                         // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }  // ell(lambda)
    bool empty() const { return parts_.empty(); }

    /// Floors each part by l (zero parts dropped).
    Partition divided_floor(int l) const;

    /// Parts as a d-tuple padded with zeros.
    std::vector<int> padded(int d) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// l-tuple of partitions. Drawn from M_d(l) when the total size is d.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    int level() const { return static_cast<int>(components_.size()); }
    int total_size() const;
    const Partition& component(int r) const { return components_[r - 1]; }  // 1-based
    const std::vector<Partition>& components() const { return components_; }

    std::string to_string() const;

    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> components_;
};

/// Multiset of rationals with multiplicity; stored as a sorted tuple so
/// equality is multiset equality.
class ResidueMultiset {
public:
    ResidueMultiset() = default;
    explicit ResidueMultiset(std::vector<Rat> entries);

    const std::vector<Rat>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    /// Power sum of the entries, used for central-character matching.
    Rat power_sum(int r) const;

    std::string to_string() const;

    bool operator==(const ResidueMultiset& o) const { return entries_ == o.entries_; }
    bool operator<(const ResidueMultiset& o) const;

private:
    std::vector<Rat> entries_;  // sorted ascending
};

/// All partitions of d in reverse-lexicographic order: (d) first,
/// (1,...,1) last.
std::vector<Partition> enumerate_partitions(int d);

/// M_d(l): all l-multipartitions of total size d. First component size
/// descends from d to 0; within a size, components follow
/// enumerate_partitions order; remaining components recursively.
std::vector<Multipartition> enumerate_multipartitions(int d, int l);

/// P_d(l): partitions lambda (of any size) with
/// ell(lambda) + |lambda/l| <= d, reverse-lexicographic order.
std::vector<Partition> enumerate_p_set(int d, int l);

bool in_p_set(const Partition& mu, int d, int l);

/// The bijection phi: M_d(l) -> P_d(l), collecting the parts
/// (lambda^(r)_i - 1) l + r - 1 and discarding zeros.
Partition phi(const Multipartition& mp, int l);

/// Inverse of phi; throws std::invalid_argument when mu is not in P_d(l).
Multipartition phi_inv(const Partition& mu, int l, int d);

/// Residue multiset of a multipartition for parameters q: the box (i,j)
/// of lambda^(r) contributes q_r + j - i.
ResidueMultiset residue_tuple(const Multipartition& mp, const std::vector<Rat>& q);

/// Rank of Q_d: sum over partitions (1^{r_1} 2^{r_2} ...) of d of
/// d!/(r_1! r_2! ...) (l/1)^{r_1} (l/2)^{r_2} ...; evaluated in exact
/// rationals, checked to be an integer.
mpz_class basd_rank(int d, int l);

/// e_r(u_1..u_k, u+1) = e_r(u_1..u_k, u)
///    + sum_{s=0}^{r-1} (-1)^s e_{r-1-s}(u_1..u_k, u) u^s, evaluated on
/// the given inputs. Always true; exposed as a checkable identity.
bool elementary_symmetric_shift_identity(const std::vector<Rat>& u_list, const Rat& u, int r);

/// Elementary symmetric polynomial e_r of the given values.
Rat elementary_symmetric(const std::vector<Rat>& values, int r);

/// Distinct rearrangements of a tuple (each counted once, the
/// monomial-symmetric convention used throughout).
std::vector<std::vector<int>> distinct_rearrangements(std::vector<int> tuple);

}  // namespace cyclohecke
