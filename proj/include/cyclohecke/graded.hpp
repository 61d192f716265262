#pragma once

#include <string>
#include <vector>

#include "cyclohecke/partitions.hpp"
#include "cyclohecke/term.hpp"

namespace cyclohecke {

/// Element of the twisted tensor product R_l[x_1..x_d] x| R S_d: the
/// truncated polynomial algebra (x_i^l = 0) twisted by the symmetric
/// group acting as w x_i = x_{w(i)} w. Graded with each x_i in degree 1.
class GradedElement {
public:
    GradedElement() : d_(0), l_(1) {}
    GradedElement(int d, int l) : d_(d), l_(l) {}

    static GradedElement zero(int d, int l) { return GradedElement(d, l); }
    static GradedElement one(int d, int l);
    static GradedElement variable(int i, int d, int l);  // x_i
    static GradedElement from_permutation(const Permutation& w, int l);
    static GradedElement monomial(const Term& t, const Rat& c, int d, int l);

    int d() const { return d_; }
    int l() const { return l_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Term& t) const;

    /// Top degree among stored terms; -1 for the zero element.
    int degree() const;
    GradedElement homogeneous_component(int r) const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator*(const GradedElement& o) const;
    GradedElement operator*(const Rat& c) const;
    bool operator==(const GradedElement& o) const;

    void add(const Term& t, const Rat& c) { add_term(terms_, t, c); }

    std::string to_string() const;

private:
    void check_compatible(const GradedElement& o) const;
    int d_, l_;
    TermMap terms_;
};

/// A cycle with a color r in {0..l-1}, denoting A^(r) = h_r(A) A.
/// Colors >= l are rejected: the element would be zero.
struct ColoredCycle {
    Cycle cycle;
    int color;

    ColoredCycle(Cycle c, int r, int l);

    auto operator<=>(const ColoredCycle&) const = default;
};

/// Structured result of a product of colored cycles: a scalar multiple of
/// a product of disjoint colored cycles. scalar == 0 encodes zero. The
/// cycle list is normalized: color-0 1-cycles dropped, sorted by minimal
/// support point.
struct ColoredCycleProduct {
    Rat scalar;
    std::vector<ColoredCycle> cycles;

    bool is_zero() const { return scalar == 0; }
    bool operator==(const ColoredCycleProduct& o) const;
};

/// h_r(I): the ((|I|-1)(l-1)+r)th complete symmetric function in the
/// variables indexed by I, inside the truncated algebra. Zero when r >= l
/// by pigeonhole.
GradedElement h_poly(int r, const std::vector<int>& indices, int d, int l);

GradedElement colored_cycle_element(const ColoredCycle& c, int d, int l);

/// Realizes a normalized product of disjoint colored cycles as an element.
GradedElement disjoint_product_element(const std::vector<ColoredCycle>& cycles, const Rat& scalar,
                                       int d, int l);

/// Closed-form product A^(r) B^(s) by |A n B|: disjoint cycles commute;
/// one common point merges into (AB)^(r+s); two or more common points give
/// zero unless both colors vanish, in which case l^{c-1} times the product
/// with everything colored l-1.
ColoredCycleProduct colored_cycle_product(const ColoredCycle& a, const ColoredCycle& b, int d, int l);

/// Normalizes a list of pairwise disjoint colored cycles.
std::vector<ColoredCycle> normalize_disjoint(std::vector<ColoredCycle> cycles);

/// z_d(lambda): sum of all products of disjoint colored cycles of cycle
/// type lambda, where a part a of lambda^(r) stands for an a-cycle of
/// color r-1.
GradedElement class_sum(const Multipartition& mp, int d, int l);

/// All normalized products of disjoint colored cycles of the given cycle
/// type, as (permutation, colored cycle list) data.
std::vector<std::vector<ColoredCycle>> products_of_type(const Multipartition& mp, int d, int l);

/// y_i(k) with k = (a-1)l + r: the sum of (i_1 ... i_{a-1} i)^(r) over
/// distinct i_1,...,i_{a-1} < i. Zero when k >= i l.
GradedElement y_element(int i, int k, int d, int l);

/// m_d(mu) = sum over distinct rearrangements nu of mu (as a d-tuple) of
/// y_1(nu_1) ... y_d(nu_d). Requires mu in P_d(l).
GradedElement murphy_element(const Partition& mu, int d, int l);

/// Brute-force basis of Q_d, the centralizer of the truncated polynomial
/// subalgebra: joint kernel of z -> x_i z - z x_i.
std::vector<GradedElement> centralizer_basis(int d, int l);

/// Brute-force basis of the center: joint kernel of commutators with
/// x_1, s_1, ..., s_{d-1}.
std::vector<GradedElement> center_basis_bruteforce(int d, int l);

}  // namespace cyclohecke
