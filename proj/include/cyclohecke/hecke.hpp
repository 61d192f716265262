#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/graded.hpp"
#include "cyclohecke/partitions.hpp"
#include "cyclohecke/term.hpp"

namespace cyclohecke {

/// Parameters of H_d^f: rank d, the monic polynomial
/// f(x) = x^l + c_1 x^{l-1} + ... + c_l, and optionally the roots it was
/// expanded from. Construction precomputes the normal forms of x_m^l so
/// specs are immutable afterwards and safe to share.
class CyclotomicSpec {
public:
    static std::shared_ptr<const CyclotomicSpec> from_coeffs(int d, std::vector<Rat> coeffs);
    static std::shared_ptr<const CyclotomicSpec> from_roots(int d, std::vector<Rat> roots);

    int d() const { return d_; }
    int l() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const std::optional<std::vector<Rat>>& roots() const { return roots_; }

    /// Normal form of x_m^l, 1 <= m <= d.
    const TermMap& xl_normal_form(int m) const { return xl_[m - 1]; }

    bool same_as(const CyclotomicSpec& o) const { return d_ == o.d_ && coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    CyclotomicSpec(int d, std::vector<Rat> coeffs, std::optional<std::vector<Rat>> roots);
    int d_;
    std::vector<Rat> coeffs_;
    std::optional<std::vector<Rat>> roots_;
    std::vector<TermMap> xl_;
};

using SpecPtr = std::shared_ptr<const CyclotomicSpec>;

/// Element of H_d^f, always held in PBW normal form: exponents below l,
/// terms x^a w with w in S_d.
class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(SpecPtr spec) : spec_(std::move(spec)) {}

    static HeckeElement zero(SpecPtr spec) { return HeckeElement(std::move(spec)); }
    static HeckeElement one(SpecPtr spec);
    static HeckeElement generator_x(int i, SpecPtr spec);
    static HeckeElement generator_s(int i, SpecPtr spec);
    static HeckeElement from_permutation(const Permutation& w, SpecPtr spec);
    static HeckeElement scalar(const Rat& c, SpecPtr spec);
    /// Normal form of c * x^exps * w; exponents may be >= l.
    static HeckeElement monomial(const std::vector<int>& exps, const Permutation& w, const Rat& c,
                                 SpecPtr spec);

    const SpecPtr& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Term& t) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const HeckeElement& o) const;
    HeckeElement operator*(const Rat& c) const;
    bool operator==(const HeckeElement& o) const;

    /// Right multiplication by single generators (kept in normal form).
    HeckeElement times_x(int j) const;
    HeckeElement times_s(int i) const;
    /// Left multiplication by single generators.
    HeckeElement x_times(int j) const;
    HeckeElement s_times(int i) const;

    /// Max |a| over stored terms; -1 for zero.
    int filtration_degree() const;
    /// Image in gr H_d^f = R_l[x] x| RS_d; r must be the top degree.
    GradedElement gr_component(int r) const;

    std::string to_string() const;

private:
    SpecPtr spec_;
    TermMap terms_;
    friend HeckeElement element_from_terms(SpecPtr, TermMap);
};

/// Builds an element directly from normal-form terms (no reduction).
HeckeElement element_from_terms(SpecPtr spec, TermMap terms);

/// v * x_j = x_{v(j)} v + corrections, exact in the degenerate affine
/// algebra: each correction is a signed permutation obtained by dropping
/// the crossed letter of a reduced word of v.
struct PermTimesX {
    int leading_index;  // v(j)
    std::vector<std::pair<int, Permutation>> corrections;
};
PermTimesX perm_times_x(const Permutation& v, int j);

/// Normal form of x_i^k: base case f(x_1) = 0 rewrites x_1^l, higher
/// indices via x_{i+1}^l = s_i x_i^l s_i + sum_t x_i^t x_{i+1}^{l-1-t} s_i.
HeckeElement reduce_high_power(int i, int k, const SpecPtr& spec);

/// p_d(mu): sum over distinct rearrangements nu of mu (as a d-tuple) of
/// the normal form of x_1^{nu_1} ... x_d^{nu_d}. Symmetric, hence central.
HeckeElement p_element(const Partition& mu, const SpecPtr& spec);

/// Brute-force basis of Z(H_d^f): joint kernel of commutators with
/// x_1, s_1, ..., s_{d-1}. Verifies dim = |M_d(l)| and that the span
/// coincides with span{p_element(mu) : mu in P_d(l)}; throws otherwise.
std::vector<HeckeElement> center_basis_bruteforce(const SpecPtr& spec);

/// As above but without the cross-checks (for callers that verify
/// differently or need the raw kernel).
std::vector<HeckeElement> center_basis_raw(const SpecPtr& spec);

/// Whether the unital algebra generated by the power sums p_d((r)),
/// 1 <= r <= d, saturates the brute-force center.
bool power_sum_generation_check(const SpecPtr& spec);

}  // namespace cyclohecke
