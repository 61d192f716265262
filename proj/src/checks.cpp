#include "cyclohecke/checks.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cyclohecke/blocks.hpp"
#include "cyclohecke/cli.hpp"
#include "cyclohecke/expr.hpp"
#include "cyclohecke/graded.hpp"
#include "cyclohecke/hecke.hpp"
#include "cyclohecke/specht.hpp"

namespace cyclohecke {
namespace checks {

namespace {

void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
            const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

// Wraps a check body so an exception becomes a failure instead of
// aborting the whole suite.
template <typename F>
void guarded(std::vector<CheckResult>& out, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(out, name, false, std::string("exception: ") + e.what());
    }
}

std::string root_label(const std::vector<Rat>& roots) {
    std::string s;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ',';
        s += to_string(roots[i]);
    }
    return s;
}

// Root families for the acceptance grid: all-zero, all-equal-nonzero,
// distinct-small, and a repeated-with-gap pattern where the level allows.
std::vector<std::vector<Rat>> root_choices(int l, bool full) {
    std::vector<std::vector<Rat>> out;
    out.push_back(std::vector<Rat>(l, Rat(0)));
    if (full || l > 1) out.push_back(std::vector<Rat>(l, Rat(1)));
    std::vector<Rat> distinct;
    for (int i = 0; i < l; ++i) distinct.push_back(Rat(i));
    if (l > 1) out.push_back(distinct);
    if (l > 1) {
        std::vector<Rat> gap(l, Rat(0));
        gap.back() = 2;
        out.push_back(gap);
    }
    std::set<std::string> seen;
    std::vector<std::vector<Rat>> dedup;
    for (auto& r : out)
        if (seen.insert(root_label(r)).second) dedup.push_back(std::move(r));
    if (!full && dedup.size() > 2) dedup.resize(2);
    return dedup;
}

std::vector<Cycle> all_cycles(int d) {
    std::vector<Cycle> out;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        if (!subset.empty()) {
            // cyclic orders: first point fixed as the minimum
            std::vector<int> rest(subset.begin() + 1, subset.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> pts{subset[0]};
                pts.insert(pts.end(), rest.begin(), rest.end());
                out.push_back(Cycle(pts));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        for (int v = next; v <= d; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// All products x^{(l-1) on S} * w with supp(w) <= S, i in S <= {1..i},
// |S| <= max_support; the shape of the lower-order terms in the
// colored Jucys-Murphy expansions.
std::vector<GradedElement> colored_top_products(int i, int max_support, int l) {
    std::vector<GradedElement> out;
    std::vector<int> subset;
    auto emit = [&](const std::vector<int>& s) {
        std::vector<int> pts = s;
        std::sort(pts.begin(), pts.end());
        std::vector<int> arrangement = pts;
        // all permutations supported on s: permute the point set
        do {
            std::vector<int> im(i);
            for (int k = 1; k <= i; ++k) im[k - 1] = k;
            for (size_t k = 0; k < pts.size(); ++k) im[pts[k] - 1] = arrangement[k];
            Permutation w{std::vector<int>(im)};
            std::vector<int> exps(i, 0);
            for (int p : pts) exps[p - 1] = l - 1;
            out.push_back(GradedElement::monomial(Term{exps, w}, 1, i, l));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    };
    auto rec = [&](auto&& self, int next) -> void {
        if (!subset.empty() && subset.back() == i) emit(subset);
        if (static_cast<int>(subset.size()) >= max_support) return;
        for (int v = next; v <= i; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

bool relations_hold(const Representation& rep, const std::vector<Rat>* fcoeffs, std::string& why) {
    int d = rep.d;
    Matrix id = Matrix::identity(rep.dim);
    for (int i = 1; i < d; ++i) {
        if (!(rep.s[i - 1] * rep.s[i - 1] == id)) {
            why = "s" + std::to_string(i) + "^2 != 1";
            return false;
        }
        for (int j = i + 2; j < d; ++j)
            if (!(rep.s[i - 1] * rep.s[j - 1] == rep.s[j - 1] * rep.s[i - 1])) {
                why = "distant transpositions do not commute";
                return false;
            }
        if (i + 1 < d) {
            Matrix lhs = rep.s[i - 1] * rep.s[i] * rep.s[i - 1];
            Matrix rhs = rep.s[i] * rep.s[i - 1] * rep.s[i];
            if (!(lhs == rhs)) {
                why = "braid relation fails at " + std::to_string(i);
                return false;
            }
        }
    }
    if (rep.affinized()) {
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                if (!(rep.x[i - 1] * rep.x[j - 1] == rep.x[j - 1] * rep.x[i - 1])) {
                    why = "polynomial generators do not commute";
                    return false;
                }
        for (int i = 1; i < d; ++i) {
            if (!(rep.s[i - 1] * rep.x[i] == rep.x[i - 1] * rep.s[i - 1] + id)) {
                why = "s_i x_{i+1} != x_i s_i + 1 at " + std::to_string(i);
                return false;
            }
            for (int j = 1; j <= d; ++j) {
                if (j == i || j == i + 1) continue;
                if (!(rep.s[i - 1] * rep.x[j - 1] == rep.x[j - 1] * rep.s[i - 1])) {
                    why = "s_i x_j != x_j s_i";
                    return false;
                }
            }
        }
        if (fcoeffs) {
            int l = static_cast<int>(fcoeffs->size());
            // f(x_1) = x_1^l + c_1 x_1^{l-1} + ... + c_l
            std::vector<Matrix> powers{id};
            for (int k = 1; k <= l; ++k) powers.push_back(powers.back() * rep.x[0]);
            Matrix f = powers[l];
            for (int k = 1; k <= l; ++k) f = f + powers[l - k] * (*fcoeffs)[k - 1];
            if (!f.is_zero()) {
                why = "f(x_1) does not annihilate the module";
                return false;
            }
        }
    }
    return true;
}

// center dimension and p-basis span on one spec
bool center_matches(const SpecPtr& spec, std::string& why) {
    MonomialBasis basis(spec->d(), spec->l());
    auto center = center_basis_raw(spec);
    size_t expected = enumerate_multipartitions(spec->d(), spec->l()).size();
    if (center.size() != expected) {
        why = "dim Z = " + std::to_string(center.size()) + ", |M_d(l)| = " + std::to_string(expected);
        return false;
    }
    RowSpace p_span(basis.size());
    for (const auto& mu : enumerate_p_set(spec->d(), spec->l()))
        if (!p_span.insert(basis.to_vector(p_element(mu, spec).terms()))) {
            why = "p_d(mu) family is linearly dependent";
            return false;
        }
    if (p_span.dim() != static_cast<int>(expected)) {
        why = "p-span dimension mismatch";
        return false;
    }
    for (const auto& z : center)
        if (!p_span.contains(basis.to_vector(z.terms()))) {
            why = "brute-force center not inside span{p_d(mu)}";
            return false;
        }
    return true;
}

GradedElement realize(const ColoredCycleProduct& p, int d, int l) {
    if (p.is_zero()) return GradedElement::zero(d, l);
    return disjoint_product_element(p.cycles, p.scalar, d, l);
}

int hash_order(const Multipartition& mp) {  // #lambda = d - #(parts of lambda^(1) equal to 1)
    int ones = 0;
    for (int part : mp.component(1).parts())
        if (part == 1) ++ones;
    return mp.total_size() - ones;
}

bool saturates_graded(const std::vector<GradedElement>& gens,
                      const std::vector<GradedElement>& target, int d, int l) {
    MonomialBasis basis(d, l);
    RowSpace target_span(basis.size());
    for (const auto& z : target) target_span.insert(basis.to_vector(z.terms()));
    RowSpace span(basis.size());
    std::vector<GradedElement> pool{GradedElement::one(d, l)};
    span.insert(basis.to_vector(pool[0].terms()));
    for (const auto& g : gens)
        if (span.insert(basis.to_vector(g.terms()))) pool.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GradedElement> fresh;
        for (const auto& z : pool)
            for (const auto& g : gens) {
                GradedElement prod = z * g;
                if (span.insert(basis.to_vector(prod.terms()))) {
                    fresh.push_back(prod);
                    grew = true;
                }
            }
        for (auto& f : fresh) pool.push_back(std::move(f));
    }
    if (span.dim() != target_span.dim()) return false;
    for (const auto& z : target)
        if (!span.contains(basis.to_vector(z.terms()))) return false;
    return true;
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return rat(num(rng), den(rng));
}

}  // namespace

std::vector<CheckResult> center_checks(bool full) {
    std::vector<CheckResult> out;
    std::vector<std::pair<int, int>> grid;
    int dmax1 = full ? 4 : 3, dmax2 = full ? 4 : 3, dmax3 = full ? 3 : 2;
    for (int d = 1; d <= dmax1; ++d) grid.push_back({d, 1});
    for (int d = 1; d <= dmax2; ++d) grid.push_back({d, 2});
    for (int d = 1; d <= dmax3; ++d) grid.push_back({d, 3});
    for (auto [d, l] : grid)
        for (const auto& roots : root_choices(l, full)) {
            std::string name = "center-basis d=" + std::to_string(d) + " l=" + std::to_string(l) +
                               " roots=" + root_label(roots);
            guarded(out, name, [&]() {
                auto spec = CyclotomicSpec::from_roots(d, roots);
                std::string why;
                report(out, name, center_matches(spec, why), why);
            });
        }
    return out;
}

std::vector<CheckResult> centralizer_checks(bool full) {
    std::vector<CheckResult> out;
    std::vector<std::pair<int, int>> grid;
    for (int d = 1; d <= 3; ++d)
        for (int l = 1; l <= (full ? 3 : 2); ++l) grid.push_back({d, l});
    if (full) grid.push_back({4, 2});
    for (auto [d, l] : grid) {
        std::string name = "centralizer-rank d=" + std::to_string(d) + " l=" + std::to_string(l);
        guarded(out, name, [&]() {
            auto q_basis = centralizer_basis(d, l);
            mpz_class expected = basd_rank(d, l);
            if (mpz_class(static_cast<long>(q_basis.size())) != expected) {
                report(out, name, false,
                       "dim Q = " + std::to_string(q_basis.size()) + ", formula = " + expected.get_str());
                return;
            }
            MonomialBasis basis(d, l);
            RowSpace q_span(basis.size());
            for (const auto& z : q_basis) q_span.insert(basis.to_vector(z.terms()));
            RowSpace prod_span(basis.size());
            long count = 0;
            for (const auto& mp : enumerate_multipartitions(d, l))
                for (const auto& cycles : products_of_type(mp, d, l)) {
                    GradedElement e = disjoint_product_element(cycles, 1, d, l);
                    Vec v = basis.to_vector(e.terms());
                    if (!q_span.contains(v)) {
                        report(out, name, false, "a product of disjoint colored cycles escapes Q_d");
                        return;
                    }
                    if (!prod_span.insert(v)) {
                        report(out, name, false, "products of disjoint colored cycles are dependent");
                        return;
                    }
                    ++count;
                }
            if (prod_span.dim() != q_span.dim() || mpz_class(count) != expected) {
                report(out, name, false, "colored cycle products do not form a basis of Q_d");
                return;
            }
            report(out, name, true);
        });
    }
    return out;
}

std::vector<CheckResult> colored_cycle_oracle(bool full) {
    std::vector<CheckResult> out;
    for (int l = 1; l <= (full ? 3 : 2); ++l)
        for (int d = 1; d <= (full ? 4 : 3); ++d) {
            std::string name =
                "colored-cycle-products d=" + std::to_string(d) + " l=" + std::to_string(l);
            guarded(out, name, [&]() {
                auto cycles = all_cycles(d);
                for (const auto& a : cycles)
                    for (const auto& b : cycles)
                        for (int r = 0; r < l; ++r)
                            for (int s = 0; s < l; ++s) {
                                ColoredCycle ca(a, r, l), cb(b, s, l);
                                GradedElement generic = colored_cycle_element(ca, d, l) *
                                                        colored_cycle_element(cb, d, l);
                                GradedElement closed =
                                    realize(colored_cycle_product(ca, cb, d, l), d, l);
                                if (!(generic == closed)) {
                                    report(out, name, false,
                                           "closed form disagrees for " + a.to_string() + "^(" +
                                               std::to_string(r) + ") * " + b.to_string() + "^(" +
                                               std::to_string(s) + ")");
                                    return;
                                }
                            }
                report(out, name, true);
            });
        }
    // the three worked examples, verbatim
    guarded(out, "colored-cycle-product examples", [&]() {
        int d = 9;
        {
            int l = 6;
            ColoredCycle a(Cycle({1, 2, 3}), 4, l), b(Cycle({7, 9, 2}), 1, l);
            auto p = colored_cycle_product(a, b, d, l);
            ColoredCycleProduct expected{Rat(1), {ColoredCycle(Cycle({1, 2, 7, 9, 3}), 5, l)}};
            if (!(p == expected) || !(realize(p, d, l) == colored_cycle_element(a, d, l) *
                                                              colored_cycle_element(b, d, l))) {
                report(out, "colored-cycle-product examples", false, "(1 2 3)^(4)(7 9 2)^(1) mismatch");
                return;
            }
            ColoredCycle b2(Cycle({7, 9, 2, 1}), 1, l);
            auto p2 = colored_cycle_product(a, b2, d, l);
            if (!p2.is_zero() ||
                !(colored_cycle_element(a, d, l) * colored_cycle_element(b2, d, l))
                     .is_zero()) {
                report(out, "colored-cycle-product examples", false, "(1 2 3)^(4)(7 9 2 1)^(1) should vanish");
                return;
            }
        }
        for (int l = 2; l <= 3; ++l) {
            ColoredCycle a(Cycle({1, 2, 3}), 0, l), b(Cycle({7, 9, 2, 1}), 0, l);
            auto p = colored_cycle_product(a, b, d, l);
            ColoredCycleProduct expected{
                Rat(l),
                {ColoredCycle(Cycle({1, 7, 9, 3}), l - 1, l), ColoredCycle(Cycle({2}), l - 1, l)}};
            if (!(p == expected) || !(realize(p, d, l) == colored_cycle_element(a, d, l) *
                                                              colored_cycle_element(b, d, l))) {
                report(out, "colored-cycle-product examples", false,
                       "(1 2 3)^(0)(7 9 2 1)^(0) mismatch at l=" + std::to_string(l));
                return;
            }
        }
        report(out, "colored-cycle-product examples", true);
    });
    return out;
}

std::vector<CheckResult> graded_center_bases(bool full) {
    std::vector<CheckResult> out;
    for (int d = 1; d <= 3; ++d)
        for (int l = 1; l <= (full ? 3 : 2); ++l) {
            std::string name = "graded-center-bases d=" + std::to_string(d) + " l=" + std::to_string(l);
            guarded(out, name, [&]() {
                MonomialBasis basis(d, l);
                auto center = center_basis_bruteforce(d, l);
                auto mps = enumerate_multipartitions(d, l);
                if (center.size() != mps.size()) {
                    report(out, name, false, "graded center dimension mismatch");
                    return;
                }
                RowSpace center_span(basis.size());
                for (const auto& z : center) center_span.insert(basis.to_vector(z.terms()));

                // sort by the #-order, ties by canonical enumeration order
                std::vector<size_t> order(mps.size());
                for (size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                    return hash_order(mps[a]) < hash_order(mps[b]);
                });

                RowSpace z_span(basis.size());
                std::vector<Vec> z_vectors;
                for (size_t idx : order) {
                    Vec v = basis.to_vector(class_sum(mps[idx], d, l).terms());
                    if (!center_span.contains(v)) {
                        report(out, name, false, "z_d(lambda) is not central");
                        return;
                    }
                    if (!z_span.insert(v)) {
                        report(out, name, false, "z_d(lambda) family is dependent");
                        return;
                    }
                    z_vectors.push_back(std::move(v));
                }
                // murphy basis: same span, unitriangular transition
                for (size_t col = 0; col < order.size(); ++col) {
                    const auto& mp = mps[order[col]];
                    Partition mu = phi(mp, l);
                    Vec mv = basis.to_vector(murphy_element(mu, d, l).terms());
                    auto coords = z_span.coordinates(mv);
                    if (!coords) {
                        report(out, name, false, "m_d(mu) outside span{z_d(lambda)}");
                        return;
                    }
                    for (size_t row = 0; row < coords->size(); ++row) {
                        const Rat& c = (*coords)[row];
                        if (row == col ? c != 1
                                       : (c != 0 && hash_order(mps[order[row]]) >=
                                                        hash_order(mps[order[col]]))) {
                            report(out, name, false, "transition z -> m is not unitriangular");
                            return;
                        }
                    }
                }
                report(out, name, true);
            });
        }
    return out;
}

std::vector<CheckResult> murphy_specialization(bool full) {
    std::vector<CheckResult> out;
    static const long pd[] = {1, 1, 2, 3, 5, 7};
    for (int d = 1; d <= (full ? 5 : 4); ++d) {
        std::string name = "murphy l=1 d=" + std::to_string(d);
        guarded(out, name, [&]() {
            auto spec = CyclotomicSpec::from_roots(d, {Rat(0)});
            auto center = center_basis_raw(spec);
            if (static_cast<long>(center.size()) != pd[d] ||
                center.size() != enumerate_partitions(d).size()) {
                report(out, name, false, "dim Z(QS_d) != p(d)");
                return;
            }
            std::string why;
            bool ok = center_matches(spec, why);
            report(out, name, ok, why);
        });
    }
    return out;
}

namespace {

std::vector<std::vector<Rat>> block_root_choices(int l) {
    if (l == 1) return {{Rat(0)}, {Rat(1)}, {Rat(5)}};
    return {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(100)}};
}

}  // namespace

std::vector<CheckResult> block_dimensions(bool full) {
    std::vector<CheckResult> out;
    for (int l = 1; l <= 2; ++l)
        for (int d = 1; d <= (full ? 3 : 2); ++d)
            for (const auto& roots : block_root_choices(l)) {
                std::string name = "block-dims d=" + std::to_string(d) + " l=" +
                                   std::to_string(l) + " roots=" + root_label(roots);
                guarded(out, name, [&]() {
                    auto spec = CyclotomicSpec::from_roots(d, roots);
                    auto dims = block_center_dimensions(spec);  // throws on any mismatch
                    long total = 0;
                    for (const auto& [res, dim] : dims) total += dim;
                    if (total != static_cast<long>(enumerate_multipartitions(d, l).size())) {
                        report(out, name, false, "block dims do not sum to |M_d(l)|");
                        return;
                    }
                    report(out, name, true);
                });
            }
    // pinned fiber structure at l=2, q=(0,0), d=2 and generic singletons
    guarded(out, "block-dims pinned d=2 l=2", [&]() {
        auto spec = CyclotomicSpec::from_roots(2, {Rat(0), Rat(0)});
        auto dims = block_center_dimensions(spec);
        std::multiset<int> values;
        for (const auto& [res, dim] : dims) values.insert(dim);
        bool ok = values == std::multiset<int>{1, 2, 2};
        report(out, "block-dims pinned d=2 l=2", ok, ok ? "" : "dims are not {2,2,1}");
    });
    guarded(out, "block-dims generic singletons", [&]() {
        for (int d = 1; d <= (full ? 3 : 2); ++d) {
            auto spec = CyclotomicSpec::from_roots(d, {Rat(0), Rat(100)});
            auto dims = block_center_dimensions(spec);
            size_t expected = enumerate_multipartitions(d, 2).size();
            if (dims.size() != expected) {
                report(out, "block-dims generic singletons", false, "generic roots merged some blocks");
                return;
            }
            for (const auto& [res, dim] : dims)
                if (dim != 1) {
                    report(out, "block-dims generic singletons", false, "generic block has dim > 1");
                    return;
                }
        }
        report(out, "block-dims generic singletons", true);
    });
    return out;
}

std::vector<CheckResult> block_characters(bool full) {
    std::vector<CheckResult> out;
    for (int l = 1; l <= 2; ++l)
        for (int d = 1; d <= (full ? 3 : 2); ++d)
            for (const auto& roots : block_root_choices(l)) {
                std::string name = "character-coverage d=" + std::to_string(d) + " l=" +
                                   std::to_string(l) + " roots=" + root_label(roots);
                guarded(out, name, [&]() {
                    auto spec = CyclotomicSpec::from_roots(d, roots);
                    auto blocks = enumerate_blocks(spec);
                    auto p_set = enumerate_p_set(d, l);
                    Matrix chi(static_cast<int>(blocks.size()), static_cast<int>(p_set.size()));
                    for (size_t i = 0; i < blocks.size(); ++i)
                        for (size_t j = 0; j < p_set.size(); ++j)
                            chi.at(static_cast<int>(i), static_cast<int>(j)) =
                                chi_evaluate(blocks[i].residues, p_set[j]);
                    if (rank(chi) != static_cast<int>(blocks.size())) {
                        report(out, name, false, "character matrix is rank deficient");
                        return;
                    }
                    // block_idempotents succeeding is the computational
                    // content: the eigenspaces of a separating central
                    // element exhaust the center
                    block_idempotents(spec);
                    long total = 0;
                    for (const auto& b : blocks) total += static_cast<long>(b.fiber.size());
                    bool ok = total == static_cast<long>(enumerate_multipartitions(d, l).size());
                    report(out, name, ok, ok ? "" : "fibers do not partition M_d(l)");
                });
            }
    return out;
}

std::vector<CheckResult> specht_consistency(bool full) {
    std::vector<CheckResult> out;
    for (int l = 1; l <= 2; ++l) {
        auto qsets = l == 1 ? std::vector<std::vector<Rat>>{{Rat(0)}, {Rat(3)}}
                            : std::vector<std::vector<Rat>>{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
        for (int d = 1; d <= (full ? 3 : 2); ++d)
            for (const auto& q : qsets) {
                std::string name = "specht d=" + std::to_string(d) + " l=" + std::to_string(l) +
                                   " q=" + root_label(q);
                guarded(out, name, [&]() {
                    auto spec = CyclotomicSpec::from_roots(d, q);
                    std::vector<ResidueMultiset> candidates;
                    auto mps = enumerate_multipartitions(d, l);
                    for (const auto& mp : mps) candidates.push_back(residue_tuple(mp, q));
                    for (const auto& mp : mps) {
                        Representation rep = dual_specht(mp, q);
                        std::string why;
                        if (!relations_hold(rep, &spec->coeffs(), why)) {
                            report(out, name, false, mp.to_string() + ": " + why);
                            return;
                        }
                        if (!(central_character(rep, candidates) == residue_tuple(mp, q))) {
                            report(out, name, false,
                                   mp.to_string() + ": central character != residue multiset");
                            return;
                        }
                    }
                    report(out, name, true);
                });
            }
    }
    guarded(out, "specht residue diagram (4,2,1) q=5", [&]() {
        Multipartition mp({Partition({4, 2, 1})});
        ResidueMultiset expected(
            {Rat(5), Rat(6), Rat(7), Rat(8), Rat(4), Rat(5), Rat(3)});
        if (!(residue_tuple(mp, {Rat(5)}) == expected)) {
            report(out, "specht residue diagram (4,2,1) q=5", false, "combinatorial residues differ");
            return;
        }
        if (full) {
            Representation rep = dual_specht(mp, {Rat(5)});
            std::vector<ResidueMultiset> candidates;
            for (const auto& other : enumerate_multipartitions(7, 1))
                candidates.push_back(residue_tuple(other, {Rat(5)}));
            if (!(central_character(rep, candidates) == expected)) {
                report(out, "specht residue diagram (4,2,1) q=5", false,
                       "module character disagrees with the residue diagram");
                return;
            }
        }
        report(out, "specht residue diagram (4,2,1) q=5", true);
    });
    return out;
}

std::vector<CheckResult> generation(bool full) {
    std::vector<CheckResult> out;
    for (int d = 1; d <= (full ? 3 : 2); ++d)
        for (int l = 1; l <= 2; ++l) {
            std::string name = "class-sum-generation d=" + std::to_string(d) + " l=" +
                               std::to_string(l);
            guarded(out, name, [&]() {
                std::vector<GradedElement> gens;
                for (int a = 1; a <= d; ++a)
                    for (int r = 0; r < l; ++r) {
                        // cycle type: one a-cycle of color r, 1-cycles of color 0 elsewhere
                        std::vector<Partition> comps(l);
                        std::vector<int> pad(d - a, 1);
                        if (r == 0) {
                            std::vector<int> parts{a};
                            parts.insert(parts.end(), pad.begin(), pad.end());
                            std::sort(parts.rbegin(), parts.rend());
                            comps[0] = Partition(parts);
                        } else {
                            comps[0] = Partition(pad);
                            comps[r] = Partition({a});
                        }
                        gens.push_back(class_sum(Multipartition(comps), d, l));
                    }
                bool ok = saturates_graded(gens, center_basis_bruteforce(d, l), d, l);
                report(out, name, ok, ok ? "" : "z_d(a^(r)) do not generate the graded center");
            });
            std::vector<std::vector<Rat>> roots =
                l == 1 ? std::vector<std::vector<Rat>>{{Rat(0)}, {Rat(1)}}
                       : std::vector<std::vector<Rat>>{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
            for (const auto& r : roots) {
                std::string pname = "power-sum-generation d=" + std::to_string(d) + " l=" +
                                    std::to_string(l) + " roots=" + root_label(r);
                guarded(out, pname, [&]() {
                    auto spec = CyclotomicSpec::from_roots(d, r);
                    bool ok = power_sum_generation_check(spec);
                    report(out, pname, ok, ok ? "" : "power sums do not generate the center");
                });
            }
        }
    return out;
}

std::vector<CheckResult> structural_identities(bool full) {
    std::vector<CheckResult> out;
    guarded(out, "complete-symmetric-merge", [&]() {
        int d = 4;
        for (int l = 1; l <= (full ? 3 : 2); ++l) {
            std::vector<std::vector<int>> subsets;
            for (int mask = 1; mask < (1 << d); ++mask) {
                std::vector<int> s;
                for (int i = 0; i < d; ++i)
                    if (mask & (1 << i)) s.push_back(i + 1);
                subsets.push_back(std::move(s));
            }
            for (const auto& I : subsets)
                for (const auto& J : subsets) {
                    std::vector<int> common, united;
                    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(),
                                          std::back_inserter(common));
                    std::set_union(I.begin(), I.end(), J.begin(), J.end(),
                                   std::back_inserter(united));
                    int c = static_cast<int>(common.size());
                    if (c == 0) continue;
                    for (int r = 0; r < l; ++r)
                        for (int s = 0; s < l; ++s) {
                            GradedElement lhs = h_poly(r, I, d, l) * h_poly(s, J, d, l);
                            Rat scalar = 1;
                            for (int k = 1; k < c; ++k) scalar *= l;
                            GradedElement rhs =
                                h_poly(r + s + (c - 1) * (l - 1), united, d, l) * scalar;
                            if (!(lhs == rhs)) {
                                report(out, "complete-symmetric-merge", false,
                                       "h_r(I) h_s(J) closed form fails");
                                return;
                            }
                        }
                }
        }
        report(out, "complete-symmetric-merge", true);
    });
    guarded(out, "colored-jm-powers", [&]() {
        for (int l = 1; l <= (full ? 3 : 2); ++l)
            for (int i = 1; i <= 3; ++i)
                for (int p = 0; p <= 3; ++p) {
                    GradedElement lhs = GradedElement::one(i, l);
                    GradedElement yil = y_element(i, l, i, l);
                    for (int k = 0; k < p; ++k) lhs = lhs * yil;
                    GradedElement delta = lhs - y_element(i, p * l, i, l);
                    MonomialBasis basis(i, l);
                    std::vector<Vec> candidates;
                    for (const auto& e : colored_top_products(i, p, l))
                        candidates.push_back(basis.to_vector(e.terms()));
                    if (!in_span(basis.to_vector(delta.terms()), candidates)) {
                        report(out, "colored-jm-powers", false,
                               "y_i(l)^p - y_i(pl) has terms outside the stated shape (i=" +
                                   std::to_string(i) + ", p=" + std::to_string(p) + ")");
                        return;
                    }
                }
        report(out, "colored-jm-powers", true);
    });
    guarded(out, "leading-terms-of-powers", [&]() {
        for (int l = 1; l <= (full ? 3 : 2); ++l) {
            std::vector<Rat> coeffs;
            for (int t = 1; t <= l; ++t) coeffs.push_back(Rat(t));  // nontrivial f
            for (int i = 1; i <= 3; ++i) {
                auto spec = CyclotomicSpec::from_coeffs(i, coeffs);
                for (int a = 1; a <= 3; ++a)
                    for (int r = 0; r < l; ++r) {
                        int k = (a - 1) * l + r;
                        int deg = (a - 1) * (l - 1) + r;
                        HeckeElement nf = reduce_high_power(i, k, spec);
                        if (nf.filtration_degree() > deg) {
                            report(out, "leading-terms-of-powers", false,
                                   "x_i^k exceeds the stated filtration degree");
                            return;
                        }
                        GradedElement top(i, l);
                        for (const auto& [t, c] : nf.terms())
                            if (t.degree() == deg) top.add(t, c);
                        GradedElement y = y_element(i, k, i, l);
                        if (r > 0) {
                            if (!(top == y)) {
                                report(out, "leading-terms-of-powers", false,
                                       "gr x_i^k != y_i(k) for r > 0");
                                return;
                            }
                        } else {
                            MonomialBasis basis(i, l);
                            std::vector<Vec> candidates;
                            for (const auto& e : colored_top_products(i, a - 1, l))
                                candidates.push_back(basis.to_vector(e.terms()));
                            if (!in_span(basis.to_vector((top - y).terms()), candidates)) {
                                report(out, "leading-terms-of-powers", false,
                                       "gr x_i^k - y_i(k) has terms outside the stated shape");
                                return;
                            }
                        }
                    }
            }
        }
        report(out, "leading-terms-of-powers", true);
    });
    guarded(out, "elementary-symmetric-shift", [&]() {
        std::mt19937 rng(20240117);
        std::uniform_int_distribution<int> klen(0, 4), rdist(0, 5);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rat> u_list;
            int k = klen(rng);
            for (int t = 0; t < k; ++t) u_list.push_back(random_rat(rng));
            Rat u = random_rat(rng);
            if (!elementary_symmetric_shift_identity(u_list, u, rdist(rng))) {
                report(out, "elementary-symmetric-shift", false,
                       "identity fails on trial " + std::to_string(trial));
                return;
            }
        }
        report(out, "elementary-symmetric-shift", true);
    });
    return out;
}

std::vector<CheckResult> cli_contract(bool full) {
    std::vector<CheckResult> out;
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream o, e;
        int code = run_cli(args, o, e);
        return std::pair<int, std::string>(code, o.str());
    };
    guarded(out, "cli nf pinned output", [&]() {
        auto [code, text] = run({"nf", "--d", "2", "--roots", "0,0", "s1*x2"});
        bool ok = code == 0 && text == "x1*s1 + 1\n";
        auto second = run({"nf", "--d", "2", "--roots", "0,0", "s1*x2"});
        ok = ok && second.second == text;
        report(out, "cli nf pinned output", ok, ok ? "" : "got: " + text);
    });
    guarded(out, "cli center json 5 elements", [&]() {
        auto [code, text] =
            run({"center", "--d", "2", "--l", "2", "--roots", "0,0", "--format", "json"});
        auto again =
            run({"center", "--d", "2", "--l", "2", "--roots", "0,0", "--format", "json"});
        bool ok = code == 0 && text == again.second;
        if (ok) {
            auto j = nlohmann::json::parse(text);
            ok = j.at("basis").size() == 5;
        }
        report(out, "cli center json 5 elements", ok, ok ? "" : "center output not as documented");
    });
    guarded(out, "cli blocks pinned structure", [&]() {
        auto [code, text] = run({"blocks", "--d", "2", "--roots", "0,0"});
        auto again = run({"blocks", "--d", "2", "--roots", "0,0"});
        bool ok = code == 0 && text == again.second;
        if (ok) {
            std::multiset<int> dims;
            std::istringstream iss(text);
            std::string line;
            while (std::getline(iss, line)) {
                auto pos = line.find("center_dim=");
                if (line.rfind("block ", 0) == 0 && pos != std::string::npos)
                    dims.insert(std::stoi(line.substr(pos + 11)));
            }
            ok = dims == std::multiset<int>{1, 2, 2};
        }
        report(out, "cli blocks pinned structure", ok, ok ? "" : "blocks output not as documented");
    });
    guarded(out, "cli round trip", [&]() {
        auto spec = CyclotomicSpec::from_roots(3, {Rat(0), Rat(1)});
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> pick(0, 9999);
        // random expression source strings from the grammar
        std::function<std::string(int)> gen_expr;
        std::function<std::string(int)> gen_atom = [&](int depth) -> std::string {
            switch (pick(rng) % (depth >= 2 ? 3 : 4)) {
                case 0: return std::to_string(pick(rng) % 7) + "/" + std::to_string(1 + pick(rng) % 5);
                case 1: return "x" + std::to_string(1 + pick(rng) % 3);
                case 2: return "s" + std::to_string(1 + pick(rng) % 2);
                default: return "(" + gen_expr(depth + 1) + ")";
            }
        };
        gen_expr = [&](int depth) -> std::string {
            std::string s = gen_atom(depth);
            int extra = pick(rng) % 3;
            for (int t = 0; t < extra; ++t) {
                std::string rhs = gen_atom(depth);
                switch (pick(rng) % 4) {
                    case 0: s += " + " + rhs; break;
                    case 1: s += " - " + rhs; break;
                    case 2: s += "*" + rhs; break;
                    default: s += "*" + rhs + "^" + std::to_string(pick(rng) % 3); break;
                }
            }
            return s;
        };
        for (int trial = 0; trial < 200; ++trial) {
            std::string src = gen_expr(0);
            HeckeElement first = evaluate(parse(src), spec);
            std::string printed = first.to_string();
            HeckeElement second = evaluate(parse(printed), spec);
            if (!(first == second)) {
                report(out, "cli round trip", false, "not a fixed point: " + src + " -> " + printed);
                return;
            }
        }
        report(out, "cli round trip", true);
    });
    (void)full;
    return out;
}

std::vector<CheckResult> run_suite(bool full) {
    std::vector<CheckResult> all;
    auto absorb = [&](std::vector<CheckResult> part) {
        for (auto& r : part) all.push_back(std::move(r));
    };
    absorb(center_checks(full));
    absorb(centralizer_checks(full));
    absorb(colored_cycle_oracle(full));
    absorb(graded_center_bases(full));
    absorb(murphy_specialization(full));
    absorb(block_dimensions(full));
    absorb(block_characters(full));
    absorb(specht_consistency(full));
    absorb(generation(full));
    absorb(structural_identities(full));
    absorb(cli_contract(full));
    return all;
}

}  // namespace checks
}  // namespace cyclohecke
