#include <doctest.h>

#include "cyclohecke/specht.hpp"

using namespace cyclohecke;

namespace {

// hook length formula, an oracle independent of the tableau backtracking
long hook_dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    int n = lambda.size();
    long numer = 1;
    for (int k = 2; k <= n; ++k) numer *= k;
    long hooks = 1;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 1; j <= parts[i]; ++j) {
            int arm = parts[i] - j;
            int leg = 0;
            for (size_t r = i + 1; r < parts.size(); ++r)
                if (parts[r] >= j) ++leg;
            hooks *= arm + leg + 1;
        }
    return numer / hooks;
}

bool affine_relations_hold(const Representation& rep) {
    Matrix id = Matrix::identity(rep.dim);
    for (int i = 1; i < rep.d; ++i) {
        if (!(rep.s[i - 1] * rep.s[i - 1] == id)) return false;
        if (!(rep.s[i - 1] * rep.x[i] == rep.x[i - 1] * rep.s[i - 1] + id)) return false;
        for (int j = 1; j <= rep.d; ++j)
            if (j != i && j != i + 1 && !(rep.s[i - 1] * rep.x[j - 1] == rep.x[j - 1] * rep.s[i - 1]))
                return false;
        if (i + 1 < rep.d &&
            !(rep.s[i - 1] * rep.s[i] * rep.s[i - 1] == rep.s[i] * rep.s[i - 1] * rep.s[i]))
            return false;
    }
    for (int i = 1; i <= rep.d; ++i)
        for (int j = i + 1; j <= rep.d; ++j)
            if (!(rep.x[i - 1] * rep.x[j - 1] == rep.x[j - 1] * rep.x[i - 1])) return false;
    return true;
}

}  // namespace

TEST_CASE("specht dimensions and the one-dimensional cases") {
    for (int d = 1; d <= 4; ++d) {
        Representation triv = specht_representation(Partition({d}));
        CHECK(triv.dim == 1);
        for (const auto& m : triv.s) CHECK(m.at(0, 0) == 1);
        Representation sign = specht_representation(Partition(std::vector<int>(d, 1)));
        CHECK(sign.dim == 1);
        for (const auto& m : sign.s) CHECK(m.at(0, 0) == -1);
    }
    CHECK(specht_representation(Partition({2, 1})).dim == 2);
}

TEST_CASE("specht dimensions match the hook length formula") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            CHECK(count_standard_tableaux(lam) == hook_dimension(lam));
            CHECK(specht_representation(lam).dim == hook_dimension(lam));
        }
}

TEST_CASE("specht representations satisfy the group relations") {
    for (int d = 2; d <= 4; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            Representation rep = specht_representation(lam);
            Matrix id = Matrix::identity(rep.dim);
            for (int i = 1; i < d; ++i) {
                CHECK(rep.s[i - 1] * rep.s[i - 1] == id);
                if (i + 1 < d)
                    CHECK(rep.s[i - 1] * rep.s[i] * rep.s[i - 1] == rep.s[i] * rep.s[i - 1] * rep.s[i]);
                for (int j = i + 2; j < d; ++j)
                    CHECK(rep.s[i - 1] * rep.s[j - 1] == rep.s[j - 1] * rep.s[i - 1]);
            }
        }
}

TEST_CASE("dualize") {
    Representation triv = specht_representation(Partition({3}));
    CHECK(dualize(triv).s[0] == triv.s[0]);
    for (int d = 2; d <= 4; ++d)
        for (const auto& lam : enumerate_partitions(d)) {
            Representation rep = specht_representation(lam);
            Representation dd = dualize(dualize(rep));
            for (int i = 0; i < d - 1; ++i) CHECK(dd.s[i] == rep.s[i]);
            // characters are preserved
            Representation dual = dualize(rep);
            for (const auto& w : all_permutations(d)) {
                Matrix a = rep.act(w), b = dual.act(w);
                Rat ta = 0, tb = 0;
                for (int k = 0; k < rep.dim; ++k) {
                    ta += a.at(k, k);
                    tb += b.at(k, k);
                }
                CHECK(ta == tb);
            }
        }
}

TEST_CASE("affinize") {
    // trivial module: x_i acts by q + i - 1
    Representation triv = affinize(specht_representation(Partition({4})), Rat(2));
    for (int i = 1; i <= 4; ++i) CHECK(triv.x[i - 1].at(0, 0) == Rat(2 + i - 1));
    // sign module: x_i acts by q - i + 1
    Representation sign = affinize(specht_representation(Partition({1, 1, 1, 1})), Rat(2));
    for (int i = 1; i <= 4; ++i) CHECK(sign.x[i - 1].at(0, 0) == Rat(2 - i + 1));
    // d = 1
    Representation one = affinize(specht_representation(Partition({1})), rat(3, 2));
    CHECK(one.x[0].at(0, 0) == rat(3, 2));
    // relations hold on a two-dimensional module
    Representation std3 = affinize(dualize(specht_representation(Partition({2, 1}))), Rat(0));
    CHECK(affine_relations_hold(std3));
}

TEST_CASE("induce_product") {
    Representation m1 = affinize(dualize(specht_representation(Partition({1}))), Rat(0));
    Representation m2 = affinize(dualize(specht_representation(Partition({1}))), Rat(1));
    Representation prod = induce_product(m1, m2);
    CHECK(prod.dim == 2);
    CHECK(affine_relations_hold(prod));
    // induction against rank zero is the identity
    Representation zero;
    zero.d = 0;
    zero.dim = 1;
    CHECK(induce_product(m1, zero).dim == 1);
    CHECK(induce_product(zero, m2).dim == 1);

    // binomial(4,2) * 2 * 1: relations exhaustively at d = 4
    Representation a = affinize(dualize(specht_representation(Partition({2, 1}))), Rat(0));
    Representation b = affinize(dualize(specht_representation(Partition({2}))), Rat(1));
    Representation big = induce_product(a, b);
    CHECK(big.d == 5);
    CHECK(big.dim == 10 * 2 * 1);
    Representation mid = induce_product(m1, induce_product(m2, m1));
    CHECK(mid.dim == 3 * 2);
    CHECK(affine_relations_hold(mid));
    CHECK(affine_relations_hold(big));
}

TEST_CASE("dual specht modules") {
    // d=1, two-root spec: one-dimensional, x_1 = q_1
    Representation r1 = dual_specht(Multipartition({Partition({1}), Partition()}), {Rat(0), Rat(7)});
    CHECK(r1.dim == 1);
    CHECK(r1.x[0].at(0, 0) == 0);
    Representation r2 = dual_specht(Multipartition({Partition(), Partition({1})}), {Rat(0), Rat(7)});
    CHECK(r2.x[0].at(0, 0) == 7);

    // f(x_1) annihilates every dual Specht module
    for (int d = 1; d <= 3; ++d) {
        std::vector<Rat> q{Rat(0), Rat(1)};
        auto spec = CyclotomicSpec::from_roots(d, q);
        for (const auto& mp : enumerate_multipartitions(d, 2)) {
            Representation rep = dual_specht(mp, q);
            std::vector<Matrix> powers{Matrix::identity(rep.dim)};
            for (int t = 1; t <= 2; ++t) powers.push_back(powers.back() * rep.x[0]);
            Matrix fx = powers[2];
            for (int t = 1; t <= 2; ++t) fx = fx + powers[2 - t] * spec->coeffs()[t - 1];
            CHECK(fx.is_zero());
        }
    }
}

TEST_CASE("central characters") {
    // trivial module affinized at q has residues q, q+1, ..., q+d-1
    for (int d = 2; d <= 4; ++d) {
        Representation triv = affinize(dualize(specht_representation(Partition({d}))), Rat(3));
        std::vector<Rat> expect;
        for (int i = 0; i < d; ++i) expect.push_back(Rat(3 + i));
        CHECK(acts_with_character(triv, ResidueMultiset(expect)));
    }
    // matching against candidate multisets
    std::vector<Rat> q{Rat(0), Rat(0)};
    Multipartition mp({Partition({1}), Partition({1})});
    Representation rep = dual_specht(mp, q);
    std::vector<ResidueMultiset> candidates;
    for (const auto& other : enumerate_multipartitions(2, 2))
        candidates.push_back(residue_tuple(other, q));
    CHECK(central_character(rep, candidates) == ResidueMultiset({Rat(0), Rat(0)}));
}

TEST_CASE("concatenation law for central characters") {
    // the character of an induction product is the union of the factors'
    Representation a = affinize(dualize(specht_representation(Partition({2}))), Rat(0));
    Representation b = affinize(dualize(specht_representation(Partition({1, 1}))), Rat(5));
    Representation prod = induce_product(a, b);
    ResidueMultiset ra = residue_tuple(Multipartition({Partition({2})}), {Rat(0)});
    ResidueMultiset rb = residue_tuple(Multipartition({Partition({1, 1})}), {Rat(5)});
    std::vector<Rat> merged = ra.entries();
    for (const auto& e : rb.entries()) merged.push_back(e);
    CHECK(acts_with_character(prod, ResidueMultiset(merged)));
}

TEST_CASE("evaluate_element") {
    std::vector<Rat> q{Rat(0), Rat(1)};
    auto spec = CyclotomicSpec::from_roots(2, q);
    Representation rep = dual_specht(Multipartition({Partition({1}), Partition({1})}), q);
    // the identity evaluates to the identity, generators match the stored
    // matrices
    CHECK(evaluate_element(rep, HeckeElement::one(spec)) == Matrix::identity(rep.dim));
    CHECK(evaluate_element(rep, HeckeElement::generator_x(2, spec)) == rep.x[1]);
    CHECK(evaluate_element(rep, HeckeElement::generator_s(1, spec)) == rep.s[0]);
}
