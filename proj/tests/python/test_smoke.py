from fractions import Fraction

import cyclohecke as ch


def test_normal_form_of_the_defining_relation():
    spec = ch.Spec.from_roots(2, ["0", "0"])
    assert str(ch.nf("s1*x2", spec)) == "x1*s1 + 1"
    assert ch.nf("s1*x2", spec) == ch.x(spec, 1) * ch.s(spec, 1) + ch.one(spec)
    assert ch.nf("x1^2", spec).is_zero()


def test_fraction_inputs():
    spec = ch.Spec.from_roots(1, [Fraction(1, 2)])
    e = ch.nf("x1", spec)
    assert str(e) == "1/2"


def test_center_and_generation():
    spec = ch.Spec.from_roots(2, ["0", "0"])
    assert len(ch.center_basis(spec)) == 5
    assert ch.power_sum_generation(spec)


def test_combinatorics():
    assert len(ch.partitions(5)) == 7
    assert ch.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert len(ch.multipartitions(2, 2)) == 5
    assert len(ch.p_set(2, 2)) == 5
    assert ch.basd_rank(2, 2) == 6
    assert ch.phi([[2], [1]], 2) == [2, 1]
    assert ch.phi_inv([2, 1], 2, 3) == [[2], [1]]
    residues = sorted(ch.residue_tuple([[4, 2, 1]], ["5"]), key=Fraction)
    assert residues == ["3", "4", "5", "5", "6", "7", "8"]


def test_graded_algebra():
    assert ch.graded_center_dimension(2, 2) == 5
    assert ch.centralizer_dimension(2, 2) == 6
    assert ch.graded_nf("x1^2", 2, 2) == "0"
    assert ch.class_sum([[], [2]], 2, 2) == "x1*x2*(1 2)"


def test_blocks_report():
    report = ch.blocks(2, ["0", "0"])
    dims = sorted(b["center_dim"] for b in report["blocks"])
    assert dims == [1, 2, 2]
    assert sum(dims) == 5


def test_specht_character():
    out = ch.specht_character([[1], [1]], ["0", "0"])
    assert out["dimension"] == 2
    assert out["residues"] == ["0", "0"]


def test_cli_surface():
    code, out, err = ch.run_cli(["nf", "--d", "2", "--roots", "0,0", "s1*x2"])
    assert code == 0
    assert out == "x1*s1 + 1\n"
    assert err == ""
