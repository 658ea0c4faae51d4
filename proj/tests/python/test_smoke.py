from fractions import Fraction

import pytest

import cuntzlab as cl


def test_relations():
    s1, s2 = cl.Element("s[1]"), cl.Element("s[2]")
    one = cl.Element("1")
    assert s1.adjoint() * s1 == one
    assert s1 * s1.adjoint() + s2 * s2.adjoint() == one
    assert (s1.adjoint() * s2).is_zero()


def test_parse_format_round_trip():
    x = cl.Element("-3+1/2i * s[12] t[1] + s[2]")
    assert cl.Element(str(x)) == x


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        cl.Element("s[3]")
    with pytest.raises(cl.ParseError):
        cl.Element("s[1")


def test_trace_is_exact():
    assert cl.Element("s[1] t[1]").trace() == Fraction(1, 2)
    assert cl.Element("1/2i * s[11] t[11]").trace() == (Fraction(0), Fraction(1, 8))


def test_permutative_images():
    e = cl.Endomorphism("(1 2)")
    images = e.generator_images()
    assert images[0] == cl.Element("s[12] t[1] + s[11] t[2]")
    assert images[1] == cl.Element("s[2]")
    assert e(cl.Element("s[1] t[1] + s[2] t[2]")) == cl.Element("1")


def test_non_unitary_rejected():
    with pytest.raises(cl.DomainError):
        cl.Endomorphism.from_unitary(cl.Element("s[1] t[1]"))


def test_norm():
    assert cl.Element("s[1] t[2]").norm() == pytest.approx(1.0, abs=1e-9)
    assert cl.Element("2 * s[1] t[1] + s[2] t[2]").norm() == pytest.approx(2.0, abs=1e-9)


def test_lemma1_norms_bounded():
    x = cl.Element("s[1] + 1/2 * s[2]")
    norms = cl.lemma1_norms(x, 1)
    assert set(norms) == {"1", "2"}
    assert all(v <= x.norm() + 1e-9 for v in norms.values())


def test_shift_entropy():
    report = cl.entropy(cl.Endomorphism("shift"), p_max=2, n_max=8)
    assert report["summary"]["verdict"] == "log2"


def test_identity_entropy_zero():
    report = cl.entropy(cl.Endomorphism.identity(), p_max=2, n_max=8)
    assert report["summary"]["verdict"] == "zero"


def test_join_counts_shift():
    assert cl.join_counts(cl.Endomorphism("shift"), 1, 4) == [2, 4, 8, 16]


def test_block_map_keys():
    table = cl.block_map(cl.Endomorphism("(1 3)"), 2)
    assert len(table) == 2 ** 3
    assert all(len(v) == 2 for v in table.values())


def test_oracles():
    e = cl.Endomorphism("(1 4 2)")
    assert cl.oracle_equivalence(e, "t142", 8)
    assert 0 < len(cl.oracle_map("t142", "1212")) <= 4


def test_verify_suite():
    result = cl.verify("relations")
    assert result["failures"] == []
    assert "relations" in cl.verify_suites()
