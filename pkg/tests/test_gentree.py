import pytest

from invseq.errors import DomainError
from invseq.gentree import (
    AW_RULE,
    GGM_RULE,
    Label,
    aw_children,
    aw_label,
    expand_uncompressed,
    ggm_children,
    ggm_label,
    ggm_level_totals,
    label_distribution,
    level_profiles,
    level_series,
    verify_labels,
)
from invseq.polys import uv_poly
from invseq.recurrences import e3_sequence
from invseq.sequences import count_family

from conftest import AW, E3


def L(*pairs):
    return [Label(p, q) for p, q in pairs]


def test_ggm_children():
    assert ggm_children(Label(1, 1)) == L((0, 2), (2, 1))
    assert ggm_children(Label(2, 1)) == L((1, 2), (0, 2), (3, 1))
    assert ggm_children(Label(0, 2)) == L((1, 2), (2, 1))


def test_aw_children():
    assert aw_children(Label(1, 1)) == L((1, 1), (2, 1))
    assert aw_children(Label(3, 2)) == L((1, 3), (2, 2), (3, 1), (4, 1), (5, 1))
    assert aw_children(Label(2, 1)) == L((1, 2), (2, 1), (3, 1))


def test_invalid_labels():
    with pytest.raises(DomainError):
        ggm_children(Label(0, 0))
    with pytest.raises(DomainError):
        aw_children(Label(0, 1))


def test_labellers():
    assert ggm_label((0, 1, 2)) == (3, 1)
    assert ggm_label((0, 1, 1)) == (0, 2)
    assert ggm_label((0,)) == (1, 1)
    assert aw_label((0, 1, 2, 3, 2)) == (3, 2)
    assert aw_label((0,)) == (1, 1)
    assert aw_label((0, 1)) == (2, 1)
    with pytest.raises(DomainError):
        ggm_label((0, 0, 0))
    with pytest.raises(DomainError):
        aw_label((0, 0, 2))


def test_totals():
    assert [p.total for p in level_profiles(GGM_RULE, 8)] == list(E3)
    assert [p.total for p in level_profiles(AW_RULE, 8)] == list(AW)
    for n, (g, a) in enumerate(zip(level_profiles(GGM_RULE, 10), level_profiles(AW_RULE, 10)), 1):
        assert g.total == count_family("ggm", n)
        assert a.total == count_family("aw", n)


def test_level_three_from_brute_force():
    assert level_profiles(GGM_RULE, 3)[2].multiplicities == {
        Label(0, 2): 1, Label(1, 2): 2, Label(2, 1): 1, Label(3, 1): 1,
    }


def test_level_series():
    ggm = level_series(GGM_RULE, 2)
    assert ggm[0] == uv_poly({(1, 1): 1})
    assert ggm[1] == uv_poly({(0, 2): 1, (2, 1): 1})
    assert level_series(AW_RULE, 1)[0] == uv_poly({(1, 1): 1})


def test_fertility():
    for rule in (GGM_RULE, AW_RULE):
        for prof in level_profiles(rule, 8):
            for label in prof.multiplicities:
                assert len(rule.children(label)) == label.p + label.q


def test_labels_match_brute_force():
    assert verify_labels(8).ok


def test_uncompressed_matches():
    for rule in (GGM_RULE, AW_RULE):
        for prof, nodes in zip(level_profiles(rule, 6), expand_uncompressed(rule, 6)):
            assert label_distribution(nodes) == prof.multiplicities


def test_fast_totals():
    assert ggm_level_totals(40) == [p.total for p in level_profiles(GGM_RULE, 40)]
    e3 = e3_sequence(200)
    assert ggm_level_totals(200) == [e3[n] for n in range(1, 201)]
    with pytest.raises(DomainError):
        ggm_level_totals(0)
