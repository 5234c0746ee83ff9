from itertools import product

import pytest

from invseq import _kernels
from invseq.errors import DomainError, ResourceLimitError
from invseq.exactnum import bell, binomial, catalan
from invseq.sequences import (
    asc,
    avoids_weak_dec_triple,
    avoids_weak_dec_triple_naive,
    count_family,
    enumerate_family,
    is_210_avoiding,
    is_210_avoiding_naive,
    is_ascent_sequence,
    is_aw,
    is_inversion_sequence,
    is_k_aw,
    is_primitive,
    parse_family,
    phi,
    rle_compose,
    rle_decompose,
    verify_phi,
)

from conftest import AW, C3, E3


def seq(text):
    return tuple(int(c) for c in text)


def test_asc():
    assert asc((0,)) == 0
    assert asc((0, 1, 0, 2)) == 2
    assert asc((0, 1, 1, 2, 1, 2, 2, 2, 4)) == 4
    assert asc(seq("011021222")) == 3
    assert asc(seq("0110212224")) == 4


@pytest.mark.parametrize("e, ok", [((0, 1, 2), True), ((0, 0, 0), False), ((0, 1, 1), True)])
def test_weak_dec_triple_examples(e, ok):
    assert avoids_weak_dec_triple(e) is ok


@pytest.mark.parametrize("e, ok", [((0, 1, 2), True), ((0, 0, 2), False), ((0, 1, 2, 3, 2), True)])
def test_aw_examples(e, ok):
    assert is_aw(e) is ok


def test_k_aw_k1():
    assert is_k_aw((0, 1, 2, 3), 1)
    assert not is_k_aw((0, 0, 2, 1), 1)


def test_210_and_primitive():
    assert is_210_avoiding(seq("012")) and is_primitive(seq("012"))
    assert is_210_avoiding(seq("000")) and not is_primitive(seq("000"))


def test_enumerate_examples():
    assert enumerate_family("ggm", 3) == [(0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert enumerate_family("asc210", 3) == [seq(s) for s in ("000", "001", "010", "011", "012")]
    assert enumerate_family("pasc210", 4) == [seq(s) for s in ("0101", "0102", "0120", "0121", "0123")]
    assert enumerate_family("aw", 3) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]


def test_phi_examples():
    assert phi(seq("01")) == (0,)
    assert phi(seq("0101")) == (0, 0, 1)


@pytest.mark.parametrize("bad", [seq("0"), seq("0011"), seq("01210"), (1, 0)])
def test_phi_rejects(bad):
    with pytest.raises(DomainError):
        phi(bad)


def test_rle():
    assert rle_decompose(seq("0110212224")) == (seq("0102124"), (1, 2, 1, 1, 1, 3, 1))
    assert rle_decompose(seq("0123")) == (seq("0123"), (1, 1, 1, 1))
    assert rle_decompose(seq("000")) == ((0,), (3,))
    assert rle_compose(seq("0102124"), (1, 2, 1, 1, 1, 3, 1)) == seq("0110212224")
    with pytest.raises(DomainError):
        rle_compose((0, 1), (1,))
    with pytest.raises(DomainError):
        rle_compose((0, 0), (1, 1))
    with pytest.raises(DomainError):
        rle_compose((0, 1), (1, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_rle_round_trip(n):
    for x in enumerate_family("asc", n):
        p, c = rle_decompose(x)
        assert is_primitive(p)
        assert rle_compose(p, c) == x


def all_inversion(n):
    return product(*(range(i) for i in range(1, n + 1)))


@pytest.mark.parametrize("n", range(1, 10))
def test_linear_check_matches_naive(n):
    for e in all_inversion(n):
        assert avoids_weak_dec_triple(e) == avoids_weak_dec_triple_naive(e)


@pytest.mark.parametrize("n", range(1, 8))
def test_210_check_matches_naive(n):
    for x in enumerate_family("asc", n):
        assert is_210_avoiding(x) == is_210_avoiding_naive(x)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerators_match_predicates(n):
    inv = list(all_inversion(n))
    assert enumerate_family("inv", n) == inv
    assert enumerate_family("ggm", n) == [e for e in inv if avoids_weak_dec_triple_naive(e)]
    assert enumerate_family("aw", n) == [e for e in inv if is_aw(e)]
    for k in (1, 3):
        assert enumerate_family(f"kaw:{k}", n) == [e for e in inv if is_k_aw(e, k)]
    ascents = [x for x in product(range(n), repeat=n) if is_ascent_sequence(x)]
    assert enumerate_family("asc", n) == ascents
    assert enumerate_family("asc210", n) == [x for x in ascents if is_210_avoiding_naive(x)]


def test_counts():
    assert [count_family("ggm", n) for n in range(1, 9)] == list(E3)
    assert [count_family("asc210", n) for n in range(1, 9)] == list(C3)
    assert [count_family("aw", n) for n in range(1, 9)] == list(AW)
    for n in range(1, 9):
        assert count_family("pasc210", n + 1) == count_family("ggm", n)


def test_run_length_identity():
    for n in range(0, 9):
        want = sum(binomial(n, i) * count_family("pasc210", i + 1) for i in range(n + 1))
        assert count_family("asc210", n + 1) == want


def test_kaw_boundaries():
    for n in range(1, 11):
        assert count_family("kaw:1", n) == catalan(n)
    for n in range(2, 9):
        assert count_family(f"kaw:{n - 1}", n) == bell(n)


def test_phi_bijection():
    assert verify_phi(8).ok
    for n in range(1, 10):
        for x in enumerate_family("pasc210", n + 1):
            assert is_inversion_sequence(phi(x))


def test_parse_family():
    assert str(parse_family("kaw:3")) == "kaw:3"
    assert parse_family("all-inversion").name == "inv"
    assert parse_family("ascent").name == "asc"
    for bad in ("nope", "kaw", "kaw:0", "kaw:x"):
        with pytest.raises(DomainError):
            parse_family(bad)


def test_ceiling():
    with pytest.raises(ResourceLimitError):
        count_family("inv", 8, ceiling=100)
    assert count_family("inv", 5, ceiling=120) == 120
    with pytest.raises(DomainError):
        count_family("ggm", 0)


@pytest.mark.parametrize(
    "walker, extra",
    [
        (_kernels.walk_inversions, ()),
        (_kernels.walk_ggm, ()),
        (_kernels.walk_kaw, (2,)),
        (_kernels.walk_ascent, (True, False)),
        (_kernels.walk_ascent, (True, True)),
        (_kernels.walk_rgf, ()),
    ],
)
def test_jit_matches_python_kernel(walker, extra):
    for n in range(1, 7):
        fast = _kernels.run_walker(walker, n, *extra, ceiling=10**6)
        slow = _kernels.run_walker(_kernels.py_func(walker), n, *extra, ceiling=10**6)
        assert (fast == slow).all()
