"""Acceptance criteria 1-11.  Each test prints one ``criterion N: PASS|FAIL`` line."""

import pytest

from invseq.exactnum import bell, catalan
from invseq.gentree import (
    AW_RULE,
    GGM_RULE,
    aw_label,
    ggm_label,
    ggm_level_totals,
    label_distribution,
    level_profiles,
)
from invseq.partitions import count_crossing_avoiders
from invseq.recurrences import (
    E3_RECURRENCE,
    ENUMERATION_RECURRENCE,
    e_closed_form,
    extend,
    verify_c3_identity,
    verify_kimlin,
    verify_motzkin_identity,
    verify_operator_identity,
)
from invseq.sequences import count_family, enumerate_family, verify_phi
from invseq.series import (
    f_polys_aw,
    verify_aw_feq,
    verify_ggm_feq,
    verify_kernel_identity,
    verify_lagrange,
    verify_ode,
)

E3 = [1, 2, 5, 15, 51, 191, 772, 3320]
C3 = [1, 2, 5, 15, 52, 202, 859]
AW = [1, 2, 5, 15, 51, 191, 773, 3336]


def sequence_reproduction():
    yield "ggm brute 1..8", [count_family("ggm", n) for n in range(1, 9)] == E3
    yield "C_3 1..7", [count_crossing_avoiders(n, 3) for n in range(1, 8)] == C3
    yield "E_3 1..8", [count_crossing_avoiders(n, 3, enhanced=True) for n in range(1, 9)] == E3


def ascent_210():
    got = [count_family("asc210", n) for n in range(1, 9)]
    yield "A_n(210) = C_3(n), n <= 7", got[:7] == [count_crossing_avoiders(n, 3) for n in range(1, 8)]
    yield "A_8(210) = 3930", got[7] == 3930


def phi_bijection():
    yield "phi onto ggm, n <= 8", verify_phi(8).ok
    yield "cardinalities", all(
        count_family("pasc210", n + 1) == count_family("ggm", n) for n in range(1, 9)
    )


def generating_trees():
    ggm = level_profiles(GGM_RULE, 10)
    aw = level_profiles(AW_RULE, 10)
    yield "ggm totals n <= 10", [p.total for p in ggm] == [count_family("ggm", n) for n in range(1, 11)]
    yield "aw totals n <= 10", [p.total for p in aw] == [count_family("aw", n) for n in range(1, 11)]
    for rule, profiles, family, labeller in (("ggm", ggm, "ggm", ggm_label), ("aw", aw, "aw", aw_label)):
        yield f"{rule} labels n <= 8", all(
            label_distribution([labeller(e) for e in enumerate_family(family, n)])
            == profiles[n - 1].multiplicities
            for n in range(1, 9)
        )
    e3 = extend(E3_RECURRENCE, 200)
    yield "ggm tree to 200 = three-term recurrence", ggm_level_totals(200) == e3.window(1, 200)


def functional_equations():
    yield "ggm cleared equation, order 10", verify_ggm_feq(10).ok
    yield "aw cleared equation, order 10", verify_aw_feq(10).ok
    tree = [p.total for p in level_profiles(AW_RULE, 10)]
    polys = f_polys_aw(10)
    yield "f_n(1,1) = aw tree, n <= 10", [f.evaluate({"u": 1, "v": 1}) for f in polys] == tree


def kernel_identity():
    yield "pt_x R = E(1+x,1+x), order 10", verify_kernel_identity(10).ok


def lagrange():
    yield "Y^k coefficients, k <= 4, |m| <= 6, n <= 10", verify_lagrange(10, 4, 6).ok


def recurrence_coherence():
    three = extend(E3_RECURRENCE, 100)
    four = extend(ENUMERATION_RECURRENCE, 100)
    yield "three-term = four-term = closed form, n <= 100", all(
        three[n] == four[n] == e_closed_form(n) for n in range(1, 101)
    )
    yield "shift operator, symbolic and n <= 50", verify_operator_identity(50).ok


def binomial_identities():
    yield "E_3 -> C_3 transform (brute 7, recurrence 100)", verify_c3_identity(100, 7).ok
    yield "Motzkin -> Catalan, n <= 12", verify_motzkin_identity(12).ok
    yield "k = 4 identity, n <= 8", verify_kimlin(4, 8).ok


def odes():
    for which in ("E", "F", "C"):
        yield f"{which} ODE, order 30", verify_ode(which, 30).ok


def aw_families():
    yield "aw 1..8", [count_family("aw", n) for n in range(1, 9)] == AW
    yield "k=1 Catalan, n <= 10", all(count_family("kaw:1", n) == catalan(n) for n in range(1, 11))
    yield "k=n-1 Bell, n <= 8", all(count_family(f"kaw:{n - 1}", n) == bell(n) for n in range(2, 9))


CRITERIA = [
    (1, "sequence reproduction", sequence_reproduction),
    (2, "210-avoiding ascent sequences", ascent_210),
    (3, "phi bijection", phi_bijection),
    (4, "generating trees", generating_trees),
    (5, "functional equations", functional_equations),
    (6, "kernel identity", kernel_identity),
    (7, "Lagrange inversion", lagrange),
    (8, "recurrence coherence", recurrence_coherence),
    (9, "binomial-transform identities", binomial_identities),
    (10, "differential equations", odes),
    (11, "AW and k-AW counts", aw_families),
]


@pytest.mark.parametrize("number, title, parts", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, parts, capsys):
    results = list(parts())
    failed = [name for name, ok in results if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {number}: {status} {title}"
    if failed:
        line += " (failed: " + "; ".join(failed) + ")"
    with capsys.disabled():
        print("\n" + line)
    assert not failed, line
