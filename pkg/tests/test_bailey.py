"""Pair catalog: defining relation, iteration step, limit transforms."""

from fractions import Fraction

import pytest

from qrds.bailey import (
    RHO_INFINITY,
    RhoSpec,
    bailey_step,
    form_labels,
    limit_form,
    pair_catalog,
    pair_labels,
    verify_pair_relation,
)
from qrds.catalog import eval_named
from qrds.errors import (
    Beta0NotZero,
    FormPairMismatch,
    UnknownId,
    UnknownPair,
    UnsupportedRho,
)
from qrds.series import LaurentSeries

ALL_PAIRS = ("BK1", "BK2", "P1A", "P1B", "P2A", "P2B", "P3A", "P3B")


def items(f: LaurentSeries, through: int) -> list:
    return [
        (e, f.coefficient(e))
        for e in range(f.offset, through + 1)
        if f.coefficient(e)
    ]


def test_labels():
    assert pair_labels() == ALL_PAIRS
    assert set(form_labels()) == {"A1", "A1ALSO", "AQ", "AQALSO"}
    assert pair_catalog("p2a").label == "P2A"
    with pytest.raises(UnknownPair):
        pair_catalog("P9X")


def test_frozen_alpha_values():
    p2a = pair_catalog("P2A")
    assert items(p2a.alpha(0, 40), 10) == []
    assert items(p2a.alpha(1, 40), 10) == [(0, -1), (2, 1)]
    assert items(p2a.alpha(2, 40), 10) == [(-1, 1), (0, 1), (3, -1), (4, -1)]
    # a = q pairs carry a global 1/(1-q)
    p2b = pair_catalog("P2B")
    assert items(p2b.alpha(0, 8), 8) == [(e, 1) for e in range(9)]


def test_frozen_beta_values():
    p2a = pair_catalog("P2A")
    assert p2a.beta(0, 10).is_zero()
    assert items(p2a.beta(1, 8), 8) == [(e, -1) for e in range(9)]  # -1/(1-q)
    p2b = pair_catalog("P2B")
    assert items(p2b.beta(0, 8), 8) == [(e, 1) for e in range(9)]  # 1/(1-q)
    # 1/((1-q^2)(1-q^3)): partitions into parts 2 and 3
    bk1 = pair_catalog("BK1")
    assert items(bk1.beta(2, 7), 7) == [(0, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 2), (7, 1)]


def _apply_ratio(f: LaurentSeries, ratio, order: int) -> LaurentSeries:
    c, e, num, den = ratio
    g = f * LaurentSeries.monomial(c, e, None)
    for cc, ee in num:
        g = g.mul_binomial(cc, ee)
    for cc, ee in den:
        g = g.div_binomial(cc, ee, order=order)
    return g


@pytest.mark.parametrize("label", ALL_PAIRS)
def test_beta_ratio_matches_closed_form(label):
    pair = pair_catalog(label)
    order = 60
    for m in range(pair.beta_first, 11):
        stepped = _apply_ratio(pair.beta(m, order + 20), pair.beta_ratio(m), order)
        direct = pair.beta(m + 1, order)
        assert stepped.truncate(order) == direct.truncate(order), (label, m)


@pytest.mark.parametrize("label", ALL_PAIRS)
def test_pair_relation(label):
    assert verify_pair_relation(pair_catalog(label), n_max=10, order=80) == []


@pytest.mark.parametrize("label", ("P2A", "BK2", "P1B"))
def test_stepped_pair_relation(label):
    stepped = bailey_step(pair_catalog(label))
    assert verify_pair_relation(stepped, n_max=8, order=60) == []


def test_stepped_alpha_shift():
    # alpha'_n = a^n q^(n^2) alpha_n, here a = 1
    stepped = bailey_step(pair_catalog("P2A"))
    assert items(stepped.alpha(1, 40), 10) == [(1, -1), (3, 1)]


GENERIC_CASES = [
    ("P2A", RhoSpec("monomial", -1, 0), RHO_INFINITY),
    ("P2B", RhoSpec("monomial", -1, 1), RHO_INFINITY),
    ("BK1", RhoSpec("monomial", -1, 0), RhoSpec("monomial", -1, 1)),
    ("P1B", RhoSpec("monomial", -1, 0), RhoSpec("monomial", -1, 1)),
    ("P3B", RhoSpec("monomial", -1, 1), RhoSpec("monomial", -1, 1)),
]


@pytest.mark.parametrize("label,r1,r2", GENERIC_CASES)
def test_generic_step_relation(label, r1, r2):
    stepped = bailey_step(pair_catalog(label), r1, r2)
    assert verify_pair_relation(stepped, n_max=6, order=50) == []


def test_generic_matches_double_limit():
    # sending both parameters to infinity explicitly must agree with the
    # dedicated stepped-pair implementation
    full = bailey_step(pair_catalog("P2A"))
    generic = bailey_step(pair_catalog("P2A"), RHO_INFINITY, RHO_INFINITY)
    for m in range(4):
        assert generic.alpha(m, 40) == full.alpha(m, 40)
        assert generic.beta(m, 40).truncate(30) == full.beta(m, 40).truncate(30)


# ------------------------------------------------------------ limit forms

PIPELINES = {
    "L1": ("P2A", "A1", 1, 0),
    "L2": ("P2B", "AQ", 1, 0),
    "L3": ("P3A", "A1", 1, 0),
    "L4": ("P3B", "AQ", 1, -1),
    "L5": ("P1A", "A1ALSO", 1, 0),
    "L6": ("BK1", "A1ALSO", 1, 0),
    "L7": ("BK2", "AQALSO", 2, 0),
    "L8": ("P1B", "AQALSO", 2, -1),
    "L9": ("P2A", "A1ALSO", 1, 0),
    "L10": ("P3A", "A1ALSO", 1, 0),
    "L11": ("P2B", "AQALSO", 2, 0),
    "L12": ("P3B", "AQALSO", 2, -2),
}


@pytest.mark.parametrize("series_id", sorted(PIPELINES))
def test_pipeline_reproduces_catalog(series_id):
    pair_label, form_id, scale, const = PIPELINES[series_id]
    order = 100
    lhs, rhs = limit_form(bailey_step(pair_catalog(pair_label)), form_id, order)
    assert lhs == rhs, "transform identity"
    got = lhs.scale(scale)
    if const:
        got = got + LaurentSeries.monomial(const, 0, order)
    assert got == eval_named(series_id, order)


def test_form_pair_mismatch():
    with pytest.raises(FormPairMismatch):
        limit_form(bailey_step(pair_catalog("P2A")), "AQ", 20)
    with pytest.raises(FormPairMismatch):
        limit_form(bailey_step(pair_catalog("P2B")), "A1", 20)
    with pytest.raises(UnknownId):
        limit_form(bailey_step(pair_catalog("P2A")), "B9", 20)


class _NonzeroBeta0:
    label = "FIX"
    rel = "1"

    def beta(self, m, order):
        return LaurentSeries.one()


def test_beta0_must_vanish_for_shifted_forms():
    with pytest.raises(Beta0NotZero):
        limit_form(_NonzeroBeta0(), "A1", 20)


def test_rho_validation():
    with pytest.raises(ValueError):
        RhoSpec("finite")
    with pytest.raises(ValueError):
        RhoSpec("monomial", sign=2)
    with pytest.raises(ValueError):
        RhoSpec("monomial", sign=1, power=-1)


def test_unsupported_rho_combinations():
    # a = 1 and rho = q makes aq/rho degenerate to 1 with the wrong sign
    with pytest.raises(UnsupportedRho):
        bailey_step(pair_catalog("P2A"), RhoSpec("monomial", 1, 1), RHO_INFINITY)
    # both parameters at -q with a = 1 pushes the remaining base below q^0
    with pytest.raises(UnsupportedRho):
        bailey_step(
            pair_catalog("P2A"),
            RhoSpec("monomial", -1, 1),
            RhoSpec("monomial", -1, 1),
        )
