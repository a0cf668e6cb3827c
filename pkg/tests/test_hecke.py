import pytest

from qrds.errors import NonTerminating, UnknownId
from qrds.hecke import HeckeBlock, HeckeBlockSet, eval_blocks, flip_j, hecke_catalog, hecke_ids
from qrds.series import first_mismatch


def brute_block_set(block_set, order):
    """Direct (n, j) double loop, sharing no code with the block evaluator.

    A + D >= 1, so min-exponent growth is at least quadratic in n once n
    dominates the linear terms; running n out to order + 64 is far past the
    point where any window can still reach the horizon.
    """
    acc = {}
    for b in block_set.blocks:
        for n in range(b.n0, order + 64):
            for j in range(-n + b.p, n + b.r + 1):
                e = b.A * n * n + b.B * n + b.C + b.D * j * j + b.E * j
                s = b.sign * (-1 if (b.sign_n * n + b.sign_j * j) % 2 else 1)
                if e <= order:
                    acc[e] = acc.get(e, 0) + s
                if b.factor is not None:
                    g, h = b.factor
                    e2 = e + g * n + h
                    if e2 <= order:
                        acc[e2] = acc.get(e2, 0) - s
    for c, e in block_set.constants:
        if e <= order:
            acc[e] = acc.get(e, 0) + c
    return {e: c for e, c in acc.items() if c}


# heads frozen from the brute-force loop above; they also agree with the
# direct summation engine (see test_verify) so any regression in either
# pathway trips this
SIGMA_HEAD = {0: 1, 1: 1, 2: -1, 3: 2, 4: -2, 5: 1, 7: 1, 8: -2, 10: 2, 12: -1, 13: -2, 14: 2, 15: 1}
L5_HEAD = {2: 2, 5: 2, 7: 2, 10: 2, 14: 4, 17: 2}


def test_sigma_head_and_brute_force():
    bs = hecke_catalog("SIGMA")
    f = eval_blocks(bs, 40)
    assert {e: c for e, c in f.items() if e <= 15} == SIGMA_HEAD
    assert dict(f.items()) == brute_block_set(bs, 40)


@pytest.mark.parametrize("sid", list(hecke_ids()))
def test_all_catalog_entries_match_brute_force(sid):
    bs = hecke_catalog(sid)
    f = eval_blocks(bs, 60)
    assert dict((e, c) for e, c in f.items() if e <= 60) == brute_block_set(bs, 60)
    assert f.order == 60


def test_l5_head():
    f = eval_blocks(hecke_catalog("L5"), 20)
    assert {e: c for e, c in f.items()} == L5_HEAD


def test_flip_j_is_a_symmetry():
    for sid in ("SIGMA", "L1", "L6", "L12"):
        bs = hecke_catalog(sid)
        flipped = HeckeBlockSet(tuple(flip_j(b) for b in bs.blocks), bs.constants)
        a = eval_blocks(bs, 80)
        b = eval_blocks(flipped, 80)
        assert first_mismatch(a, b, through=80) is None, sid


def test_catalog_lookup_case_insensitive_and_unknown():
    assert hecke_catalog("sigma") is hecke_catalog("SIGMA")
    with pytest.raises(UnknownId):
        hecke_catalog("L99")


def test_block_validation():
    with pytest.raises(ValueError):
        HeckeBlock(0, 0, 0, A=0, B=0, C=0, D=-1, E=0)
    with pytest.raises(ValueError):
        HeckeBlock(0, 0, 0, A=2, B=0, C=0, D=1, E=0)
    with pytest.raises(ValueError):
        HeckeBlock(0, 0, 0, A=1, B=0, C=0, D=-1, E=0)  # A + D = 0


def test_nonterminating_budget():
    # a deep dip (B very negative) keeps low-exponent terms appearing long
    # past any reasonable streak, overrunning the budget at a tiny horizon
    block = HeckeBlock(0, 0, 0, A=2, B=0, C=0, D=-1, E=0, factor=None)
    bad = HeckeBlock(n0=0, p=0, r=0, A=2, B=-200, C=0, D=-1, E=0)
    with pytest.raises(NonTerminating):
        eval_blocks(HeckeBlockSet((bad,)), 2)
    # the same block at a horizon past its dip terminates fine
    f = eval_blocks(HeckeBlockSet((block,)), 30)
    assert f.order == 30


def test_payload_schema():
    p = hecke_catalog("L1").to_payload()
    assert set(p) == {"blocks", "constants"}
    for b in p["blocks"]:
        assert set(b) == {"n0", "p", "r", "A", "B", "C", "D", "E", "sign", "sn", "sj", "factor"}
