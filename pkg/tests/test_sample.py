import random

from sortsubst.cwf import infer_isub, infer_itm
from sortsubst.laws.sample import (
    SampleConfig, rank, random_context, random_isub, random_itm, random_sub, random_term, random_type,
    smallest_term,
)
from sortsubst.syntax import Arrow, O, T, V, check_sub, infer_expr


def test_rank_and_witness():
    assert rank((), O) is None
    assert rank((), Arrow(O, O)) == 0
    assert rank((Arrow(O, O), O), O) == 0
    assert rank((Arrow(O, O),), O) is None
    f = Arrow(Arrow(O, O), O)
    assert rank((f,), O) == 1
    assert infer_expr((f,), smallest_term((f,), O)) == O


def test_generated_values_are_well_typed():
    cfg = SampleConfig()
    rng = random.Random(0)
    hits = 0
    for _ in range(300):
        ctx = random_context(rng, cfg)
        a = random_type(rng, 2)
        t = random_term(rng, ctx, a, 30)
        assert (t is None) == (rank(ctx, a) is None)
        if t is None:
            continue
        hits += 1
        assert infer_expr(ctx, t) == a
        assert infer_itm(ctx, random_itm(rng, ctx, a, cfg)) == a
        tgt = random_context(rng, cfg)
        for q in (V, T):
            xs = random_sub(rng, ctx, tgt, q, 6)
            if xs is not None:
                assert check_sub(ctx, xs, tgt)
        s = random_isub(rng, ctx, tgt, cfg)
        if s is not None:
            assert infer_isub(ctx, s) == tgt
    assert hits > 100


def test_seeded():
    cfg = SampleConfig()
    a = random_itm(random.Random("k"), (O, Arrow(O, O)), O, cfg)
    b = random_itm(random.Random("k"), (O, Arrow(O, O)), O, cfg)
    assert a == b
