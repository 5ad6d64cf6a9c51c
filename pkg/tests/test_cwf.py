import pytest

from sortsubst.cwf import (
    DERIVED_EQUATIONS, IApp, IComp, IEPS, IExt, IId, ILam, IPi0, IPi1, ISubApply, PRIMITIVE_EQUATIONS,
    equation_catalog, i_lift, i_suc, i_wk, i_zero, infer_isub, infer_itm, isub_size, itm_size,
)
from sortsubst.syntax import Arrow, ContractError, O


def test_inference_examples():
    assert infer_itm((O,), IPi1(IId((O,)))) == O
    assert infer_isub((), IEPS) == ()
    assert infer_isub((O,), IId((O, O))) is None
    assert infer_itm((), ILam(O, IPi1(IId((O,))))) == Arrow(O, O)
    assert infer_itm((O,), IApp(IPi1(IId((O,))), IPi1(IId((O,))))) is None
    assert infer_isub((O,), IPi0(IEPS)) is None


def test_composition_reads_right_to_left():
    # IComp(sigma, delta): delta goes first, out of the source
    delta = IPi0(IId((O, Arrow(O, O))))  # [o, o->o] => [o]
    sigma = IEPS
    assert infer_isub((O, Arrow(O, O)), IComp(sigma, delta)) == ()
    assert infer_isub((O, Arrow(O, O)), IComp(delta, sigma)) is None


def test_derived_forms():
    assert i_zero((O,)) == IPi1(IId((O,)))
    assert i_wk((O,)) == IPi0(IId((O,)))
    assert i_lift(IEPS, O, ()) == IExt(IComp(IEPS, IPi0(IId((O,)))), IPi1(IId((O,))))
    assert i_suc(i_zero((O,)), O, (O,)) == ISubApply(i_zero((O,)), i_wk((O, O)))
    with pytest.raises(ContractError):
        i_zero(())
    with pytest.raises(ContractError):
        i_wk(())


def test_sizes():
    assert itm_size(IPi1(IId((O,)))) == 2
    assert isub_size(IComp(IEPS, IPi0(IId(())))) == 4


def test_catalog():
    cat = equation_catalog()
    assert len(cat) == PRIMITIVE_EQUATIONS + DERIVED_EQUATIONS == 16
    assert len({eq.name for eq in cat}) == 16
    assert {eq.kind for eq in cat} == {"tm", "sub"}
