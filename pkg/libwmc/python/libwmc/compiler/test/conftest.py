import pytest

from libwmc.formula import MonotoneDNF
from libwmc.lineage import CombinatorFn, CompositeLineage, f_w, ground_query
from libwmc.variables import VarId


X, Y, Z, W = (VarId.free(name) for name in 'XYZW')


@pytest.fixture
def lineages():
    xor = CombinatorFn.from_hex(2, '6')
    return [
            MonotoneDNF([[X, Y], [Y, Z], [W]]),
            MonotoneDNF([[X, Y], [Z, W]]),
            MonotoneDNF.true(),
            MonotoneDNF.false(),
            CompositeLineage(xor, [MonotoneDNF([[X], [Y]]), MonotoneDNF([[Z, W]])]),
            ground_query(f_w(), 3, 2),
            ground_query(CombinatorFn.or_of(2), 1, 2)]
