import os
from typing import Callable, Sequence, Union

import numpy as np
import pytest

from libwmc.compiler import CompileConfig, compile
from libwmc.diagrams import Diagram, evaluation_mask
from libwmc.formula import MonotoneDNF
from libwmc.lineage import CompositeLineage
from libwmc.oracle import evaluation_mask as lineage_mask
from libwmc.variables import VarId


Lineage = Union[MonotoneDNF, CompositeLineage]


@pytest.fixture
def compile_fbdd() -> Callable[[Lineage], Diagram]:
    def compile_fbdd(psi: Lineage) -> Diagram:
        d, _ = compile(psi, CompileConfig(decompose=False))
        return d
    return compile_fbdd


@pytest.fixture
def computes() -> Callable[[Diagram, Lineage, Sequence[VarId], int], bool]:
    def computes(
            d: Diagram, psi: Lineage, variables: Sequence[VarId],
            output: int = 0) -> bool:
        variables = list(variables)
        actual = evaluation_mask(d, variables)[output]
        return bool(np.array_equal(actual, lineage_mask(psi, variables)))
    return computes


skip_unless_slow = pytest.mark.skipif(
        'WMCLAB_SLOW_TESTS' not in os.environ,
        reason='Slow tests not requested')
