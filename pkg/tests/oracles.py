"""Brute-force reference computations used only by the tests."""
import itertools
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

from hollab.chain_complex import ChainComplex
from hollab.homology_engine import AbelianInvariants, homology
from hollab.modular_linalg import IntegerMatrix

BAR_ORACLE_MAX_ORDER = 24
BAR_ORACLE_MAX_CELLS = 5_000


def _cells(nonidentity: Sequence[Hashable], n: int) -> List[Tuple]:
    return list(itertools.product(nonidentity, repeat=n))


def _bar_differential(cells_n: List[Tuple], cells_below: List[Tuple], multiply: Callable,
                      identity: Hashable) -> IntegerMatrix:
    """Normalized bar differential with trivial coefficients; cells containing 1 vanish."""
    index = {c: i for i, c in enumerate(cells_below)}
    columns = []
    for cell in cells_n:
        n = len(cell)
        column: Dict[int, int] = {}

        def add(face, sign):
            if identity in face:
                return
            column[index[face]] = column.get(index[face], 0) + sign

        add(cell[1:], 1)
        for i in range(n - 1):
            merged = multiply(cell[i], cell[i + 1])
            add(cell[:i] + (merged,) + cell[i + 2:], (-1) ** (i + 1))
        add(cell[:-1], (-1) ** n)
        columns.append(column)
    rows = [[col.get(r, 0) for col in columns] for r in range(len(cells_below))]
    return IntegerMatrix.from_rows(rows, len(cells_n))


def bar_homology(elements: Sequence[Hashable], multiply: Callable, identity: Hashable,
                 q: int) -> AbelianInvariants:
    """H_q(G; Z) from the normalized bar resolution, for small G."""
    if len(elements) > BAR_ORACLE_MAX_ORDER:
        raise ValueError("bar oracle is limited to |G| <= 24")
    nonidentity = [g for g in elements if g != identity]
    if len(nonidentity) ** (q + 1) > BAR_ORACLE_MAX_CELLS:
        raise ValueError("bar complex too large for the oracle")
    cells = {n: _cells(nonidentity, n) for n in range(max(q - 1, 0), q + 2)}
    ranks = {n: len(c) for n, c in cells.items()}
    diffs = {}
    for n in cells:
        if n >= 1 and n - 1 in cells:
            diffs[n] = _bar_differential(cells[n], cells[n - 1], multiply, identity)
    return homology(ChainComplex(ranks, diffs), q)
