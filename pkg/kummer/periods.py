"""Periods of the product two-form dζ1/η1 ⊠ dζ2/η2 over products of curve cycles."""

import logging
from typing import Literal

from models.curves import CurveSignature
from models.surfaces import ModuliPoint
from superelliptic.periods import period_closed

logger = logging.getLogger(__name__)

Which = Literal[1, 2, 3, 4]

# (cycle on the first curve, cycle on the second curve)
CYCLE_PAIRS: dict[int, tuple[str, str]] = {1: ('A', 'A'), 2: ('A', 'B'), 3: ('B', 'A'), 4: ('B', 'B')}


def kummer_period(sig: CurveSignature, mp: ModuliPoint, k: int, l: int, which: Which) -> complex:
    """
    Period over the product of cycles on SE(Λ1²)_{r,p,q} and SE(Λ2²)_{r,2r-p,2r-q}.

    Parameters
    ----------
    sig : signature of the first curve; the second carries the swapped signature
    mp : moduli point
    k, l : cycle indices on the two curves, 1 <= k, l <= r-1
    which : 1..4 for the cycle pairs (a,a), (a,b), (b,a), (b,b)
    """
    if not (1 <= k <= sig.r - 1 and 1 <= l <= sig.r - 1):
        raise ValueError(f"Cycle indices ({k}, {l}) outside 1..{sig.r - 1}")
    if which not in CYCLE_PAIRS:
        raise ValueError(f"Cycle pair must be 1..4, got {which}")
    first, second = CYCLE_PAIRS[which]
    lam1, lam2 = mp.lambdas
    return period_closed(sig, first, k, lam1) * period_closed(sig.swapped(), second, l, lam2)


def quadratic_relation_residual(sig: CurveSignature, mp: ModuliPoint, k: int = 1, l: int = 1) -> float:
    """|Π_aa Π_bb - Π_ab Π_ba| relative to |Π_aa Π_bb|."""
    w = {n: kummer_period(sig, mp, k, l, n) for n in CYCLE_PAIRS}
    scale = abs(w[1] * w[4]) or 1.0
    return abs(w[1] * w[4] - w[2] * w[3]) / scale
