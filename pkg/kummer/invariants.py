"""Numerical invariants of the generalized Kummer surface S_0 of rank r."""

import logging

from models.surfaces import SurfaceInvariants

logger = logging.getLogger(__name__)


def surface_invariants(r: int) -> SurfaceInvariants:
    """
    Invariants of S_0 built from two curves of signature rank r.

    Parameters
    ----------
    r : positive integer; r = 1 is the classical Kummer K3 surface

    Returns
    -------
    SurfaceInvariants satisfying the Noether, signature, χ and Hodge symmetry relations
    """
    if r < 1:
        raise ValueError(f"Rank r must be positive, got {r}")
    s = (r - 1) ** 2
    inv = SurfaceInvariants(K2=16 * s, euler=24 + 8 * s, chi=2 + 2 * s, tau=-16,
                            irregularity=4 * (r - 1), pg=1 + 2 * (r * r - 1), h11=20 + 2 * (r * r - 1))
    failed = [name for name, ok in inv.consistency().items() if not ok]
    if failed:
        logger.error(f"Invariants for r={r} break {', '.join(failed)}")
    return inv


def hodge_diamond(r: int) -> list[list[int]]:
    """Rows (h^{0,0}, h^{0,1}, h^{0,2}), (h^{1,0}, h^{1,1}, h^{1,2}), (h^{2,0}, h^{2,1}, h^{2,2})."""
    return surface_invariants(r).diamond()
