"""Kummer's two quadratic transformations for the quadric 2F1 family."""

from numerics.complex_ops import cpow
from hypergeometric.series import hyp2f1


def kummer_first(beta1: float, beta2: float, Lam: complex) -> tuple[complex, complex]:
    """2F1(α, β2; β1+1/2; ((1-Λ)/(1+Λ))²) against ((1+Λ)/2)^(2α)·2F1(α, β1; 2β1; 1-Λ²)."""
    Lam = complex(Lam)
    alpha = beta1 + beta2 - 0.5
    lhs = hyp2f1(alpha, beta2, beta1 + 0.5, ((1 - Lam) / (1 + Lam)) ** 2)
    rhs = cpow((1 + Lam) / 2, 2 * alpha) * hyp2f1(alpha, beta1, 2 * beta1, 1 - Lam ** 2)
    return lhs, rhs


def kummer_second(beta1: float, beta2: float, Lam: complex) -> tuple[complex, complex]:
    """2F1(α, β2; 2β2; 1-((1+Λ)/(1-Λ))²) against (1-Λ)^(2α)·2F1(α, β1; β2+1/2; Λ²)."""
    Lam = complex(Lam)
    alpha = beta1 + beta2 - 0.5
    lhs = hyp2f1(alpha, beta2, 2 * beta2, 1 - ((1 + Lam) / (1 - Lam)) ** 2)
    rhs = cpow(1 - Lam, 2 * alpha) * hyp2f1(alpha, beta1, beta2 + 0.5, Lam ** 2)
    return lhs, rhs


def kummer_quadratic_pair(beta1: float, beta2: float, Lam: complex) -> tuple[complex, complex, complex, complex]:
    """
    Both sides of the two quadratic identities, in Λ for each.

    The first identity relates 2F1(α, β2; β1+1/2; ((1-Λ)/(1+Λ))²) to
    ((1+Λ)/2)^(2α)·2F1(α, β1; 2β1; 1-Λ²); the second relates
    2F1(α, β2; 2β2; 1-((1+Λ)/(1-Λ))²) to (1-Λ)^(2α)·2F1(α, β1; β2+1/2; Λ²),
    with α = β1 + β2 - 1/2.

    Returns
    -------
    (lhs1, rhs1, lhs2, rhs2)
    """
    return kummer_first(beta1, beta2, Lam) + kummer_second(beta1, beta2, Lam)
