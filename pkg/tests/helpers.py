def close(got: complex, expected, tol: float) -> bool:
    """Relative closeness for |expected| >= 1, absolute otherwise."""
    expected = complex(expected)
    return abs(complex(got) - expected) <= tol * max(1.0, abs(expected))
