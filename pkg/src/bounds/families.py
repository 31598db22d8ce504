"""Closed-form sizes of known nonadditive d=2 code families."""

from math import comb

FAMILIES = ("rains", "smolin")


def odd_n_d2_bound(n: int) -> int:
    """floor(2^(n-2) (1 - 1/(n-1))), the LP bound for d=2 and odd n."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    return ((1 << (n - 2)) * (n - 2)) // (n - 1)


def rains_size(n: int) -> int:
    """((2a+1, 3 * 2^(2a-3), 2)) for a >= 2."""
    if n % 2 == 0 or n < 5:
        raise ValueError(f"No Rains code of length {n}: n must be odd and at least 5")
    alpha = (n - 1) // 2
    return 3 * (1 << (2 * alpha - 3))


def smolin_size(n: int) -> int:
    """((4a+2b+3, M_ab, 2)) with M_ab = sum_{i<=a} C(n, 2i+b), b in {0, 1}."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"No Smolin code of length {n}: n must be odd and at least 3")
    beta = ((n - 3) // 2) % 2
    alpha = (n - 3 - 2 * beta) // 4
    return sum(comb(n, 2 * i + beta) for i in range(alpha + 1))


def known_family_size(family: str, n: int) -> int:
    if family == "rains":
        return rains_size(n)
    if family == "smolin":
        return smolin_size(n)
    raise ValueError(f"Unknown family {family!r}, expected one of {FAMILIES}")
