"""
Published reference values for zeros of F_0(eta, rho).

Values are kept as printed strings so the number of quoted decimals is known.
"""

# Abramowitz (1948), "Asymptotic expansions of Coulomb wave functions",
# Quart. Appl. Math. 7, table of zeros of F_0; entries for n = 2, 3.
ABRAMOWITZ_1948: dict[tuple[float, int], str] = {
    (1.5, 2): "10.974",
    (1.5, 3): "14.567",
    (2.0, 2): "12.403",
    (2.0, 3): "16.110",
    (2.5, 2): "13.786",
    (2.5, 3): "17.596",
    (3.0, 2): "15.130",
    (3.0, 3): "19.033",
}


def decimals(printed: str) -> int:
    """Number of digits after the decimal point of a printed value."""
    return len(printed.split(".", 1)[1]) if "." in printed else 0
