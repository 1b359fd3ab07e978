"""Values transcribed by hand from the source text, kept apart from any computation."""

from __future__ import annotations

# centralizer root systems: (vertex, m, subcase) -> (generators of I with e0* last, Weyl type)
CENTRALIZER_TABLE = {
    ("4+", 2, 0): (["e1* + e3* - e0*", "e2* + e4* - e0*"], "A1^2"),
    ("0+", 2, 0): (["e1* - e5*", "e3* + e5* - e0*", "e2* - e6*", "e4* + e6* - e0*"], "A2^2"),
    ("2+", 1, 0): (["e1* + e2* - e0*"], "A1"),
    ("0+", 1, 0): (["e1* - e3*", "e2* + e3* - e0*"], "A2"),
    ("2-", 1, 0): (["e1* + e2* - e0*"], "A1"),
    ("4-", 1, 0): (["e1* - e3*", "e2* + e3* - e0*"], "A2"),
    ("1†", 2, 0): (["e1* + e3* - e0*", "e2* + e4* - e0*"], "A1^2"),
    ("5†", 2, 0): (["e1* - e5*", "e3* + e5* - e0*", "e2* - e6*", "e4* + e6* - e0*"], "A2^2"),
    ("0‡", 1, 1): (["e1* - e3*", "e2* + e3* - e0*"], "A2"),
    ("2‡", 1, 1): (["e1* + e2* - e0*"], "A1"),
    ("0‡", 1, 2): (["e1* + e2* - e0*"], "A1"),
    ("2‡", 1, 2): (["e1* - e4*", "e2* + e4* - e0*"], "A2"),
}

# Hecke parameters as powers of q: (vertex, m, subcase) -> exponent
PARAMETER_EXPONENT = {
    ("4+", 2, 0): 2, ("1†", 2, 0): 2,
    ("0+", 2, 0): 6, ("5†", 2, 0): 6,
    ("2+", 1, 0): 1, ("2-", 1, 0): 1, ("2‡", 1, 1): 1, ("0‡", 1, 2): 1,
    ("0+", 1, 0): 3, ("4-", 1, 0): 3, ("0‡", 1, 1): 3, ("2‡", 1, 2): 3,
}

ROOT_COUNT = {"A1": 2, "A1^2": 4, "A2": 6, "A2^2": 12}

# Plancherel point masses, exactly as displayed
def displayed_masses(q1, q2):
    return ((1 - 1 / (q1 * q2)) / ((1 + 1 / q1) * (1 + 1 / q2)),
            (1 - q1 / q2) / ((1 + q1) * (1 + 1 / q2)))


def glued_spin_simple_data(m: int, n: int, letter: str, even_shift: str | None):
    """Displayed simple roots / coroots of the two quotient groups.

    ``letter`` is ``e`` or ``E``; ``even_shift`` is the character subtracted
    from the last even-type root (``None`` or ``E-1``).  The even chain
    ends in ``e_{m-1} - e_m`` (the display prints ``e_n`` there).
    """
    roots, coroots = [], []
    x = lambda i: f"{letter}{i}"  # noqa: E731
    for i in range(1, m):
        roots.append(f"{x(i)} - {x(i + 1)}")
        coroots.append(f"{x(i)}* - {x(i + 1)}*")
    if m >= 2:
        tail = f" - {even_shift}" if even_shift else ""
        roots.append(f"{x(m - 1)} + {x(m)}{tail}")
        coroots.append(f"{x(m - 1)}* + {x(m)}* - {x(0)}*")
    for i in range(m + 1, m + n):
        roots.append(f"{x(i)} - {x(i + 1)}")
        coroots.append(f"{x(i)}* - {x(i + 1)}*")
    roots.append(x(m + n))
    coroots.append(f"2{x(m + n)}* - {x(0)}*")
    return roots, coroots
