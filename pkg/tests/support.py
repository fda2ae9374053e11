"""Shared helpers for the test suite."""

from fractions import Fraction


def macmahon_boxes(a: int, b: int, c: int) -> int:
    """Count of lozenge tilings of an a x b x c hexagon, computed as the
    classical triple product over plane partitions in a box."""
    total = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                total *= Fraction(i + j + k - 1, i + j + k - 2)
    assert total.denominator == 1
    return int(total)
