from fractions import (
    Fraction,
)
from typing import (
    Iterable,
    Tuple,
)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def format_rational(value: Fraction) -> str:
    """
    Exact ``"p/q"`` rendering; integers render without a denominator.
    """
    return str(Fraction(value))


def compactify(slope: Fraction) -> Fraction:
    """
    Order isomorphism from the rationals onto ``(0, 1)``:
    ``x -> 1/2 + x / (2 * (1 + |x|))``.
    """
    slope = Fraction(slope)

    return HALF + slope / (2 * (1 + abs(slope)))


def merged_partition(*breakpoint_lists: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    """
    Sorted union of the given breakpoints with the endpoints ``0`` and ``1``.
    """
    points = {ZERO, ONE}
    for breakpoints in breakpoint_lists:
        points.update(breakpoints)

    return tuple(sorted(points))


def sample_points(*breakpoint_lists: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    """
    The merged partition together with the midpoint of every gap.  Step
    functions constant on the open gaps agree everywhere iff they agree on
    these points.
    """
    partition = merged_partition(*breakpoint_lists)
    midpoints = tuple((lo + hi) / 2 for lo, hi in zip(partition, partition[1:]))

    return tuple(sorted(partition + midpoints))
