from fractions import (
    Fraction,
)
from typing import (
    Sequence,
    Tuple,
    Union,
)

from slicings.chains import (
    Chain,
)
from slicings.grammar import (
    parse_module,
    parse_rational,
)
from slicings.interval import (
    Interval,
    Module,
)
from slicings.lattice import (
    lattice_for,
)

ClassSpec = Union[str, Tuple[str, ...]]


def interval(text: str) -> Interval:
    (summand,) = parse_module(text).summands
    return summand


def module(text: str) -> Module:
    return parse_module(text)


def class_id(n: int, spec: ClassSpec) -> int:
    """
    Id of a torsion class given as ``'A'`` (whole category), ``'0'`` or a
    tuple of interval strings such as ``('[1,1]', '[1,2]')``.
    """
    lattice = lattice_for(n)
    if spec == 'A':
        return lattice.top
    if spec == '0':
        return lattice.bottom

    ctx = lattice.ctx
    return lattice.id_of(ctx.bits_of(interval(text) for text in spec))


def make_chain(n: int, classes: Sequence[ClassSpec], breakpoints: Sequence[str]) -> Chain:
    """
    Builds a chain from class specs (see :func:`class_id`) and breakpoint
    strings such as ``"1/3"``.
    """
    lattice = lattice_for(n)
    return Chain(
        lattice,
        tuple(class_id(n, spec) for spec in classes),
        tuple(parse_rational(x) for x in breakpoints),
    )


S1 = ('[1,1]',)
S2 = ('[2,2]',)
P1 = ('[1,1]', '[1,2]')

# Torsion classes of the quiver 1 -> 2 as bitsets over [1,1], [1,2], [2,2]
N2_CLASS_BITS = (0b000, 0b001, 0b100, 0b011, 0b111)

# The chain ([A, {S2}, 0], (1/3, 2/3)) and its neighbours
TWO_STEP = make_chain(2, ['A', S2, '0'], ['1/3', '2/3'])
TWO_STEP_SHIFTED = make_chain(2, ['A', S2, '0'], ['1/2', '3/4'])
TWO_STEP_SPLIT = make_chain(2, ['A', P1, '0'], ['1/3', '2/3'])

ETA_PLUS_THETA = make_chain(2, ['A', P1, S1, '0'], ['1/4', '1/2', '3/4'])

ONE_SLICE = make_chain(2, ['A', '0'], ['1/2'])

# (module, [(subobject, phase, factor), ...]) for TWO_STEP
TWO_STEP_HN = (
    ('[1,2]', (('[2,2]', '2/3', '[2,2]'), ('[1,2]', '1/3', '[1,1]'))),
    ('[2,2]', (('[2,2]', '2/3', '[2,2]'),)),
    ('[1,1]', (('[1,1]', '1/3', '[1,1]'),)),
    ('[1,1]+[2,2]', (('[2,2]', '2/3', '[2,2]'), ('[1,1]+[2,2]', '1/3', '[1,1]'))),
)

# (module, mho, omega) for TWO_STEP
TWO_STEP_MHO_OMEGA = (
    ('[1,2]', '1/3', '2/3'),
    ('[2,2]', '2/3', '2/3'),
    ('[1,1]', '1/3', '1/3'),
    ('[1,1]+[2,2]', '1/3', '2/3'),
)

# Catalan numbers
TORSION_CLASS_COUNTS = ((1, 2), (2, 5), (3, 14), (4, 42))


def fractions(*texts: str) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(text) for text in texts)
