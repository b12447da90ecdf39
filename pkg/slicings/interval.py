"""
Combinatorics of the category of finite dimensional representations of the
linearly oriented quiver ``1 -> 2 -> ... -> n``.

Every indecomposable is an interval module ``[a,b]`` with ``1 <= a <= b <= n``
(one-dimensional at the vertices ``a..b``, identity maps in between).  With
this orientation the submodules of ``[a,b]`` are the intervals ``[c,b]`` and
its quotients are the intervals ``[a,c]``.
"""
from dataclasses import (
    dataclass,
    field,
)
import functools
import itertools
from typing import (
    Dict,
    Iterable,
    Iterator,
    Tuple,
)

from eth_utils import (
    to_tuple,
)
from eth_utils.toolz import (
    frequencies,
)

from slicings.exceptions import (
    IntervalError,
    NoNonsplitExtension,
)


@dataclass(frozen=True, order=True)
class Interval:
    """
    The interval module supported on the vertices ``a..b``.
    """
    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise IntervalError(
                'Interval endpoints must be integers: got {!r}, {!r}'.format(self.a, self.b)
            )
        if not 1 <= self.a <= self.b:
            raise IntervalError(
                'Interval [{},{}] must satisfy 1 <= a <= b'.format(self.a, self.b)
            )

    def __str__(self) -> str:
        return '[{},{}]'.format(self.a, self.b)

    @property
    def dim(self) -> int:
        return self.b - self.a + 1

    def dimension_vector(self, n: int) -> Tuple[int, ...]:
        return tuple(int(self.a <= i <= self.b) for i in range(1, n + 1))


@dataclass(frozen=True, order=True)
class Module:
    """
    A module given by its Krull-Schmidt decomposition: a sorted tuple of
    interval summands, repeated according to multiplicity.  The empty tuple
    is the zero module.
    """
    summands: Tuple[Interval, ...] = field(default=())

    def __post_init__(self) -> None:
        summands = tuple(self.summands)
        for summand in summands:
            if not isinstance(summand, Interval):
                raise IntervalError('Module summands must be intervals: got {!r}'.format(summand))

        object.__setattr__(self, 'summands', tuple(sorted(summands)))

    @classmethod
    def of(cls, *intervals: Interval) -> 'Module':
        return cls(intervals)

    def __str__(self) -> str:
        if self.is_zero:
            return '0'

        return '+'.join(
            str(interval) if k == 1 else '{}*{}'.format(interval, k)
            for interval, k in self.multiplicities()
        )

    def __add__(self, other: 'Module') -> 'Module':
        if not isinstance(other, Module):
            return NotImplemented

        return Module(self.summands + other.summands)

    @property
    def is_zero(self) -> bool:
        return len(self.summands) == 0

    @property
    def dim(self) -> int:
        return sum(summand.dim for summand in self.summands)

    def dimension_vector(self, n: int) -> Tuple[int, ...]:
        vector = [0] * n
        for summand in self.summands:
            for i in range(summand.a, summand.b + 1):
                vector[i - 1] += 1

        return tuple(vector)

    def multiplicities(self) -> Tuple[Tuple[Interval, int], ...]:
        counts = frequencies(self.summands)

        return tuple(sorted(counts.items()))

    def distinct_summands(self) -> Tuple[Interval, ...]:
        return tuple(interval for interval, _ in self.multiplicities())


ZERO_MODULE = Module()


@dataclass(frozen=True)
class CategoryContext:
    """
    The ambient category of representations of the linear quiver on ``n``
    vertices.  Indecomposables are indexed lexicographically; that index is
    the bit position used by every bitset in the package.
    """
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise IntervalError('Number of vertices must be a positive integer: got {!r}'.format(
                self.n,
            ))

    @property
    def indecomposables(self) -> Tuple[Interval, ...]:
        return _indecomposables(self.n)

    @property
    def full_bits(self) -> int:
        return (1 << len(self.indecomposables)) - 1

    def bit(self, interval: Interval) -> int:
        self.validate_interval(interval)

        return 1 << _positions(self.n)[interval]

    def position(self, interval: Interval) -> int:
        self.validate_interval(interval)

        return _positions(self.n)[interval]

    def bits_of(self, intervals: Iterable[Interval]) -> int:
        bits = 0
        for interval in intervals:
            bits |= self.bit(interval)

        return bits

    @to_tuple
    def members(self, bits: int) -> Iterable[Interval]:
        for position, interval in enumerate(self.indecomposables):
            if bits >> position & 1:
                yield interval

    def validate_interval(self, interval: Interval) -> None:
        if interval.b > self.n:
            raise IntervalError('Interval {} does not fit a quiver with {} vertices'.format(
                interval,
                self.n,
            ))

    def validate_module(self, module: Module) -> None:
        for summand in module.distinct_summands():
            self.validate_interval(summand)


@functools.lru_cache(maxsize=None)
def _indecomposables(n: int) -> Tuple[Interval, ...]:
    return tuple(Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1))


@functools.lru_cache(maxsize=None)
def _positions(n: int) -> Dict[Interval, int]:
    return {interval: i for i, interval in enumerate(_indecomposables(n))}


def indecomposables(ctx: CategoryContext) -> Tuple[Interval, ...]:
    """
    All intervals ``[a,b]`` with ``1 <= a <= b <= n`` in lexicographic order.
    """
    return ctx.indecomposables


def hom_nonzero(x: Interval, y: Interval) -> bool:
    """
    ``Hom([a,b], [c,d]) != 0`` iff ``c <= a <= d <= b``.  The image of a
    nonzero map is ``[a,d]``, a quotient of the source and a submodule of the
    target.
    """
    return y.a <= x.a <= y.b <= x.b


def ext_nonzero(x: Interval, y: Interval) -> bool:
    """
    ``Ext^1([x,y], [u,v]) != 0`` iff ``x < u <= y + 1 <= v``.
    """
    return x.a < y.a <= x.b + 1 <= y.b


def nonsplit_middle(x: Interval, y: Interval) -> Module:
    """
    Middle term ``E`` of the nonsplit sequence ``0 -> y -> E -> x -> 0``.
    """
    if not ext_nonzero(x, y):
        raise NoNonsplitExtension('Ext^1({}, {}) vanishes'.format(x, y))

    summands = [Interval(x.a, y.b)]
    if y.a <= x.b:
        summands.append(Interval(y.a, x.b))

    return Module(summands)


def indec_subquotients(x: Interval) -> Tuple[Tuple[Module, ...], Tuple[Module, ...]]:
    """
    Submodules and quotients of an interval, both including the zero module.
    Submodules are listed from largest to smallest, quotients from largest to
    smallest; each list is a chain under inclusion.
    """
    subobjects = tuple(Module.of(Interval(c, x.b)) for c in range(x.a, x.b + 1))
    quotients = tuple(Module.of(Interval(x.a, c)) for c in range(x.b, x.a - 1, -1))

    return subobjects + (ZERO_MODULE,), quotients + (ZERO_MODULE,)


def iter_modules(ctx: CategoryContext, max_dim: int) -> Iterator[Module]:
    """
    Every nonzero module of total dimension at most ``max_dim``, ordered by
    total dimension then by summands.
    """
    return iter(_modules_up_to(ctx.n, max_dim))


@functools.lru_cache(maxsize=None)
def _modules_up_to(n: int, max_dim: int) -> Tuple[Module, ...]:
    intervals = _indecomposables(n)
    found = []

    def extend(start: int, chosen: Tuple[Interval, ...], dim: int) -> None:
        if chosen:
            found.append(Module(chosen))
        for i in range(start, len(intervals)):
            interval = intervals[i]
            if dim + interval.dim <= max_dim:
                extend(i, chosen + (interval,), dim + interval.dim)

    extend(0, (), 0)

    return tuple(sorted(found, key=lambda module: (module.dim, module.summands)))


def filt_contains(ctx: CategoryContext, members: int, x: Interval) -> bool:
    """
    Whether ``x`` lies in the extension closure of the additive category
    generated by the intervals in ``members``.

    Every submodule of an interval is an interval, so a filtration of ``x``
    cuts it into consecutive intervals; ``x`` is in the closure iff such a cut
    with all pieces in ``members`` exists.
    """
    reachable = {x.a}
    for start in range(x.a, x.b + 1):
        if start not in reachable:
            continue
        for stop in range(start, x.b + 1):
            if members & ctx.bit(Interval(start, stop)):
                reachable.add(stop + 1)

    return x.b + 1 in reachable


def module_in_members(ctx: CategoryContext, members: int, module: Module) -> bool:
    """
    Whether every summand of ``module`` is one of the intervals in
    ``members``.
    """
    return all(members & ctx.bit(summand) for summand in module.distinct_summands())


def pairs(ctx: CategoryContext) -> Iterator[Tuple[Interval, Interval]]:
    return itertools.product(ctx.indecomposables, repeat=2)
