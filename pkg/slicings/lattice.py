"""
The lattice of torsion classes.

A torsion class is stored as a bitset over the indecomposables of a
:class:`~slicings.interval.CategoryContext`.  Closure under coproducts is
automatic for additive bitsets; closure under quotients and extensions is
checked on intervals and on middle terms of nonsplit extensions between
intervals.
"""
from dataclasses import (
    dataclass,
    field,
)
import functools
import logging
from typing import (
    Dict,
    FrozenSet,
    Iterator,
    List,
    Sequence,
    Tuple,
    Union,
)

from eth_utils import (
    to_tuple,
)
import networkx as nx

from slicings.constants import (
    MAX_QUIVER_VERTICES,
    SUBSET_SCAN_MAX_VERTICES,
)
from slicings.exceptions import (
    BrickLabelError,
    NotATorsionClass,
    QuiverSizeExceeded,
)
from slicings.interval import (
    CategoryContext,
    Interval,
    Module,
    ext_nonzero,
    hom_nonzero,
    module_in_members,
    nonsplit_middle,
)

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _quotient_masks(n: int) -> Tuple[int, ...]:
    ctx = CategoryContext(n)
    return tuple(
        ctx.bits_of(Interval(x.a, c) for c in range(x.a, x.b + 1))
        for x in ctx.indecomposables
    )


@functools.lru_cache(maxsize=None)
def _middle_masks(n: int) -> Tuple[Tuple[int, int, int], ...]:
    ctx = CategoryContext(n)
    return tuple(
        (ctx.bit(x), ctx.bit(y), ctx.bits_of(nonsplit_middle(x, y).summands))
        for x in ctx.indecomposables
        for y in ctx.indecomposables
        if ext_nonzero(x, y)
    )


def is_torsion_class(ctx: CategoryContext, bits: int) -> bool:
    """
    Whether the intervals in ``bits`` span a torsion class: every quotient of
    a member is a member, and every summand of the middle term of a nonsplit
    extension between members is a member.
    """
    quotient_masks = _quotient_masks(ctx.n)
    for position in range(len(ctx.indecomposables)):
        if bits >> position & 1 and quotient_masks[position] & ~bits:
            return False

    for x_bit, y_bit, middle in _middle_masks(ctx.n):
        if bits & x_bit and bits & y_bit and middle & ~bits:
            return False

    return True


def filt_closure(ctx: CategoryContext, bits: int) -> int:
    """
    The smallest torsion class containing the intervals in ``bits``.
    """
    quotient_masks = _quotient_masks(ctx.n)
    middle_masks = _middle_masks(ctx.n)

    while True:
        closed = bits
        for position, mask in enumerate(quotient_masks):
            if bits >> position & 1:
                closed |= mask
        for x_bit, y_bit, middle in middle_masks:
            if bits & x_bit and bits & y_bit:
                closed |= middle

        if closed == bits:
            return bits
        bits = closed


@functools.lru_cache(maxsize=None)
def _torsionfree_bits(n: int, members: int) -> int:
    ctx = CategoryContext(n)
    torsion = ctx.members(members)

    return ctx.bits_of(
        y for y in ctx.indecomposables
        if not any(hom_nonzero(x, y) for x in torsion)
    )


@dataclass(frozen=True)
class TorsionClass:
    """
    A torsion class of the category ``ctx``: the additive closure of the
    intervals whose bits are set in ``members``.  ``id`` is the position in
    the enclosing :class:`TorsLattice` (``-1`` when built standalone).
    """
    ctx: CategoryContext = field(repr=False)
    members: int
    id: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.members <= self.ctx.full_bits:
            raise NotATorsionClass('Bitset {} does not fit {} intervals'.format(
                self.members,
                len(self.ctx.indecomposables),
            ))

    def __contains__(self, item: Union[Interval, Module]) -> bool:
        if isinstance(item, Interval):
            item = Module.of(item)

        return self.contains(item)

    def __str__(self) -> str:
        return '{' + ','.join(str(x) for x in self.intervals) + '}'

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self.ctx.members(self.members)

    @property
    def size(self) -> int:
        return bin(self.members).count('1')

    @property
    def is_zero(self) -> bool:
        return self.members == 0

    @property
    def is_full(self) -> bool:
        return self.members == self.ctx.full_bits

    def contains(self, module: Module) -> bool:
        return module_in_members(self.ctx, self.members, module)

    def issubset(self, other: 'TorsionClass') -> bool:
        return self.members & ~other.members == 0

    def torsionfree_members(self) -> int:
        """
        Bits of the intervals ``Y`` with ``Hom(T, Y) = 0``.
        """
        return _torsionfree_bits(self.ctx.n, self.members)


def torsionfree_members(torsion_class: TorsionClass) -> int:
    return torsion_class.torsionfree_members()


def in_torsionfree(torsion_class: TorsionClass, module: Module) -> bool:
    """
    Whether ``Hom(X, Y) = 0`` for every member ``X`` of the class and every
    summand ``Y`` of ``module``.
    """
    return module_in_members(torsion_class.ctx, torsion_class.torsionfree_members(), module)


def heart_members(upper: TorsionClass, lower: TorsionClass) -> int:
    """
    Bits of the intervals in ``upper`` that lie in the torsionfree class of
    ``lower``.
    """
    return upper.members & lower.torsionfree_members()


def torsion_subobject(torsion_class: TorsionClass, module: Module) -> Tuple[Module, Module]:
    """
    Canonical sequence ``0 -> tM -> M -> fM -> 0``.  On a summand ``[a,b]``
    the torsion part is the largest submodule ``[c,b]`` lying in the class.
    """
    ctx = torsion_class.ctx
    torsion_parts = []
    free_parts = []
    for summand in module.summands:
        ctx.validate_interval(summand)
        cut = next(
            (c for c in range(summand.a, summand.b + 1)
             if torsion_class.members & ctx.bit(Interval(c, summand.b))),
            summand.b + 1,
        )
        if cut <= summand.b:
            torsion_parts.append(Interval(cut, summand.b))
        if cut > summand.a:
            free_parts.append(Interval(summand.a, cut - 1))

    return Module(torsion_parts), Module(free_parts)


@dataclass(frozen=True)
class HasseEdge:
    upper: int
    lower: int
    brick: Interval


class TorsLattice:
    """
    All torsion classes of a category, sorted by ``(size, bits)``, with the
    containment order and its covering relations.
    """
    def __init__(self, ctx: CategoryContext, bitsets: Sequence[int]):
        ordered = sorted(set(bitsets), key=lambda bits: (bin(bits).count('1'), bits))
        for bits in ordered:
            if not is_torsion_class(ctx, bits):
                raise NotATorsionClass('Bitset {} is not a torsion class'.format(bits))

        self.ctx = ctx
        self.classes = tuple(TorsionClass(ctx, bits, i) for i, bits in enumerate(ordered))
        self._ids: Dict[int, int] = {bits: i for i, bits in enumerate(ordered)}

        if 0 not in self._ids or ctx.full_bits not in self._ids:
            raise NotATorsionClass('A lattice of torsion classes must contain 0 and the category')

        self.top = self._ids[ctx.full_bits]
        self.bottom = self._ids[0]

        containment = nx.DiGraph()
        containment.add_nodes_from(range(len(self.classes)))
        containment.add_edges_from(
            (upper.id, lower.id)
            for upper in self.classes
            for lower in self.classes
            if upper.id != lower.id and lower.issubset(upper)
        )
        self.containment = containment
        self.hasse = nx.transitive_reduction(containment)

    def __repr__(self):  # pragma: no cover
        return '<TorsLattice n={} classes={}>'.format(self.ctx.n, len(self.classes))

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[TorsionClass]:
        return iter(self.classes)

    def __getitem__(self, class_id: int) -> TorsionClass:
        return self.classes[class_id]

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def full(self) -> TorsionClass:
        return self.classes[self.top]

    @property
    def zero(self) -> TorsionClass:
        return self.classes[self.bottom]

    def id_of(self, bits: int) -> int:
        try:
            return self._ids[bits]
        except KeyError:
            raise NotATorsionClass('Intervals {} do not form a torsion class'.format(
                ', '.join(str(x) for x in self.ctx.members(bits)) or '0',
            ))

    def leq(self, lower: int, upper: int) -> bool:
        return self.classes[lower].issubset(self.classes[upper])

    def is_cover(self, upper: int, lower: int) -> bool:
        return self.hasse.has_edge(upper, lower)

    def strictly_below(self, class_id: int) -> Tuple[int, ...]:
        return tuple(sorted(self.containment.successors(class_id)))

    @functools.cached_property
    def hasse_edges(self) -> Tuple[HasseEdge, ...]:
        return hasse_and_bricks(self)


@to_tuple
def _subset_scan(ctx: CategoryContext) -> Iterator[int]:
    for bits in range(ctx.full_bits + 1):
        if is_torsion_class(ctx, bits):
            yield bits


def _closure_walk(ctx: CategoryContext) -> FrozenSet[int]:
    # Every torsion class is reached from 0 by adding one generator at a time.
    seen = {0}
    frontier = [0]
    while frontier:
        bits = frontier.pop()
        for position in range(len(ctx.indecomposables)):
            if bits >> position & 1:
                continue
            closed = filt_closure(ctx, bits | 1 << position)
            if closed not in seen:
                seen.add(closed)
                frontier.append(closed)

    return frozenset(seen)


def closure_image_oracle(ctx: CategoryContext) -> FrozenSet[int]:
    """
    ``{filt_closure(S)}`` over all sets ``S`` of intervals, computed without
    :func:`is_torsion_class`.  Up to four vertices every subset is closed; past
    that the closures are reached generator by generator.
    """
    if ctx.n > SUBSET_SCAN_MAX_VERTICES:
        return _closure_walk(ctx)

    return frozenset(filt_closure(ctx, bits) for bits in range(ctx.full_bits + 1))


def enumerate_torsion_classes(ctx: CategoryContext,
                              max_vertices: int = MAX_QUIVER_VERTICES) -> TorsLattice:
    if ctx.n > max_vertices:
        raise QuiverSizeExceeded(
            'Refusing to enumerate torsion classes for {} vertices (bound {})'.format(
                ctx.n,
                max_vertices,
            )
        )

    if ctx.n <= SUBSET_SCAN_MAX_VERTICES:
        bitsets = _subset_scan(ctx)
    else:
        bitsets = tuple(_closure_walk(ctx))

    logger.debug('Found %d torsion classes for n=%d', len(bitsets), ctx.n)

    return TorsLattice(ctx, bitsets)


@functools.lru_cache(maxsize=None)
def lattice_for(n: int) -> TorsLattice:
    return enumerate_torsion_classes(CategoryContext(n))


@to_tuple
def hasse_and_bricks(lattice: TorsLattice) -> Iterator[HasseEdge]:
    """
    Covering relations ``upper > lower`` each labeled with the unique interval
    ``B`` of ``upper`` outside ``lower`` such that ``B`` is torsionfree for
    ``lower`` and ``lower`` together with ``B`` generates ``upper``.
    """
    ctx = lattice.ctx
    for upper_id, lower_id in sorted(lattice.hasse.edges()):
        upper = lattice[upper_id]
        lower = lattice[lower_id]
        bricks = [
            interval
            for interval in ctx.members(upper.members & ~lower.members)
            if filt_closure(ctx, lower.members | ctx.bit(interval)) == upper.members
            and in_torsionfree(lower, Module.of(interval))
        ]
        if len(bricks) != 1:
            raise BrickLabelError(
                'Cover {} > {} carries {} brick labels: {}'.format(
                    upper,
                    lower,
                    len(bricks),
                    ', '.join(str(b) for b in bricks),
                )
            )

        yield HasseEdge(upper_id, lower_id, bricks[0])


def maximal_green_sequences(lattice: TorsLattice) -> List[Tuple[int, ...]]:
    """
    Maximal chains of covering relations from the whole category down to 0,
    longest first.
    """
    paths = nx.all_simple_paths(lattice.hasse, lattice.top, lattice.bottom)
    if lattice.top == lattice.bottom:  # pragma: no cover
        return [(lattice.top,)]

    return sorted((tuple(path) for path in paths), key=lambda path: (-len(path), path))


def maximal_chain_count(lattice: TorsLattice) -> int:
    """
    Number of maximal chains, counted by dynamic programming over the
    covering relations rather than by walking them.
    """
    @functools.lru_cache(maxsize=None)
    def count(class_id: int) -> int:
        if class_id == lattice.bottom:
            return 1
        return sum(count(lower) for lower in lattice.hasse.successors(class_id))

    return count(lattice.top)
