"""
Chains of torsion classes indexed by ``[0, 1]``.

A chain is stored as a finite step function: classes ``X_0 = A > X_1 > ...
> X_m = 0`` and breakpoints ``x_1 <= ... <= x_m``.  It takes the value ``A``
on ``[0, x_1]``, ``X_j`` on ``(x_j, x_{j+1}]`` and ``0`` on ``(x_m, 1]``, with
the values at ``0`` and ``1`` forced to ``A`` and ``0``.
"""
from dataclasses import (
    dataclass,
    field,
)
from fractions import (
    Fraction,
)
import itertools
import random
from typing import (
    Iterator,
    List,
    Optional,
    Tuple,
)

from eth_utils import (
    to_tuple,
)

from slicings.constants import (
    DEFAULT_MAX_CLASSES,
    GRID_DENOMINATOR,
)
from slicings.exceptions import (
    HNFiltrationError,
    ImproperTorsionClass,
    InvalidChain,
    ZeroModuleError,
)
from slicings.interval import (
    CategoryContext,
    Interval,
    Module,
    module_in_members,
)
from slicings.lattice import (
    TorsionClass,
    TorsLattice,
    heart_members,
    in_torsionfree,
    lattice_for,
    torsion_subobject,
)
from slicings.utils.numeric import (
    ONE,
    ZERO,
    format_rational,
    sample_points,
)
from slicings.utils.validation import (
    validate_phase,
)


@dataclass(frozen=True)
class Chain:
    lattice: TorsLattice = field(repr=False)
    classes: Tuple[int, ...]
    breakpoints: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        classes = tuple(self.classes)
        try:
            breakpoints = tuple(
                validate_phase(x, 'breakpoints[{}]'.format(i))
                for i, x in enumerate(self.breakpoints)
            )
        except (TypeError, ValueError) as e:
            raise InvalidChain(str(e)) from e

        object.__setattr__(self, 'classes', classes)
        object.__setattr__(self, 'breakpoints', breakpoints)

        if len(classes) < 2:
            raise InvalidChain('A chain needs at least the classes A and 0')
        if len(breakpoints) != len(classes) - 1:
            raise InvalidChain('Expected {} breakpoints for {} classes: got {}'.format(
                len(classes) - 1,
                len(classes),
                len(breakpoints),
            ))
        for class_id in classes:
            if not 0 <= class_id < len(self.lattice):
                raise InvalidChain('Unknown torsion class id {}'.format(class_id))
        if classes[0] != self.lattice.top or classes[-1] != self.lattice.bottom:
            raise InvalidChain('A chain must start at A and end at 0')
        for upper, lower in zip(classes, classes[1:]):
            if upper == lower or not self.lattice.leq(lower, upper):
                raise InvalidChain('Classes must strictly decrease: {} does not contain {}'.format(
                    self.lattice[upper],
                    self.lattice[lower],
                ))
        for left, right in zip(breakpoints, breakpoints[1:]):
            if left > right:
                raise InvalidChain('Breakpoints must be nondecreasing: {} > {}'.format(
                    format_rational(left),
                    format_rational(right),
                ))

    def __str__(self) -> str:
        return '([{}], ({}))'.format(
            ', '.join(str(self.lattice[i]) for i in self.classes),
            ', '.join(format_rational(x) for x in self.breakpoints),
        )

    @property
    def m(self) -> int:
        return len(self.breakpoints)

    def torsion_class(self, j: int) -> TorsionClass:
        return self.lattice[self.classes[j]]


def normalize(chain: Chain) -> Chain:
    """
    Deletes every intermediate class whose interval of definition is empty,
    i.e. ``X_j`` with ``x_j == x_{j+1}``.
    """
    classes = list(chain.classes)
    breakpoints = list(chain.breakpoints)

    j = 1
    while j < len(breakpoints):
        if breakpoints[j - 1] == breakpoints[j]:
            del classes[j]
            del breakpoints[j - 1]
        else:
            j += 1

    return Chain(chain.lattice, tuple(classes), tuple(breakpoints))


def torsion_class_at(chain: Chain, i: Fraction) -> int:
    i = validate_phase(i, 'i')
    if i == ZERO:
        return chain.lattice.top
    if i == ONE:
        return chain.lattice.bottom

    return chain.classes[sum(1 for x in chain.breakpoints if x < i)]


@dataclass(frozen=True)
class Slice:
    """
    The category ``P_t = upper ∩ lower^⊥`` of a chain at phase ``t``; its
    objects are the modules with all summands among ``members``.
    """
    phase: Fraction
    upper: int
    lower: int
    members: int = field(repr=False)
    ctx: CategoryContext = field(repr=False, compare=False)

    def contains(self, module: Module) -> bool:
        return module_in_members(self.ctx, self.members, module)


@dataclass(frozen=True)
class SlicingData:
    support: Tuple[Slice, ...]

    def __eq__(self, other):
        if not isinstance(other, SlicingData):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def key(self) -> Tuple[Tuple[Fraction, int], ...]:
        return tuple((s.phase, s.members) for s in self.support)

    @property
    def phases(self) -> Tuple[Fraction, ...]:
        return tuple(s.phase for s in self.support)

    def __len__(self) -> int:
        return len(self.support)

    def at(self, phase: Fraction) -> Optional[Slice]:
        return next((s for s in self.support if s.phase == phase), None)


def slice_at(chain: Chain, t: Fraction) -> Slice:
    """
    ``P_t = X_{j-} ∩ X_{j+}^⊥`` where ``j-`` counts breakpoints below ``t``
    and ``j+`` those at or below ``t``.
    """
    t = validate_phase(t, 't')
    lower_index = sum(1 for x in chain.breakpoints if x < t)
    upper_index = sum(1 for x in chain.breakpoints if x <= t)

    upper = chain.classes[lower_index]
    lower = chain.classes[upper_index]

    return Slice(
        t,
        upper,
        lower,
        heart_members(chain.lattice[upper], chain.lattice[lower]),
        chain.lattice.ctx,
    )


def slicing_support(chain: Chain) -> SlicingData:
    slices = (slice_at(chain, t) for t in sorted(set(chain.breakpoints)))

    return SlicingData(tuple(s for s in slices if s.members))


def _require_nonzero(module: Module) -> None:
    if module.is_zero:
        raise ZeroModuleError('Expected a nonzero module')


def is_quasisemistable(chain: Chain, module: Module) -> Optional[Fraction]:
    """
    The phase ``t`` with ``module`` in ``P_t``, or ``None``.
    """
    _require_nonzero(module)
    chain.lattice.ctx.validate_module(module)

    for slice_ in slicing_support(chain).support:
        if slice_.contains(module):
            return slice_.phase

    return None


@dataclass(frozen=True)
class HNLayer:
    subobject: Module
    phase: Fraction
    factor: Module


@dataclass(frozen=True)
class HNFiltration:
    module: Module
    layers: Tuple[HNLayer, ...]

    @property
    def phases(self) -> Tuple[Fraction, ...]:
        return tuple(layer.phase for layer in self.layers)

    @property
    def subobjects(self) -> Tuple[Module, ...]:
        return tuple(layer.subobject for layer in self.layers)

    @property
    def factors(self) -> Tuple[Module, ...]:
        return tuple(layer.factor for layer in self.layers)

    @property
    def shape(self) -> Tuple[Tuple[Module, Module], ...]:
        return tuple((layer.subobject, layer.factor) for layer in self.layers)


def _cut(torsion_class: TorsionClass, summand: Interval) -> int:
    torsion, _ = torsion_subobject(torsion_class, Module.of(summand))
    if torsion.is_zero:
        return summand.b + 1

    return torsion.summands[0].a


def hn_filtration(chain: Chain, module: Module) -> HNFiltration:
    """
    Harder-Narasimhan filtration ``0 = G_m ⊂ ... ⊂ G_0 = M`` with
    ``G_j = t_{X_j} M``, listed from the smallest nonzero subobject up.  The
    factor ``G_{j-1}/G_j`` sits at phase ``x_j``; steps with ``G_{j-1} = G_j``
    are skipped.
    """
    _require_nonzero(module)
    ctx = chain.lattice.ctx
    ctx.validate_module(module)

    chain = normalize(chain)
    classes = [chain.torsion_class(j) for j in range(chain.m + 1)]
    cuts = [
        [_cut(torsion_class, summand) for torsion_class in classes]
        for summand in module.summands
    ]

    layers = []
    for j in range(chain.m, 0, -1):
        factor = Module(
            Interval(cut[j - 1], cut[j] - 1)
            for cut in cuts
            if cut[j - 1] < cut[j]
        )
        if factor.is_zero:
            continue

        subobject = Module(
            Interval(cut[j - 1], summand.b)
            for cut, summand in zip(cuts, module.summands)
            if cut[j - 1] <= summand.b
        )
        phase = chain.breakpoints[j - 1]
        heart = heart_members(classes[j - 1], classes[j])
        if not module_in_members(ctx, heart, factor):
            raise HNFiltrationError('Factor {} of {} is not quasisemistable at phase {}'.format(
                factor,
                module,
                format_rational(phase),
            ))

        layers.append(HNLayer(subobject, phase, factor))

    return HNFiltration(module, tuple(layers))


def mho_omega(chain: Chain, module: Module) -> Tuple[Fraction, Fraction]:
    """
    ``mho = sup {i : M in T_i}`` and ``omega = inf {i : M in F_i}``, read off
    the breakpoints.
    """
    _require_nonzero(module)
    chain.lattice.ctx.validate_module(module)

    last_torsion = max(j for j in range(chain.m + 1) if chain.torsion_class(j).contains(module))
    first_free = min(
        j for j in range(1, chain.m + 1) if in_torsionfree(chain.torsion_class(j), module)
    )

    return chain.breakpoints[last_torsion], chain.breakpoints[first_free - 1]


def mho(chain: Chain, module: Module) -> Fraction:
    return mho_omega(chain, module)[0]


def omega(chain: Chain, module: Module) -> Fraction:
    return mho_omega(chain, module)[1]


def chain_leq(first: Chain, second: Chain) -> bool:
    lattice = first.lattice
    return all(
        lattice.leq(torsion_class_at(first, t), torsion_class_at(second, t))
        for t in sample_points(first.breakpoints, second.breakpoints)
    )


def is_split_chain(chain: Chain) -> bool:
    """
    Whether every torsion pair of the chain splits: each interval is torsion
    or torsionfree.
    """
    full = chain.lattice.ctx.full_bits
    return all(
        torsion_class.members | torsion_class.torsionfree_members() == full
        for torsion_class in (chain.torsion_class(j) for j in range(chain.m + 1))
    )


def all_indec_quasisemistable(chain: Chain) -> bool:
    covered = 0
    for slice_ in slicing_support(chain).support:
        covered |= slice_.members

    return covered == chain.lattice.ctx.full_bits


def chains_equivalent(first: Chain, second: Chain) -> bool:
    return slicing_support(first) == slicing_support(second)


def same_sequence(first: Chain, second: Chain) -> bool:
    return normalize(first).classes == normalize(second).classes


def from_torsion_class(torsion_class: TorsionClass) -> Chain:
    """
    The two-slice chain ``([A, T, 0], (1/3, 2/3))`` of a proper class.
    """
    if torsion_class.is_zero or torsion_class.is_full:
        raise ImproperTorsionClass('Expected a proper torsion class: got {}'.format(torsion_class))

    lattice = lattice_for(torsion_class.ctx.n)
    class_id = lattice.id_of(torsion_class.members)

    return Chain(
        lattice,
        (lattice.top, class_id, lattice.bottom),
        (Fraction(1, 3), Fraction(2, 3)),
    )


@to_tuple
def iter_sequences(lattice: TorsLattice,
                   max_classes: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Strictly decreasing sequences of class ids from the whole category down to
    0, in lexicographic order, with at most ``max_classes`` entries.
    """
    def extend(sequence: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        current = sequence[-1]
        if current == lattice.bottom:
            yield sequence
            return
        if max_classes is not None and len(sequence) >= max_classes:
            return

        for lower in lattice.strictly_below(current):
            last_slot = max_classes is not None and len(sequence) + 1 == max_classes
            if last_slot and lower != lattice.bottom:
                continue
            yield from extend(sequence + (lower,))

    yield from extend((lattice.top,))


def grid(denominator: int, *, interior: bool) -> Tuple[Fraction, ...]:
    if interior:
        return tuple(Fraction(k, denominator) for k in range(1, denominator))

    return tuple(Fraction(k, denominator) for k in range(denominator + 1))


def iter_grid_chains(lattice: TorsLattice,
                     max_classes: int = DEFAULT_MAX_CLASSES,
                     denominator: int = GRID_DENOMINATOR,
                     *,
                     interior: bool = True) -> Iterator[Chain]:
    """
    Every chain with at most ``max_classes`` classes and breakpoints on the
    grid ``k/denominator``.  With ``interior`` the breakpoints are strictly
    increasing inside ``(0, 1)``, otherwise any nondecreasing grid values.
    """
    points = grid(denominator, interior=interior)
    for sequence in iter_sequences(lattice, max_classes):
        size = len(sequence) - 1
        if interior:
            placements: Iterator[Tuple[Fraction, ...]] = itertools.combinations(points, size)
        else:
            placements = itertools.combinations_with_replacement(points, size)

        for breakpoints in placements:
            yield Chain(lattice, sequence, breakpoints)


def random_chain(lattice: TorsLattice,
                 rng: random.Random,
                 max_classes: int = DEFAULT_MAX_CLASSES,
                 denominator: int = GRID_DENOMINATOR) -> Chain:
    sequence: List[int] = [lattice.top]
    for _ in range(rng.randint(0, max_classes - 2)):
        below = [c for c in lattice.strictly_below(sequence[-1]) if c != lattice.bottom]
        if not below:
            break
        sequence.append(rng.choice(below))
    sequence.append(lattice.bottom)

    breakpoints = sorted(
        Fraction(rng.randint(0, denominator), denominator) for _ in range(len(sequence) - 1)
    )

    return Chain(lattice, tuple(sequence), tuple(breakpoints))

