"""
The space of slicings: the pseudometric on chains, its extension-closure
reformulation, the nerve of the torsion lattice, chambers and walls.
"""
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
import itertools
from typing import (
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from eth_utils import (
    to_tuple,
)
from eth_utils.toolz import (
    sliding_window,
)

from slicings.chains import (
    Chain,
    HNFiltration,
    hn_filtration,
    iter_sequences,
    mho_omega,
    normalize,
    slicing_support,
    torsion_class_at,
)
from slicings.constants import (
    SUITE_DIM_BOUND,
)
from slicings.exceptions import (
    InvalidChain,
    PreconditionViolation,
)
from slicings.interval import (
    Module,
    filt_contains,
    iter_modules,
)
from slicings.lattice import (
    TorsionClass,
    TorsLattice,
    heart_members,
)
from slicings.utils.numeric import (
    ONE,
    ZERO,
    sample_points,
)
from slicings.utils.validation import (
    validate_phase,
    validate_radius,
)

ClassSequence = Tuple[int, ...]


def _same_lattice(first: Chain, second: Chain) -> None:
    if first.lattice is not second.lattice:
        raise InvalidChain('Chains live over different categories: n={} and n={}'.format(
            first.lattice.n,
            second.lattice.n,
        ))


def distance(first: Chain, second: Chain) -> Fraction:
    """
    ``max`` over intervals ``I`` of ``|mho_1 I - mho_2 I|`` and
    ``|omega_1 I - omega_2 I|``.  ``mho`` of a sum is the minimum over its
    summands and ``omega`` the maximum, so intervals attain the supremum over
    all modules.
    """
    _same_lattice(first, second)

    deviation = ZERO
    for interval in first.lattice.ctx.indecomposables:
        module = Module.of(interval)
        mho_1, omega_1 = mho_omega(first, module)
        mho_2, omega_2 = mho_omega(second, module)
        deviation = max(deviation, abs(mho_1 - mho_2), abs(omega_1 - omega_2))

    return deviation


def _covered(target: Chain, source: Chain, eps: Fraction) -> bool:
    # P^target_r ⊆ Filt(P^source_t : |t - r| <= eps) for every phase r
    ctx = target.lattice.ctx
    source_support = slicing_support(source).support
    for slice_ in slicing_support(target).support:
        window = 0
        for other in source_support:
            if abs(other.phase - slice_.phase) <= eps:
                window |= other.members
        if not all(filt_contains(ctx, window, x) for x in ctx.members(slice_.members)):
            return False

    return True


def distance_filt_formula(first: Chain, second: Chain) -> Fraction:
    """
    The least ``eps`` such that every slice of each chain is an iterated
    extension of the slices of the other within ``eps``.  Feasibility only
    changes where a window edge meets a support phase, so the candidates are
    the pairwise phase differences.
    """
    _same_lattice(first, second)

    phases_1 = slicing_support(first).phases
    phases_2 = slicing_support(second).phases
    candidates = sorted({ZERO} | {abs(p - q) for p in phases_1 for q in phases_2})

    for eps in candidates:
        if _covered(second, first, eps) and _covered(first, second, eps):
            return eps

    raise PreconditionViolation('No feasible radius found for {} and {}'.format(first, second))


def ball_contains(center: Chain, eps: Fraction, probe: Chain) -> bool:
    eps = validate_radius(eps, 'eps')

    return distance(center, probe) < eps


def plateau_predicate(chain: Chain, torsion_class: TorsionClass, eps: Fraction) -> bool:
    """
    Whether ``T_r`` equals ``torsion_class`` for every ``r`` in
    ``[eps, 1 - eps]`` and just to the right of ``1 - eps``.  Around the chain
    constant at a class this is membership in the ``eps``-ball.
    """
    eps = validate_radius(eps, 'eps')
    target = chain.lattice.id_of(torsion_class.members)
    if eps > ONE - eps:
        raise PreconditionViolation('Radius {} leaves no plateau'.format(eps))

    points = [
        t for t in sample_points(chain.breakpoints, (eps, ONE - eps))
        if eps <= t <= ONE - eps
    ]
    if any(torsion_class_at(chain, t) != target for t in points):
        return False

    right_limit = chain.classes[sum(1 for x in chain.breakpoints if x <= ONE - eps)]
    return right_limit == target


@dataclass(frozen=True)
class NerveComplex:
    lattice: TorsLattice
    simplices: Tuple[ClassSequence, ...]
    facets: Tuple[ClassSequence, ...]

    @property
    def f_vector(self) -> Tuple[int, ...]:
        """
        Entry ``k - 2`` counts the sequences with ``k`` classes.
        """
        longest = max(len(simplex) for simplex in self.simplices)
        return tuple(
            sum(1 for simplex in self.simplices if len(simplex) == k)
            for k in range(2, longest + 1)
        )


def _is_maximal(lattice: TorsLattice, sequence: ClassSequence) -> bool:
    return all(lattice.is_cover(upper, lower) for upper, lower in sliding_window(2, sequence))


def nerve(lattice: TorsLattice) -> NerveComplex:
    simplices = iter_sequences(lattice)
    facets = sorted(
        (simplex for simplex in simplices if _is_maximal(lattice, simplex)),
        key=lambda simplex: (-len(simplex), simplex),
    )

    return NerveComplex(lattice, simplices, tuple(facets))


@to_tuple
def faces(sequence: ClassSequence) -> Iterator[ClassSequence]:
    """
    Sub-sequences keeping the first and last class.
    """
    inner = sequence[1:-1]
    for size in range(len(inner) + 1):
        for chosen in itertools.combinations(inner, size):
            yield (sequence[0],) + chosen + (sequence[-1],)


@dataclass(frozen=True)
class SubsequenceMap:
    """
    ``injection[k]`` is the position of the ``k``-th class of the shorter
    sequence in the longer one; ``surjection[a - 1]`` is the slice of the
    shorter sequence that receives slice ``a`` of the longer one.
    """
    injection: Tuple[int, ...]
    surjection: Tuple[int, ...]
    slices_contained: bool


def subsequence_map(lattice: TorsLattice,
                    sub: ClassSequence,
                    sequence: ClassSequence) -> Optional[SubsequenceMap]:
    positions = {class_id: k for k, class_id in enumerate(sequence)}
    try:
        injection = tuple(positions[class_id] for class_id in sub)
    except KeyError:
        return None
    if any(left >= right for left, right in sliding_window(2, injection)):
        return None

    surjection = tuple(
        next(beta for beta in range(1, len(sub)) if injection[beta - 1] < alpha <= injection[beta])
        for alpha in range(1, len(sequence))
    )

    contained = all(
        heart_members(lattice[sequence[alpha - 1]], lattice[sequence[alpha]])
        & ~heart_members(lattice[sub[beta - 1]], lattice[sub[beta]]) == 0
        for alpha, beta in zip(range(1, len(sequence)), surjection)
    )

    return SubsequenceMap(injection, surjection, contained)


def is_chamber(chain: Chain) -> bool:
    chain = normalize(chain)

    return _is_maximal(chain.lattice, chain.classes)


def _min_gap(chain: Chain) -> Fraction:
    gaps = [right - left for left, right in sliding_window(2, chain.breakpoints)]

    return min(gaps, default=ONE)


@dataclass(frozen=True)
class ChamberFailure:
    probe: Chain
    module: Module


@dataclass(frozen=True)
class ChamberReport:
    probes_in_ball: int
    failures: Tuple[ChamberFailure, ...]

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0


def _agrees(base: HNFiltration, other: HNFiltration, eps: Fraction) -> bool:
    if base.shape != other.shape:
        return False

    return all(abs(p - q) <= eps for p, q in zip(base.phases, other.phases))


def chamber_local_constancy(chain: Chain,
                            eps: Fraction,
                            probes: Sequence[Chain],
                            dim_bound: int = SUITE_DIM_BOUND) -> ChamberReport:
    """
    Harder-Narasimhan filtrations of every probe within ``eps`` of a chamber
    chain have the layers and factors of the chain's own.
    """
    eps = validate_radius(eps, 'eps')
    chain = normalize(chain)
    if not is_chamber(chain):
        raise PreconditionViolation('{} is not a chamber'.format(chain))
    if eps >= _min_gap(chain) / 2:
        raise PreconditionViolation('Radius {} is not below half the minimal gap {}'.format(
            eps,
            _min_gap(chain),
        ))

    modules = tuple(iter_modules(chain.lattice.ctx, dim_bound))
    baseline = {module: hn_filtration(chain, module) for module in modules}

    in_ball = 0
    failures: List[ChamberFailure] = []
    for probe in probes:
        if distance(chain, probe) >= eps:
            continue
        in_ball += 1
        for module in modules:
            if not _agrees(baseline[module], hn_filtration(probe, module), eps):
                failures.append(ChamberFailure(probe, module))
                break

    return ChamberReport(in_ball, tuple(failures))


@dataclass(frozen=True)
class RefiningProbe:
    probe: Chain
    module: Module
    before: HNFiltration
    after: HNFiltration


def refining_probe(chain: Chain, eps: Fraction) -> RefiningProbe:
    """
    For a chain that is not a chamber: squeezes a class ``Y`` strictly
    between the first non-covering step ``X_j > X_{j+1}`` into a window of
    width below ``eps`` next to ``x_{j+1}``, and returns a module ``M1 + M2``
    with ``M1`` in ``X_j ∩ Y^⊥`` and ``M2`` in ``Y ∩ X_{j+1}^⊥``.  It is
    semistable for the chain but splits for the probe.
    """
    eps = validate_radius(eps, 'eps')
    chain = normalize(chain)
    lattice = chain.lattice
    ctx = lattice.ctx

    step = next(
        (j for j, (upper, lower) in enumerate(sliding_window(2, chain.classes))
         if not lattice.is_cover(upper, lower)),
        None,
    )
    if step is None:
        raise PreconditionViolation('{} is a chamber and has no refinement'.format(chain))

    upper, lower = chain.classes[step], chain.classes[step + 1]
    middle = next(
        class_id for class_id in lattice.strictly_below(upper)
        if class_id != lower and lattice.leq(lower, class_id)
    )

    breakpoints = list(chain.breakpoints)
    at = breakpoints[step]
    following = breakpoints[step + 1] if step + 1 < len(breakpoints) else ONE
    if following > at:
        shift = min(eps / 2, (following - at) / 2)
        new_breakpoints = breakpoints[:step + 1] + [at + shift] + breakpoints[step + 1:]
    else:
        preceding = breakpoints[step - 1] if step > 0 else ZERO
        shift = min(eps / 2, (at - preceding) / 2)
        new_breakpoints = breakpoints[:step] + [at - shift] + breakpoints[step:]

    classes = chain.classes[:step + 1] + (middle,) + chain.classes[step + 1:]
    probe = Chain(lattice, classes, tuple(new_breakpoints))

    first = ctx.members(heart_members(lattice[upper], lattice[middle]))[0]
    second = ctx.members(heart_members(lattice[middle], lattice[lower]))[0]
    module = Module.of(first, second)

    return RefiningProbe(probe, module, hn_filtration(chain, module), hn_filtration(probe, module))


def wall_locus(chain: Chain, module: Module) -> Tuple[bool, Fraction]:
    """
    Whether ``module`` is quasisemistable for ``chain``, and half the spread
    of its phases, a lower bound for the distance to any chain for which it
    is.
    """
    low, high = mho_omega(chain, module)

    return low == high, (high - low) / 2


def twin_locus_member(chain: Chain,
                      lower: TorsionClass,
                      upper: TorsionClass,
                      a: Fraction,
                      b: Fraction) -> bool:
    """
    Whether the chain is ``A`` on ``[0, a)``, between ``lower`` and ``upper``
    on ``(a, b)`` and ``0`` on ``(b, 1]``.
    """
    a = validate_phase(a, 'a')
    b = validate_phase(b, 'b')
    if not lower.issubset(upper):
        raise PreconditionViolation('{} is not contained in {}'.format(lower, upper))
    if not a < b:
        raise PreconditionViolation('Expected a < b: got {} and {}'.format(a, b))

    lattice = chain.lattice
    for t in sample_points(chain.breakpoints, (a, b)):
        value = lattice[torsion_class_at(chain, t)]
        if t < a and not value.is_full:
            return False
        if a < t < b and not (lower.issubset(value) and value.issubset(upper)):
            return False
        if t > b and not value.is_zero:
            return False

    return True


@to_tuple
def separated_family(lattice: TorsLattice) -> Iterator[Chain]:
    """
    One chain per torsion class ``T``: constant at ``T`` on ``(0, 1)``.
    Any two are at distance 1.
    """
    for torsion_class in lattice:
        if torsion_class.id == lattice.top:
            yield Chain(lattice, (lattice.top, lattice.bottom), (ONE,))
        elif torsion_class.id == lattice.bottom:
            yield Chain(lattice, (lattice.top, lattice.bottom), (ZERO,))
        else:
            yield Chain(lattice, (lattice.top, torsion_class.id, lattice.bottom), (ZERO, ONE))


@to_tuple
def distance_matrix(chains: Sequence[Chain]) -> Iterator[Tuple[Fraction, ...]]:
    for first in chains:
        yield tuple(distance(first, second) for second in chains)


@dataclass(frozen=True)
class CompactnessReport:
    classes: int
    f_vector: Tuple[int, ...]
    facets: int

    @property
    def simplices(self) -> int:
        return sum(self.f_vector)

    @property
    def verdict(self) -> str:
        # Tors is always finite here, so only the compact branch is reachable.
        return 'compact: finite CW complex with {} simplices'.format(self.simplices)


def compactness_report(lattice: TorsLattice) -> CompactnessReport:
    complex_ = nerve(lattice)

    return CompactnessReport(len(lattice), complex_.f_vector, len(complex_.facets))


def chebyshev_distance(first: Chain, second: Chain) -> Fraction:
    """
    ``max_k |x_k - x'_k|`` for two chains with the same class sequence.
    """
    if first.classes != second.classes:
        raise PreconditionViolation('Chains do not share a class sequence')

    return max(
        (abs(x - y) for x, y in zip(first.breakpoints, second.breakpoints)),
        default=ZERO,
    )

