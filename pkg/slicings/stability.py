"""
Weak stability conditions and the chains of torsion classes they induce.

Three kinds are provided: :class:`ChainMho` and :class:`ChainOmega` read
phases off a chain, :class:`CentralCharge` is slope stability for a pair of
integer vectors ``(theta, delta)`` with the slope squeezed into ``(0, 1)``.
"""
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
import functools
import logging
from typing import (
    Iterable,
    Iterator,
    Optional,
    Tuple,
)

from eth_utils import (
    to_tuple,
)

from slicings.base import (
    BaseWeakStability,
)
from slicings.chains import (
    Chain,
    HNFiltration,
    chains_equivalent,
    from_torsion_class,
    hn_filtration,
    mho,
    omega,
    slicing_support,
    torsion_class_at,
)
from slicings.constants import (
    DEFAULT_DIM_BOUND,
    SUITE_DIM_BOUND,
)
from slicings.exceptions import (
    HNFiltrationError,
    ZeroModuleError,
)
from slicings.gf2 import (
    subobject_pairs,
)
from slicings.interval import (
    CategoryContext,
    Interval,
    Module,
    iter_modules,
)
from slicings.lattice import (
    TorsionClass,
    TorsLattice,
    filt_closure,
    lattice_for,
)
from slicings.utils.numeric import (
    ONE,
    ZERO,
    compactify,
    format_rational,
    sample_points,
)
from slicings.utils.validation import (
    validate_list_like_param,
    validate_phase,
)

logger = logging.getLogger(__name__)

Triple = Tuple[Module, Module, Module]


class ChainStability(BaseWeakStability):
    chain: Chain = None

    def validate(self):
        if not isinstance(self.chain, Chain):
            raise ValueError('{} requires a chain: got {!r}'.format(
                type(self).__name__,
                self.chain,
            ))

    @property
    def ctx(self) -> CategoryContext:
        return self.chain.lattice.ctx

    @property
    def lattice(self) -> TorsLattice:
        return self.chain.lattice

    def fields(self):
        return {'chain': self.chain}


class ChainMho(ChainStability):
    """
    ``M -> sup {i : M in T_i}``, the last Harder-Narasimhan phase.
    """
    kind = 'chain_mho'

    def _phase(self, module):
        return mho(self.chain, module)


class ChainOmega(ChainStability):
    """
    ``M -> inf {i : M in F_i}``, the first Harder-Narasimhan phase.
    """
    kind = 'chain_omega'

    def _phase(self, module):
        return omega(self.chain, module)


class CentralCharge(BaseWeakStability):
    """
    Slope stability ``mu(M) = theta.dim(M) / delta.dim(M)`` with phase
    ``1/2 + mu / (2 (1 + |mu|))``.
    """
    kind = 'central_charge'

    theta: Tuple[int, ...] = None
    delta: Tuple[int, ...] = None

    def validate(self):
        validate_list_like_param(self.theta, 'theta')
        validate_list_like_param(self.delta, 'delta')

        for name, vector in (('theta', self.theta), ('delta', self.delta)):
            for entry in vector:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise TypeError('Entries of `{}` must be integers: got {!r}'.format(
                        name,
                        entry,
                    ))

        if len(self.theta) == 0 or len(self.theta) != len(self.delta):
            raise ValueError(
                '`theta` and `delta` must be nonempty and of equal length: got {} and {}'.format(
                    len(self.theta),
                    len(self.delta),
                )
            )
        if any(entry <= 0 for entry in self.delta):
            raise ValueError('Entries of `delta` must be positive: got {}'.format(list(self.delta)))

        self.theta = tuple(self.theta)
        self.delta = tuple(self.delta)

    @property
    def ctx(self) -> CategoryContext:
        return CategoryContext(len(self.theta))

    @property
    def lattice(self) -> TorsLattice:
        return lattice_for(len(self.theta))

    def slope(self, module: Module) -> Fraction:
        vector = module.dimension_vector(len(self.theta))

        return Fraction(
            sum(t * d for t, d in zip(self.theta, vector)),
            sum(w * d for w, d in zip(self.delta, vector)),
        )

    def _phase(self, module):
        return compactify(self.slope(module))

    def fields(self):
        return {'theta': list(self.theta), 'delta': list(self.delta)}


def phase(wsc: BaseWeakStability, module: Module) -> Fraction:
    return wsc.phase(module)


def _proper_pairs(module: Module, n: int, dim_bound: int) -> Iterator[Tuple[Module, Module]]:
    for sub, quotient in subobject_pairs(module, n, dim_bound):
        if not sub.is_zero and not quotient.is_zero:
            yield sub, quotient


@dataclass(frozen=True)
class SESVerdict:
    passed: bool
    witness: Optional[Triple]
    strict_passed: bool
    strict_witness: Optional[Triple]
    tested: int = 0


def _weakly_ordered(left: Fraction, middle: Fraction, right: Fraction) -> bool:
    return left <= middle <= right or left >= middle >= right


def _strictly_ordered(left: Fraction, middle: Fraction, right: Fraction) -> bool:
    return left < middle < right or left > middle > right or left == middle == right


def check_weak_seesaw(wsc: BaseWeakStability,
                      ctx: CategoryContext = None,
                      dim_bound: int = SUITE_DIM_BOUND) -> SESVerdict:
    """
    Tests every proper short exact sequence ``0 -> L -> M -> N -> 0`` with
    ``dim M <= dim_bound``: the weak condition asks the phase of ``M`` to lie
    between those of ``L`` and ``N``; the strict see-saw asks for strict
    inequalities unless all three phases agree.
    """
    if ctx is None:
        ctx = wsc.ctx

    witness = strict_witness = None
    tested = 0
    for module in iter_modules(ctx, dim_bound):
        middle = wsc.phase(module)
        for sub, quotient in _proper_pairs(module, ctx.n, dim_bound):
            tested += 1
            left, right = wsc.phase(sub), wsc.phase(quotient)
            if witness is None and not _weakly_ordered(left, middle, right):
                witness = (sub, module, quotient)
            if strict_witness is None and not _strictly_ordered(left, middle, right):
                strict_witness = (sub, module, quotient)

    logger.debug('Tested %d short exact sequences for %r', tested, wsc)

    return SESVerdict(witness is None, witness, strict_witness is None, strict_witness, tested)


def is_semistable(wsc: BaseWeakStability,
                  module: Module,
                  dim_bound: int = DEFAULT_DIM_BOUND) -> bool:
    """
    ``phase(L) <= phase(M/L)`` for every proper nonzero subobject ``L``.
    """
    return all(
        wsc.phase(sub) <= wsc.phase(quotient)
        for sub, quotient in _proper_pairs(module, wsc.ctx.n, dim_bound)
    )


def max_destabilizing_subobject(wsc: BaseWeakStability,
                                module: Module,
                                dim_bound: int = DEFAULT_DIM_BOUND) -> Module:
    """
    A semistable subobject of largest phase.  Among several the one of
    largest dimension wins, then the first in module order.
    """
    if module.is_zero:
        raise ZeroModuleError('The zero module has no destabilizing subobject')

    subobjects = sorted({
        sub for sub, _ in subobject_pairs(module, wsc.ctx.n, dim_bound) if not sub.is_zero
    })
    top = max(wsc.phase(sub) for sub in subobjects)
    candidates = [sub for sub in subobjects if wsc.phase(sub) == top]
    semistable = [sub for sub in candidates if is_semistable(wsc, sub, dim_bound)]

    return min(semistable or candidates, key=lambda sub: (-sub.dim, sub))


@functools.lru_cache(maxsize=256)
def quotient_floors(wsc: BaseWeakStability) -> Tuple[Fraction, ...]:
    """
    For every interval ``[a,b]`` (in bit order) the least phase of its
    nonzero quotients ``[a,c]``.
    """
    return tuple(
        min(wsc.phase(Module.of(Interval(x.a, c))) for c in range(x.a, x.b + 1))
        for x in wsc.ctx.indecomposables
    )


def tors_cuts(wsc: BaseWeakStability, p: Fraction) -> Tuple[int, int]:
    """
    Bits of ``T_{>=p}`` and ``T_{>p}``.  Quotients of an interval are
    intervals and membership of a module is summand-wise, so testing interval
    quotients decides both classes.
    """
    p = validate_phase(p, 'p')
    geq = gt = 0
    for position, floor in enumerate(quotient_floors(wsc)):
        if floor >= p:
            geq |= 1 << position
        if floor > p:
            gt |= 1 << position

    return geq, gt


def cut_values(wsc: BaseWeakStability) -> Tuple[Fraction, ...]:
    return tuple(sorted(set(quotient_floors(wsc))))


def eta_pm(wsc: BaseWeakStability) -> Tuple[Chain, Chain]:
    """
    The chains ``s -> T_{>=s}`` and ``s -> T_{>s}``.  Both are returned with
    right-closed steps, where they coincide; they differ only at the cut
    values themselves, which :func:`tors_cuts` serves exactly.
    """
    lattice = wsc.lattice
    values = cut_values(wsc)

    plus = [lattice.id_of(tors_cuts(wsc, p)[0]) for p in values[1:]]
    minus = [lattice.id_of(tors_cuts(wsc, p)[1]) for p in values[:-1]]

    eta_plus = Chain(lattice, (lattice.top, *plus, lattice.bottom), values)
    eta_minus = Chain(lattice, (lattice.top, *minus, lattice.bottom), values)

    return eta_plus, eta_minus


def eta_plus(wsc: BaseWeakStability) -> Chain:
    return eta_pm(wsc)[0]


def eta_minus(wsc: BaseWeakStability) -> Chain:
    return eta_pm(wsc)[1]


@dataclass(frozen=True)
class SliceMismatch:
    module: Module
    phase: Fraction
    in_slice: bool
    semistable_at_phase: bool


@dataclass(frozen=True)
class SliceReport:
    counterexamples: Tuple[SliceMismatch, ...]
    tested: int

    @property
    def passed(self) -> bool:
        return len(self.counterexamples) == 0


def semistable_slice_check(wsc: BaseWeakStability, dim_bound: int = SUITE_DIM_BOUND) -> SliceReport:
    """
    Compares the slices of ``eta_pm(wsc)`` with the semistable modules of
    each phase.
    """
    support = slicing_support(eta_plus(wsc)).support
    mismatches = []
    tested = 0
    for module in iter_modules(wsc.ctx, dim_bound):
        semistable = is_semistable(wsc, module, dim_bound)
        module_phase = wsc.phase(module)
        for slice_ in support:
            tested += 1
            in_slice = slice_.contains(module)
            expected = semistable and module_phase == slice_.phase
            if in_slice != expected:
                mismatches.append(SliceMismatch(module, slice_.phase, in_slice, expected))

    return SliceReport(tuple(mismatches), tested)


def filt_description_check(wsc: BaseWeakStability,
                           p: Fraction,
                           dim_bound: int = SUITE_DIM_BOUND) -> bool:
    """
    ``T_{>=p}`` is generated by the semistable intervals of phase at least
    ``p`` and contains every semistable module of phase at least ``p``.
    """
    ctx = wsc.ctx
    geq, _ = tors_cuts(wsc, p)

    generators = ctx.bits_of(
        x for x in ctx.indecomposables
        if is_semistable(wsc, Module.of(x), dim_bound) and wsc.phase(Module.of(x)) >= p
    )
    if filt_closure(ctx, generators) != geq:
        return False

    cut = TorsionClass(ctx, geq)
    return all(
        cut.contains(module)
        for module in iter_modules(ctx, dim_bound)
        if wsc.phase(module) >= p and is_semistable(wsc, module, dim_bound)
    )


@dataclass(frozen=True)
class StabilityProfile:
    constant: bool
    stability: bool
    omega_eq_mho: bool
    single_slice: bool

    @property
    def coincide(self) -> bool:
        return len({self.constant, self.stability, self.omega_eq_mho, self.single_slice}) == 1


def is_stability_and_constant(wsc: ChainStability,
                              dim_bound: int = SUITE_DIM_BOUND) -> StabilityProfile:
    """
    Four conditions on a chain-induced weak stability condition which hold
    together or fail together.
    """
    if not isinstance(wsc, ChainStability):
        raise TypeError('Expected a chain-induced weak stability condition: got {!r}'.format(wsc))

    chain = wsc.chain
    modules = tuple(iter_modules(wsc.ctx, dim_bound))

    return StabilityProfile(
        constant=len({wsc.phase(module) for module in modules}) == 1,
        stability=check_weak_seesaw(wsc, dim_bound=dim_bound).strict_passed,
        omega_eq_mho=all(mho(chain, module) == omega(chain, module) for module in modules),
        single_slice=len(slicing_support(chain)) == 1,
    )


def _comparison_modules(first: BaseWeakStability,
                        second: BaseWeakStability,
                        dim_bound: int) -> Iterable[Module]:
    # mho is min and omega is max over summands
    if isinstance(first, ChainStability) and isinstance(second, ChainStability):
        return tuple(Module.of(x) for x in first.ctx.indecomposables)

    return iter_modules(first.ctx, dim_bound)


def wsc_leq(first: BaseWeakStability,
            second: BaseWeakStability,
            dim_bound: int = DEFAULT_DIM_BOUND) -> bool:
    return all(
        first.phase(module) <= second.phase(module)
        for module in _comparison_modules(first, second, dim_bound)
    )


def wsc_equivalent(first: BaseWeakStability,
                   second: BaseWeakStability,
                   dim_bound: int = SUITE_DIM_BOUND) -> bool:
    """
    Same semistable modules with the same phases.
    """
    def semistable_phase(wsc, module):
        if is_semistable(wsc, module, dim_bound):
            return wsc.phase(module)
        return None

    return all(
        semistable_phase(first, module) == semistable_phase(second, module)
        for module in iter_modules(first.ctx, dim_bound)
    )


def hn_filtration_wsc(wsc: BaseWeakStability,
                      module: Module,
                      dim_bound: int = DEFAULT_DIM_BOUND) -> HNFiltration:
    """
    Harder-Narasimhan filtration with semistable factors, computed through
    ``eta_plus(wsc)``.
    """
    filtration = hn_filtration(eta_plus(wsc), module)
    for layer in filtration.layers:
        semistable = is_semistable(wsc, layer.factor, dim_bound)
        if wsc.phase(layer.factor) != layer.phase or not semistable:
            raise HNFiltrationError('Factor {} is not semistable of phase {}'.format(
                layer.factor,
                format_rational(layer.phase),
            ))

    return filtration


@dataclass(frozen=True)
class SandwichReport:
    passed: bool
    failure: Optional[str] = None


def _cut_at(wsc: BaseWeakStability, t: Fraction, strict: bool) -> int:
    geq, gt = tors_cuts(wsc, t)

    return gt if strict else geq


@to_tuple
def _interior(points: Iterable[Fraction]) -> Iterator[Fraction]:
    for t in points:
        if ZERO < t < ONE:
            yield t


def chain_sandwich(chain: Chain) -> SandwichReport:
    """
    ``T_{>t}(mho) ⊆ T_{>t}(omega) ⊆ chain(t) ⊆ T_{>=t}(mho) ⊆ T_{>=t}(omega)``
    at every point of the merged partition, and all derived chains share the
    slicing of ``chain``.
    """
    lattice = chain.lattice
    mho_wsc = ChainMho(chain=chain)
    omega_wsc = ChainOmega(chain=chain)
    derived = {
        'eta_pm(mho)': eta_pm(mho_wsc),
        'eta_pm(omega)': eta_pm(omega_wsc),
    }

    breakpoints = [chain.breakpoints] + [c.breakpoints for pair in derived.values() for c in pair]
    for t in _interior(sample_points(*breakpoints)):
        ladder = (
            _cut_at(mho_wsc, t, strict=True),
            _cut_at(omega_wsc, t, strict=True),
            lattice[torsion_class_at(chain, t)].members,
            _cut_at(mho_wsc, t, strict=False),
            _cut_at(omega_wsc, t, strict=False),
        )
        for lower, upper in zip(ladder, ladder[1:]):
            if lower & ~upper:
                failure = 'inclusions fail at phase {}'.format(format_rational(t))
                return SandwichReport(False, failure)

    for name, pair in derived.items():
        for derived_chain in pair:
            if not chains_equivalent(chain, derived_chain):
                return SandwichReport(False, '{} has a different slicing'.format(name))

    return SandwichReport(True)


def _cut_point_failure(wsc: BaseWeakStability, plus: Chain) -> Optional[str]:
    # T_{>=p} is the value of eta+ at a cut p, T_{>p} its value just after
    lattice = wsc.lattice
    values = cut_values(wsc)
    for p, after in zip(values, values[1:] + (ONE,)):
        geq, gt = tors_cuts(wsc, p)
        if geq == gt:
            return 'no interval has quotient floor {}'.format(format_rational(p))
        if lattice[torsion_class_at(plus, p)].members != geq:
            return 'eta+ misses T_>=p at {}'.format(format_rational(p))
        if p < ONE and lattice[torsion_class_at(plus, (p + after) / 2)].members != gt:
            return 'eta+ misses T_>p just after {}'.format(format_rational(p))

    return None


def wsc_sandwich(wsc: BaseWeakStability, dim_bound: int = SUITE_DIM_BOUND) -> SandwichReport:
    """
    ``mho(eta-) <= mho(eta+) <= phase <= omega(eta-) <= omega(eta+)`` on every
    module up to ``dim_bound``.  At each cut value ``p`` the chains are also
    read against :func:`tors_cuts`: ``T_{>=p}`` at ``p`` and ``T_{>p}`` right
    after it.
    """
    plus, minus = eta_pm(wsc)
    for module in iter_modules(wsc.ctx, dim_bound):
        ladder = (
            mho(minus, module),
            mho(plus, module),
            wsc.phase(module),
            omega(minus, module),
            omega(plus, module),
        )
        if any(lower > upper for lower, upper in zip(ladder, ladder[1:])):
            return SandwichReport(False, 'inequalities fail on {}'.format(module))

    failure = _cut_point_failure(wsc, plus)
    if failure is not None:
        return SandwichReport(False, failure)

    return SandwichReport(True)


def two_slice_stability(torsion_class: TorsionClass) -> ChainMho:
    """
    The weak stability condition with exactly two phases whose cut at ``1/2``
    is ``torsion_class``.
    """
    return ChainMho(chain=from_torsion_class(torsion_class))

