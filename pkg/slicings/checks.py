"""
Property suites run by ``slicings check``.  Each check returns a
:class:`CheckResult`; a suite is a named list of checks.
"""
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
import itertools
import logging
import math
import random
from typing import (
    Callable,
    Dict,
    Iterator,
    List,
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
    all_indec_quasisemistable,
    chain_leq,
    chains_equivalent,
    hn_filtration,
    is_quasisemistable,
    is_split_chain,
    iter_grid_chains,
    iter_sequences,
    mho_omega,
    normalize,
    random_chain,
    torsion_class_at,
)
from slicings.constants import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    GRID_DENOMINATOR,
    SUITE_DIM_BOUND,
)
from slicings.exceptions import (
    HNFiltrationError,
)
from slicings.gf2 import (
    maximal_subrep,
    module_ext_dim,
    module_hom_dim,
    module_to_rep,
    subobject_pairs,
)
from slicings.interval import (
    Module,
    ext_nonzero,
    hom_nonzero,
    iter_modules,
    nonsplit_middle,
    pairs,
)
from slicings.lattice import (
    TorsLattice,
    closure_image_oracle,
    in_torsionfree,
    lattice_for,
    maximal_chain_count,
    maximal_green_sequences,
    torsion_subobject,
)
from slicings.space import (
    chamber_local_constancy,
    chebyshev_distance,
    distance,
    distance_filt_formula,
    faces,
    is_chamber,
    nerve,
    plateau_predicate,
    refining_probe,
    separated_family,
    subsequence_map,
    twin_locus_member,
    wall_locus,
)
from slicings.stability import (
    CentralCharge,
    ChainMho,
    ChainOmega,
    chain_sandwich,
    check_weak_seesaw,
    cut_values,
    eta_minus,
    eta_plus,
    filt_description_check,
    hn_filtration_wsc,
    is_semistable,
    is_stability_and_constant,
    semistable_slice_check,
    wsc_sandwich,
)
from slicings.utils.numeric import (
    ONE,
    ZERO,
    sample_points,
)

logger = logging.getLogger(__name__)

# Oracle subrepresentation scans grow fast; keep them below the suite bound.
ORACLE_DIM_BOUND = 4
# Module bound for the exhaustive grid sweeps.
GRID_DIM_BOUND = 2
# Longest class sequences in the ball sweep once the lattice outgrows the grid.
BALL_MAX_CLASSES = 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''

    def __str__(self) -> str:
        line = '{} {}'.format('PASS' if self.passed else 'FAIL', self.name)
        if self.detail:
            line += ': ' + self.detail
        return line


@dataclass(frozen=True)
class SuiteConfig:
    n: int
    dim_bound: int = SUITE_DIM_BOUND
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES

    @property
    def lattice(self) -> TorsLattice:
        return lattice_for(self.n)

    def rng(self, salt: str) -> random.Random:
        return random.Random('{}:{}:{}'.format(self.seed, self.n, salt))

    def modules(self, bound: Optional[int] = None) -> Tuple[Module, ...]:
        return tuple(iter_modules(self.lattice.ctx, min(self.dim_bound, bound or self.dim_bound)))

    def chains(self, salt: str, count: Optional[int] = None) -> Tuple[Chain, ...]:
        rng = self.rng(salt)
        return tuple(random_chain(self.lattice, rng) for _ in range(count or self.samples))


def _result(name: str, failure: Optional[str]) -> CheckResult:
    return CheckResult(name, failure is None, failure or '')


def _first(failures: Iterator[str]) -> Optional[str]:
    return next(failures, None)


def _spaced(lattice: TorsLattice, sequence: Tuple[int, ...]) -> Chain:
    steps = len(sequence)
    return Chain(lattice, sequence, tuple(Fraction(k, steps) for k in range(1, steps)))


#
# core
#
def check_torsion_counts(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    expected = math.comb(2 * (config.n + 1), config.n + 1) // (config.n + 2)
    if len(lattice) != expected:
        return _result('torsion-counts', '{} classes, expected {}'.format(len(lattice), expected))

    oracle = closure_image_oracle(lattice.ctx)
    if oracle != {torsion_class.members for torsion_class in lattice}:
        return _result('torsion-counts', 'closure image differs from the enumeration')

    return _result('torsion-counts', None)


def check_oracle_equivalence(config: SuiteConfig) -> CheckResult:
    n = config.n

    def failures() -> Iterator[str]:
        for x, y in pairs(config.lattice.ctx):
            source, target = Module.of(x), Module.of(y)
            if hom_nonzero(x, y) != (module_hom_dim(source, target, n) > 0):
                yield 'Hom({}, {})'.format(x, y)
            if ext_nonzero(x, y) != (module_ext_dim(source, target, n) > 0):
                yield 'Ext({}, {})'.format(x, y)
            if ext_nonzero(x, y):
                middle = nonsplit_middle(x, y)
                if middle == source + target:
                    yield 'split middle term of Ext({}, {})'.format(x, y)
                elif (target, source) not in subobject_pairs(middle, n, middle.dim):
                    yield 'middle term of Ext({}, {})'.format(x, y)

    return _result('oracle-equivalence', _first(failures()))


def check_brick_labels(config: SuiteConfig) -> CheckResult:
    # hasse_edges raises BrickLabelError on a cover without a unique label
    edges = config.lattice.hasse_edges
    return _result('brick-labels', None if edges else 'no covering relations')


def check_mgs_count(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    walked = len(maximal_green_sequences(lattice))
    counted = maximal_chain_count(lattice)
    detail = None if walked == counted else '{} paths walked, {} counted'.format(walked, counted)

    return _result('mgs-count', detail)


def check_torsion_subobjects(config: SuiteConfig) -> CheckResult:
    n = config.n

    def failures() -> Iterator[str]:
        for module in config.modules(ORACLE_DIM_BOUND):
            rep = module_to_rep(module, n)
            for torsion_class in config.lattice:
                torsion, free = torsion_subobject(torsion_class, module)
                _, largest = maximal_subrep(rep, torsion_class.contains, module.dim)
                if largest != torsion:
                    yield 't({}) for {}: {} vs oracle {}'.format(
                        module,
                        torsion_class,
                        torsion,
                        largest,
                    )
                if not free.is_zero and not in_torsionfree(torsion_class, free):
                    yield 'f({}) for {} not torsionfree'.format(module, torsion_class)

    return _result('torsion-subobjects', _first(failures()))


def check_hom_duality(config: SuiteConfig) -> CheckResult:
    ctx = config.lattice.ctx

    def failures() -> Iterator[str]:
        for torsion_class in config.lattice:
            free = ctx.members(torsion_class.torsionfree_members())
            for x in ctx.indecomposables:
                left_perp = not any(hom_nonzero(x, y) for y in free)
                if left_perp != bool(torsion_class.members & ctx.bit(x)):
                    yield '{} and {}'.format(x, torsion_class)

    return _result('hom-duality', _first(failures()))


def _oracle_subobjects(config: SuiteConfig, module: Module) -> Dict[int, Module]:
    rep = module_to_rep(module, config.n)
    return {
        torsion_class.id: maximal_subrep(rep, torsion_class.contains, module.dim)[1]
        for torsion_class in config.lattice
    }


def _check_filtration(chain: Chain,
                      module: Module,
                      oracle: Optional[Dict[int, Module]] = None) -> Optional[str]:
    n = chain.lattice.ctx.n
    filtration = hn_filtration(chain, module)
    layers = filtration.layers
    if layers[-1].subobject != module:
        return 'HN filtration of {} does not end at the module'.format(module)
    if layers[0].subobject != layers[0].factor:
        return 'HN filtration of {} does not start at its first factor'.format(module)
    for below, layer in zip(layers, layers[1:]):
        quotients = subobject_pairs(layer.subobject, n, layer.subobject.dim)
        if below.subobject == layer.subobject or (below.subobject, layer.factor) not in quotients:
            return 'HN subobject {} of {} is not a proper subobject of {} with quotient {}'.format(
                below.subobject,
                module,
                layer.subobject,
                layer.factor,
            )
    if any(left <= right for left, right in zip(filtration.phases, filtration.phases[1:])):
        return 'HN phases of {} do not decrease'.format(module)
    for layer in layers:
        if layer.factor.is_zero:
            return 'HN filtration of {} has a zero factor'.format(module)
        if is_quasisemistable(chain, layer.factor) != layer.phase:
            return 'HN factor {} of {} is not quasisemistable at {}'.format(
                layer.factor,
                module,
                layer.phase,
            )
    low, high = mho_omega(chain, module)
    if (filtration.phases[-1], filtration.phases[0]) != (low, high):
        return 'HN phases of {} disagree with mho/omega'.format(module)
    if oracle is not None:
        expected = {
            oracle[class_id]
            for class_id in normalize(chain).classes
            if not oracle[class_id].is_zero
        }
        if expected != set(filtration.subobjects):
            return 'HN subobjects of {} differ from the torsion subobjects'.format(module)
    return None


def check_hn_filtrations(config: SuiteConfig) -> CheckResult:
    """
    Every grid chain with at most five classes against the small modules,
    each class sequence once against every module up to the oracle bound,
    then a few random chains against the whole suite range.
    """
    lattice = config.lattice
    small = config.modules(ORACLE_DIM_BOUND)
    oracles = {module: _oracle_subobjects(config, module) for module in small}
    on_grid = tuple(module for module in small if module.dim <= GRID_DIM_BOUND)

    def failures() -> Iterator[str]:
        seen = set()
        for chain in iter_grid_chains(lattice, 5, GRID_DENOMINATOR):
            tested = on_grid if chain.classes in seen else small
            seen.add(chain.classes)
            for module in tested:
                failure = _check_filtration(chain, module, oracles[module])
                if failure is not None:
                    yield '{} for {}'.format(failure, chain)
        for chain in config.chains('hn', config.samples // 10 + 1):
            for module in config.modules():
                failure = _check_filtration(chain, module, oracles.get(module))
                if failure is not None:
                    yield '{} for {}'.format(failure, chain)

    return _result('hn-filtrations', _first(failures()))


def check_mho_omega_laws(config: SuiteConfig) -> CheckResult:
    n = config.n
    modules = config.modules()

    def failures() -> Iterator[str]:
        for chain in config.chains('laws', max(1, config.samples // 10)):
            values = {module: mho_omega(chain, module) for module in modules}
            for module, (low, high) in values.items():
                if low > high:
                    yield 'mho > omega for {}'.format(module)
                if (low == high) != (is_quasisemistable(chain, module) is not None):
                    yield 'quasisemistability of {}'.format(module)
                for sub, quotient in subobject_pairs(module, n, config.dim_bound):
                    if sub.is_zero or quotient.is_zero:
                        continue
                    (sub_low, sub_high), (quo_low, quo_high) = values[sub], values[quotient]
                    if not (low <= quo_low and low >= min(sub_low, quo_low)):
                        yield 'mho on {} -> {} -> {}'.format(sub, module, quotient)
                    if not (high >= sub_high and high <= max(sub_high, quo_high)):
                        yield 'omega on {} -> {} -> {}'.format(sub, module, quotient)
            for first, second in itertools.combinations(modules[:20], 2):
                total = first + second
                if total in values:
                    (low_1, high_1), (low_2, high_2) = values[first], values[second]
                    if values[total] != (min(low_1, low_2), max(high_1, high_2)):
                        yield 'direct sum law on {}'.format(total)

    return _result('mho-omega-laws', _first(failures()))


def check_normalize(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice

    def failures() -> Iterator[str]:
        for chain in iter_grid_chains(lattice, 4, 4, interior=False):
            canonical = normalize(chain)
            if normalize(canonical) != canonical:
                yield 'normalize is not idempotent on {}'.format(chain)
            for t in sample_points(chain.breakpoints):
                if torsion_class_at(chain, t) != torsion_class_at(canonical, t):
                    yield 'normalize changes {} at {}'.format(chain, t)

    return _result('normalize', _first(failures()))


def check_chain_order(config: SuiteConfig) -> CheckResult:
    rng = config.rng('order')
    lattice = config.lattice

    def failures() -> Iterator[str]:
        for _ in range(config.samples):
            a, b, c = (random_chain(lattice, rng, denominator=4) for _ in range(3))
            if not chain_leq(a, a):
                yield 'reflexivity on {}'.format(a)
            if chain_leq(a, b) and chain_leq(b, a) and not chains_equivalent(a, b):
                yield 'antisymmetry on {} and {}'.format(a, b)
            if chain_leq(a, b) and chain_leq(b, c) and not chain_leq(a, c):
                yield 'transitivity on {}, {}, {}'.format(a, b, c)

    return _result('chain-order', _first(failures()))


def check_split_chains(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice

    def failures() -> Iterator[str]:
        for sequence in iter_sequences(lattice, 4):
            chain = _spaced(lattice, sequence)
            if is_split_chain(chain) != all_indec_quasisemistable(chain):
                yield 'split versus quasisemistable on {}'.format(chain)

    return _result('split-chains', _first(failures()))


#
# stability
#
def _sample_wscs(config: SuiteConfig) -> List[BaseWeakStability]:
    rng = config.rng('wsc')
    count = max(1, config.samples // 40)
    wscs: List[BaseWeakStability] = []
    for chain in config.chains('wsc', count):
        wscs.extend([ChainMho(chain=chain), ChainOmega(chain=chain)])
    for _ in range(count):
        wscs.append(CentralCharge(
            theta=[rng.randint(-3, 3) for _ in range(config.n)],
            delta=[rng.randint(1, 3) for _ in range(config.n)],
        ))
    return wscs


def check_seesaw(config: SuiteConfig) -> CheckResult:
    def failures() -> Iterator[str]:
        for wsc in _sample_wscs(config):
            verdict = check_weak_seesaw(wsc, dim_bound=config.dim_bound)
            if not verdict.passed:
                yield 'weak see-saw fails for {!r} on {}'.format(wsc, verdict.witness)
            if isinstance(wsc, CentralCharge) and not verdict.strict_passed:
                yield 'strict see-saw fails for {!r} on {}'.format(wsc, verdict.strict_witness)

    return _result('seesaw', _first(failures()))


def check_stability_profiles(config: SuiteConfig) -> CheckResult:
    def failures() -> Iterator[str]:
        for chain in config.chains('profile', max(1, config.samples // 20)):
            for wsc in (ChainMho(chain=chain), ChainOmega(chain=chain)):
                profile = is_stability_and_constant(wsc, dim_bound=config.dim_bound)
                if not profile.coincide:
                    yield 'conditions disagree for {!r}: {}'.format(wsc, profile)

    return _result('stability-profiles', _first(failures()))


def check_sandwich(config: SuiteConfig) -> CheckResult:
    def failures() -> Iterator[str]:
        chains = config.chains('sandwich')
        for chain in chains:
            report = chain_sandwich(chain)
            if not report.passed:
                yield '{}: {}'.format(chain, report.failure)
            largest = eta_plus(ChainOmega(chain=chain))
            smallest = eta_minus(ChainMho(chain=chain))
            for other in chains[:50]:
                if not chains_equivalent(chain, other):
                    continue
                if not chain_leq(other, largest):
                    yield '{} exceeds the largest chain equivalent to {}'.format(other, chain)
                if not chain_leq(smallest, other):
                    yield '{} is below the smallest chain equivalent to {}'.format(other, chain)
        for wsc in _sample_wscs(config):
            report = wsc_sandwich(wsc, config.dim_bound)
            if not report.passed:
                yield '{!r}: {}'.format(wsc, report.failure)

    return _result('sandwich', _first(failures()))


def check_semistable_slices(config: SuiteConfig) -> CheckResult:
    def failures() -> Iterator[str]:
        for wsc in _sample_wscs(config):
            report = semistable_slice_check(wsc, config.dim_bound)
            if not report.passed:
                yield '{!r}: {}'.format(wsc, report.counterexamples[0])
            for p in cut_values(wsc):
                if not filt_description_check(wsc, p, config.dim_bound):
                    yield '{!r}: cut at {}'.format(wsc, p)

    return _result('semistable-slices', _first(failures()))


def check_wsc_filtrations(config: SuiteConfig) -> CheckResult:
    modules = config.modules(ORACLE_DIM_BOUND)

    def failures() -> Iterator[str]:
        for wsc in _sample_wscs(config):
            for module in modules:
                try:
                    hn_filtration_wsc(wsc, module, config.dim_bound)
                except HNFiltrationError as e:
                    yield '{!r} on {}: {}'.format(wsc, module, e)

    return _result('wsc-filtrations', _first(failures()))


def check_split_total(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    intervals = tuple(Module.of(x) for x in lattice.ctx.indecomposables)

    def failures() -> Iterator[str]:
        for sequence in iter_sequences(lattice, 4):
            chain = _spaced(lattice, sequence)
            split = is_split_chain(chain)
            for wsc in (ChainMho(chain=chain), ChainOmega(chain=chain)):
                total = all(is_semistable(wsc, x, config.dim_bound) for x in intervals)
                if split != total:
                    yield 'split={} but total={} for {!r}'.format(split, total, wsc)

    return _result('split-total', _first(failures()))


#
# metric
#
def check_pseudometric(config: SuiteConfig) -> CheckResult:
    rng = config.rng('metric')
    lattice = config.lattice

    def failures() -> Iterator[str]:
        for _ in range(max(config.samples, 1000)):
            a, b, c = (random_chain(lattice, rng) for _ in range(3))
            if distance(a, a) != 0:
                yield 'd(c, c) != 0 for {}'.format(a)
            if distance(a, b) != distance(b, a):
                yield 'asymmetric on {} and {}'.format(a, b)
            if distance(a, c) > distance(a, b) + distance(b, c):
                yield 'triangle inequality on {}, {}, {}'.format(a, b, c)

    return _result('pseudometric', _first(failures()))


def check_filt_formula(config: SuiteConfig) -> CheckResult:
    rng = config.rng('filt')
    lattice = config.lattice

    def failures() -> Iterator[str]:
        for _ in range(max(config.samples, 500)):
            a, b = random_chain(lattice, rng), random_chain(lattice, rng)
            if distance(a, b) != distance_filt_formula(a, b):
                yield 'formulas disagree on {} and {}'.format(a, b)

    return _result('filt-formula', _first(failures()))


def check_zero_distance(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    chains = tuple(iter_grid_chains(lattice, 3, 4, interior=False))
    rng = config.rng('zero')

    def failures() -> Iterator[str]:
        for _ in range(config.samples * 5):
            a, b = rng.choice(chains), rng.choice(chains)
            if (distance(a, b) == 0) != chains_equivalent(a, b):
                yield 'distance zero versus equivalence on {} and {}'.format(a, b)

    return _result('zero-distance', _first(failures()))


def check_chebyshev(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    points = [Fraction(k, GRID_DENOMINATOR) for k in range(1, GRID_DENOMINATOR)]

    def failures() -> Iterator[str]:
        for sequence in iter_sequences(lattice, 3):
            chains = [
                Chain(lattice, sequence, breakpoints)
                for breakpoints in itertools.combinations(points, len(sequence) - 1)
            ]
            for a, b in itertools.product(chains, repeat=2):
                if distance(a, b) != chebyshev_distance(a, b):
                    yield 'Chebyshev law on {} and {}'.format(a, b)

    return _result('chebyshev', _first(failures()))


def check_separated_family(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    family = separated_family(lattice)
    if len(family) != len(lattice):
        return _result('separated-family', '{} chains for {} classes'.format(
            len(family),
            len(lattice),
        ))

    for a, b in itertools.combinations(family, 2):
        if distance(a, b) != 1:
            return _result('separated-family', 'd({}, {}) = {}'.format(a, b, distance(a, b)))

    return _result('separated-family', None)


def _ball_probes(lattice: TorsLattice) -> Tuple[Chain, ...]:
    # both sides of the ball check only read T_t, which normalize preserves
    longest = max(len(sequence) for sequence in maximal_green_sequences(lattice))
    max_classes = min(longest, BALL_MAX_CLASSES)
    chains = iter_grid_chains(lattice, max_classes, GRID_DENOMINATOR, interior=False)

    return tuple(sorted({normalize(chain) for chain in chains}, key=str))


def check_balls(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    probes = _ball_probes(lattice)
    radii = (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8))

    def failures() -> Iterator[str]:
        for torsion_class in lattice:
            if torsion_class.is_zero or torsion_class.is_full:
                continue
            center = Chain(lattice, (lattice.top, torsion_class.id, lattice.bottom), (ZERO, ONE))
            for probe in probes:
                gap = distance(center, probe)
                for eps in radii:
                    if (gap < eps) != plateau_predicate(probe, torsion_class, eps):
                        yield 'ball of radius {} around {} at {}'.format(eps, center, probe)

    return _result('balls', _first(failures()))


def check_walls(config: SuiteConfig) -> CheckResult:
    intervals = tuple(Module.of(x) for x in config.lattice.ctx.indecomposables)
    chains = config.chains('walls', config.samples // 4 + 1)

    def failures() -> Iterator[str]:
        for chain in chains:
            walls = [wall_locus(chain, x) for x in intervals]
            if is_split_chain(chain) and not all(member for member, _ in walls):
                yield 'split chain {} misses a wall'.format(chain)
            if all_indec_quasisemistable(chain) != all(member for member, _ in walls):
                yield 'split locus differs from the intersection of walls at {}'.format(chain)
            for x, (_, bound) in zip(intervals, walls):
                for other in chains:
                    if wall_locus(other, x)[0] and distance(chain, other) < bound:
                        yield 'wall of {} closer than {} to {}'.format(x, bound, chain)

    return _result('walls', _first(failures()))


def check_nerve(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    complex_ = nerve(lattice)
    simplices = set(complex_.simplices)

    def failures() -> Iterator[str]:
        if list(complex_.facets) != maximal_green_sequences(lattice):
            yield 'facets differ from maximal green sequences'
        for facet in complex_.facets:
            for face in faces(facet):
                if face not in simplices:
                    yield 'face {} of {} missing'.format(face, facet)
                mapping = subsequence_map(lattice, face, facet)
                if mapping is None or not mapping.slices_contained:
                    yield 'subsequence map of {} into {}'.format(face, facet)

    return _result('nerve', _first(failures()))


def check_twin_loci(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    a, s, b = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    breakpoints = {0: (s,), 1: (a, b), 2: (a, s, b)}

    def failures() -> Iterator[str]:
        for edge in lattice.hasse_edges:
            upper, lower = lattice[edge.upper], lattice[edge.lower]
            middle = tuple(
                c for c in (edge.upper, edge.lower) if c not in (lattice.top, lattice.bottom)
            )
            chain = Chain(lattice, (lattice.top, *middle, lattice.bottom), breakpoints[len(middle)])
            if not twin_locus_member(chain, lower, upper, a, b):
                yield '{} not in the twin locus of {} and {}'.format(chain, lower, upper)
            elif not wall_locus(chain, Module.of(edge.brick))[0]:
                yield 'brick {} not quasisemistable on {}'.format(edge.brick, chain)

    return _result('twin-loci', _first(failures()))


#
# chambers
#
@to_tuple
def _grid_neighbours(chain: Chain, step: Fraction) -> Iterator[Chain]:
    """
    Every chain with the same classes whose breakpoints each move by at most
    ``step``, on the grid of multiples of ``step``.
    """
    for offsets in itertools.product((-step, ZERO, step), repeat=chain.m):
        breakpoints = tuple(x + offset for x, offset in zip(chain.breakpoints, offsets))
        yield Chain(chain.lattice, chain.classes, breakpoints)


def _moves(chain: Chain, probe: Chain) -> int:
    return sum(1 for x, y in zip(chain.breakpoints, probe.breakpoints) if x != y)


def check_chamber_constancy(config: SuiteConfig) -> CheckResult:
    """
    Each maximal green sequence, evenly spaced, against all grid neighbours
    inside the radius ``2 * step`` below half the breakpoint gap: small
    modules on the whole neighbourhood and larger ones on single moves.
    """
    lattice = config.lattice
    extra = config.chains('chamber', config.samples // 10 + 1)

    def failures() -> Iterator[str]:
        for sequence in maximal_green_sequences(lattice):
            chain = _spaced(lattice, sequence)
            step = Fraction(1, GRID_DENOMINATOR * len(sequence))
            eps = 2 * step
            neighbours = _grid_neighbours(chain, step)
            single_moves = tuple(probe for probe in neighbours if _moves(chain, probe) <= 1)
            passes = (
                (neighbours, extra, min(config.dim_bound, GRID_DIM_BOUND)),
                (single_moves, (), min(config.dim_bound, ORACLE_DIM_BOUND)),
            )
            for near, far, dim_bound in passes:
                report = chamber_local_constancy(chain, eps, near + far, dim_bound)
                if report.probes_in_ball < len(near):
                    yield 'only {} probes near {}'.format(report.probes_in_ball, chain)
                if not report.passed:
                    failure = report.failures[0]
                    yield 'HN filtration of {} changes at {}'.format(
                        failure.module,
                        failure.probe,
                    )

    return _result('chamber-constancy', _first(failures()))


def check_refinements(config: SuiteConfig) -> CheckResult:
    lattice = config.lattice
    radii = (Fraction(1, 8), Fraction(1, 64))

    def failures() -> Iterator[str]:
        for sequence in iter_sequences(lattice, 4):
            chain = _spaced(lattice, sequence)
            if is_chamber(chain):
                continue
            for eps in radii:
                refinement = refining_probe(chain, eps)
                if distance(chain, refinement.probe) >= eps:
                    yield 'refinement of {} leaves the ball of radius {}'.format(chain, eps)
                if refinement.before.shape == refinement.after.shape:
                    yield 'refinement of {} keeps the filtration of {}'.format(
                        chain,
                        refinement.module,
                    )

    return _result('refinements', _first(failures()))


Check = Callable[[SuiteConfig], CheckResult]

SUITES: Dict[str, Tuple[Check, ...]] = {
    'core': (
        check_torsion_counts,
        check_oracle_equivalence,
        check_brick_labels,
        check_mgs_count,
        check_torsion_subobjects,
        check_hom_duality,
        check_hn_filtrations,
        check_mho_omega_laws,
        check_normalize,
        check_chain_order,
        check_split_chains,
    ),
    'stability': (
        check_seesaw,
        check_stability_profiles,
        check_sandwich,
        check_semistable_slices,
        check_wsc_filtrations,
        check_split_total,
    ),
    'metric': (
        check_pseudometric,
        check_filt_formula,
        check_zero_distance,
        check_chebyshev,
        check_separated_family,
        check_balls,
        check_walls,
        check_nerve,
        check_twin_loci,
    ),
    'chambers': (
        check_chamber_constancy,
        check_refinements,
    ),
}


def run_suite(name: str, config: SuiteConfig) -> List[CheckResult]:
    if name == 'all':
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError('Unknown suite {!r}: expected one of {}'.format(
            name,
            ', '.join(list(SUITES) + ['all']),
        ))

    results = []
    for suite in names:
        for check in SUITES[suite]:
            logger.debug('Running %s/%s for n=%d', suite, check.__name__, config.n)
            result = check(config)
            name = '{}/{}'.format(suite, result.name)
            results.append(CheckResult(name, result.passed, result.detail))

    return results
