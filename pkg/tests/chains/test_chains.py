from fractions import (
    Fraction,
)

from hypothesis import (
    given,
    settings,
    strategies as st,
)
import pytest

from slicings.chains import (
    Chain,
    all_indec_quasisemistable,
    chain_leq,
    chains_equivalent,
    from_torsion_class,
    hn_filtration,
    is_quasisemistable,
    is_split_chain,
    iter_grid_chains,
    iter_sequences,
    mho,
    mho_omega,
    normalize,
    omega,
    same_sequence,
    slice_at,
    slicing_support,
    torsion_class_at,
)
from slicings.exceptions import (
    ImproperTorsionClass,
    InvalidChain,
    ZeroModuleError,
)
from slicings.gf2 import (
    maximal_subrep,
    module_to_rep,
    subobject_pairs,
)
from slicings.interval import (
    CategoryContext,
    Module,
    iter_modules,
)
from slicings.lattice import (
    lattice_for,
)

from ..common.strategies import (
    chains_for,
    modules_for,
)
from ..common.unit import (
    ONE_SLICE,
    P1,
    S1,
    S2,
    TWO_STEP,
    TWO_STEP_HN,
    TWO_STEP_MHO_OMEGA,
    TWO_STEP_SPLIT,
    class_id,
    fractions,
    make_chain,
    module,
)


@pytest.mark.parametrize(
    'classes, breakpoints, pattern',
    (
        (['A'], [], 'at least the classes A and 0'),
        (['A', '0'], [], 'Expected 1 breakpoints for 2 classes'),
        ([S2, '0'], ['1/2'], 'must start at A and end at 0'),
        (['A', S2], ['1/2'], 'must start at A and end at 0'),
        (['A', S1, S2, '0'], ['1/4', '1/2', '3/4'], 'must strictly decrease'),
        (['A', S2, S2, '0'], ['1/4', '1/2', '3/4'], 'must strictly decrease'),
        (['A', S2, '0'], ['2/3', '1/3'], 'must be nondecreasing'),
        (['A', '0'], ['3/2'], r'must lie in \[0, 1\]'),
    ),
)
def test_malformed_chains_are_rejected(classes, breakpoints, pattern):
    with pytest.raises(InvalidChain, match=pattern):
        make_chain(2, classes, breakpoints)


def test_chain_rejects_float_breakpoints():
    lattice = lattice_for(2)
    with pytest.raises(InvalidChain, match='exact rational'):
        Chain(lattice, (lattice.top, lattice.bottom), (0.5,))


def test_chain_rejects_unknown_class_ids():
    lattice = lattice_for(2)
    with pytest.raises(InvalidChain, match='Unknown torsion class id 7'):
        Chain(lattice, (lattice.top, 7, lattice.bottom), (Fraction(1, 3), Fraction(2, 3)))


def test_chain_renders_classes_and_breakpoints():
    assert str(TWO_STEP) == '([{[1,1],[1,2],[2,2]}, {[2,2]}, {}], (1/3, 2/3))'


@pytest.mark.parametrize(
    'classes, breakpoints, expected_classes, expected_breakpoints',
    (
        (['A', S2, '0'], ['1/2', '1/2'], ['A', '0'], ['1/2']),
        (['A', P1, S1, '0'], ['1/4', '1/4', '3/4'], ['A', S1, '0'], ['1/4', '3/4']),
        (['A', P1, S1, '0'], ['0', '0', '0'], ['A', '0'], ['0']),
        (['A', S2, '0'], ['1/3', '2/3'], ['A', S2, '0'], ['1/3', '2/3']),
    ),
)
def test_normalize_drops_classes_on_empty_intervals(classes,
                                                    breakpoints,
                                                    expected_classes,
                                                    expected_breakpoints):
    chain = make_chain(2, classes, breakpoints)
    assert normalize(chain) == make_chain(2, expected_classes, expected_breakpoints)


@settings(deadline=None, max_examples=50)
@given(chains_for(2))
def test_normalize_is_idempotent_and_keeps_the_step_function(chain):
    normal = normalize(chain)

    assert normalize(normal) == normal
    assert len(set(normal.breakpoints)) == len(normal.breakpoints)
    for t in fractions('0', '1/8', '1/4', '1/3', '1/2', '2/3', '3/4', '1'):
        assert torsion_class_at(normal, t) == torsion_class_at(chain, t)


@pytest.mark.parametrize(
    't, expected',
    (
        ('0', 'A'),
        ('1/3', 'A'),
        ('1/2', S2),
        ('2/3', S2),
        ('3/4', '0'),
        ('1', '0'),
    ),
)
def test_torsion_class_at(t, expected):
    (t,) = fractions(t)
    assert torsion_class_at(TWO_STEP, t) == class_id(2, expected)


def test_endpoint_values_are_forced():
    chain = make_chain(2, ['A', S2, '0'], ['0', '1'])

    assert torsion_class_at(chain, Fraction(0)) == class_id(2, 'A')
    assert torsion_class_at(chain, Fraction(1, 2)) == class_id(2, S2)
    assert torsion_class_at(chain, Fraction(1)) == class_id(2, '0')


@pytest.mark.parametrize('module_str, layers', TWO_STEP_HN)
def test_hn_filtration_of_the_two_step_chain(module_str, layers):
    filtration = hn_filtration(TWO_STEP, module(module_str))

    assert filtration.module == module(module_str)
    assert [(str(s), str(p), str(f)) for s, p, f in (
        (layer.subobject, layer.phase, layer.factor) for layer in filtration.layers
    )] == list(layers)


@settings(deadline=None, max_examples=100)
@given(chains_for(3), modules_for(3))
def test_hn_filtrations_are_ordered_and_exhaustive(chain, m):
    filtration = hn_filtration(chain, m)

    assert filtration.layers[-1].subobject == m
    assert list(filtration.phases) == sorted(filtration.phases, reverse=True)
    assert len(set(filtration.phases)) == len(filtration.phases)
    total = Module()
    for factor in filtration.factors:
        total = total + factor
    assert total.dimension_vector(3) == m.dimension_vector(3)
    for layer in filtration.layers:
        assert is_quasisemistable(chain, layer.factor) == layer.phase


@settings(deadline=None, max_examples=100)
@given(chains_for(3), modules_for(3))
def test_first_and_last_phases_are_omega_and_mho(chain, m):
    filtration = hn_filtration(chain, m)

    assert filtration.phases[0] == omega(chain, m)
    assert filtration.phases[-1] == mho(chain, m)


@pytest.mark.parametrize('module_str, expected_mho, expected_omega', TWO_STEP_MHO_OMEGA)
def test_mho_omega_of_the_two_step_chain(module_str, expected_mho, expected_omega):
    assert mho_omega(TWO_STEP, module(module_str)) == fractions(expected_mho, expected_omega)


@pytest.mark.parametrize(
    'spec, module_str, expected',
    (
        (S2, '[1,2]', ('0', '1')),
        (S2, '[2,2]', ('1', '1')),
        (S2, '[1,1]', ('0', '0')),
        (P1, '[1,2]', ('1', '1')),
    ),
)
def test_mho_omega_of_a_constant_chain(spec, module_str, expected):
    chain = make_chain(2, ['A', spec, '0'], ['0', '1'])
    assert mho_omega(chain, module(module_str)) == fractions(*expected)


@settings(deadline=None, max_examples=100)
@given(chains_for(3), modules_for(3), modules_for(3))
def test_mho_and_omega_of_direct_sums(chain, first, second):
    mho_1, omega_1 = mho_omega(chain, first)
    mho_2, omega_2 = mho_omega(chain, second)

    assert mho_omega(chain, first + second) == (min(mho_1, mho_2), max(omega_1, omega_2))
    assert mho_1 <= omega_1


def test_phases_of_the_zero_module_are_undefined():
    with pytest.raises(ZeroModuleError):
        mho_omega(TWO_STEP, Module())
    with pytest.raises(ZeroModuleError):
        hn_filtration(TWO_STEP, Module())


def test_slicing_support_of_the_two_step_chain():
    support = slicing_support(TWO_STEP)

    assert support.phases == fractions('1/3', '2/3')
    assert support.at(Fraction(1, 3)).contains(module('[1,1]*2'))
    assert not support.at(Fraction(1, 3)).contains(module('[1,2]'))
    assert support.at(Fraction(2, 3)).contains(module('[2,2]'))
    assert support.at(Fraction(1, 2)) is None


def test_slices_of_a_constant_chain_sit_at_the_endpoints():
    chain = make_chain(2, ['A', S2, '0'], ['0', '1'])
    support = slicing_support(chain)

    assert support.phases == fractions('0', '1')
    # {S2}^⊥ at 0 and {S2} at 1
    assert support.at(Fraction(0)).contains(module('[1,1]'))
    assert support.at(Fraction(1)).contains(module('[2,2]'))


def test_slice_between_breakpoints_is_empty():
    assert slice_at(TWO_STEP, Fraction(1, 2)).members == 0


@pytest.mark.parametrize(
    'module_str, expected',
    (
        ('[1,1]', '1/3'),
        ('[2,2]', '2/3'),
        ('[2,2]*2', '2/3'),
        ('[1,2]', None),
        ('[1,1]+[2,2]', None),
    ),
)
def test_is_quasisemistable(module_str, expected):
    result = is_quasisemistable(TWO_STEP, module(module_str))
    if expected is None:
        assert result is None
    else:
        assert result == fractions(expected)[0]


def test_chain_leq():
    lower = make_chain(2, ['A', '0'], ['1/4'])
    upper = make_chain(2, ['A', '0'], ['3/4'])

    assert chain_leq(lower, upper)
    assert not chain_leq(upper, lower)
    assert chain_leq(lower, lower)


def test_chains_through_incomparable_classes_are_incomparable():
    first = make_chain(2, ['A', S1, '0'], ['1/3', '2/3'])
    second = make_chain(2, ['A', S2, '0'], ['1/3', '2/3'])

    assert not chain_leq(first, second)
    assert not chain_leq(second, first)


def test_split_chains_make_every_indecomposable_quasisemistable():
    assert is_split_chain(TWO_STEP_SPLIT)
    assert all_indec_quasisemistable(TWO_STEP_SPLIT)
    assert not is_split_chain(TWO_STEP)
    assert not all_indec_quasisemistable(TWO_STEP)


def test_equivalence_and_sequences():
    doubled = make_chain(2, ['A', P1, S1, '0'], ['1/2', '1/2', '1/2'])

    assert chains_equivalent(doubled, ONE_SLICE)
    assert same_sequence(doubled, ONE_SLICE)
    assert not chains_equivalent(TWO_STEP, ONE_SLICE)


def test_from_torsion_class():
    lattice = lattice_for(2)
    chain = from_torsion_class(lattice[class_id(2, S2)])

    assert chain == TWO_STEP


@pytest.mark.parametrize('spec', ('A', '0'))
def test_from_torsion_class_requires_a_proper_class(spec):
    with pytest.raises(ImproperTorsionClass):
        from_torsion_class(lattice_for(2)[class_id(2, spec)])


def test_iter_sequences_of_two_vertices():
    a, s1, s2, p1, zero = (class_id(2, spec) for spec in ('A', S1, S2, P1, '0'))

    assert iter_sequences(lattice_for(2)) == (
        (a, zero),
        (a, s1, zero),
        (a, s2, zero),
        (a, p1, zero),
        (a, p1, s1, zero),
    )


def test_iter_sequences_honours_the_class_bound():
    assert all(len(seq) <= 3 for seq in iter_sequences(lattice_for(3), 3))
    assert len(iter_sequences(lattice_for(2), 2)) == 1


def test_iter_grid_chains_counts():
    chains = list(iter_grid_chains(lattice_for(1), denominator=4))

    # A > 0 with one breakpoint among 1/4, 1/2, 3/4
    assert len(chains) == 3
    assert len(list(iter_grid_chains(lattice_for(1), denominator=4, interior=False))) == 5


small_modules_3 = st.sampled_from(tuple(iter_modules(CategoryContext(3), 4)))


@settings(deadline=None, max_examples=40)
@given(chains_for(3), small_modules_3)
def test_hn_factors_are_quasisemistable_at_their_phases(chain, module):
    filtration = hn_filtration(chain, module)

    for layer in filtration.layers:
        assert not layer.factor.is_zero
        assert is_quasisemistable(chain, layer.factor) == layer.phase
    for below, layer in zip(filtration.layers, filtration.layers[1:]):
        sub_quotients = subobject_pairs(layer.subobject, 3, layer.subobject.dim)
        assert (below.subobject, layer.factor) in sub_quotients


@settings(deadline=None, max_examples=40)
@given(chains_for(3), small_modules_3)
def test_hn_subobjects_are_the_maximal_torsion_subrepresentations(chain, module):
    rep = module_to_rep(module, 3)
    canonical = normalize(chain)
    expected = set()
    for j in range(canonical.m + 1):
        torsion_class = canonical.torsion_class(j)
        _, largest = maximal_subrep(rep, torsion_class.contains, module.dim)
        if not largest.is_zero:
            expected.add(largest)

    assert set(hn_filtration(chain, module).subobjects) == expected
