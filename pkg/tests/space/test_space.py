from fractions import (
    Fraction,
)

from hypothesis import (
    given,
    settings,
)
import pytest

from slicings.chains import (
    hn_filtration,
    iter_sequences,
)
from slicings.exceptions import (
    InvalidChain,
    PreconditionViolation,
)
from slicings.lattice import (
    lattice_for,
    maximal_green_sequences,
)
from slicings.space import (
    ball_contains,
    chamber_local_constancy,
    chebyshev_distance,
    compactness_report,
    distance,
    distance_filt_formula,
    distance_matrix,
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

from ..common.strategies import (
    chains_for,
)
from ..common.unit import (
    ONE_SLICE,
    P1,
    S1,
    S2,
    TWO_STEP,
    TWO_STEP_SHIFTED,
    class_id,
    make_chain,
    module,
)


def test_distance_between_shifted_chains():
    assert distance(TWO_STEP, TWO_STEP_SHIFTED) == Fraction(1, 6)
    assert distance_filt_formula(TWO_STEP, TWO_STEP_SHIFTED) == Fraction(1, 6)


def test_distance_requires_a_shared_category():
    other = make_chain(1, ['A', '0'], ['1/2'])
    with pytest.raises(InvalidChain, match='different categories'):
        distance(TWO_STEP, other)


@settings(deadline=None, max_examples=100)
@given(chains_for(2), chains_for(2), chains_for(2))
def test_distance_is_a_pseudometric(first, second, third):
    assert distance(first, first) == 0
    assert distance(first, second) == distance(second, first)
    assert 0 <= distance(first, second) <= 1
    assert distance(first, third) <= distance(first, second) + distance(second, third)


@settings(deadline=None, max_examples=100)
@given(chains_for(3), chains_for(3))
def test_filt_formula_agrees_with_the_distance(first, second):
    assert distance_filt_formula(first, second) == distance(first, second)


def test_equivalent_chains_are_at_distance_zero():
    doubled = make_chain(2, ['A', P1, S1, '0'], ['1/2', '1/2', '1/2'])
    assert distance(doubled, ONE_SLICE) == 0


def test_ball_membership():
    center = make_chain(2, ['A', S2, '0'], ['0', '1'])
    probe = make_chain(2, ['A', S2, '0'], ['1/5', '9/10'])

    assert distance(center, probe) == Fraction(1, 5)
    assert ball_contains(center, Fraction(1, 4), probe)
    assert not ball_contains(center, Fraction(1, 5), probe)


@pytest.mark.parametrize('eps', (0, 1, Fraction(3, 2)))
def test_ball_radius_must_be_inside_the_unit_interval(eps):
    with pytest.raises(ValueError):
        ball_contains(TWO_STEP, eps, TWO_STEP)


def test_plateau_predicate_matches_ball_membership():
    lattice = lattice_for(2)
    s2 = lattice[class_id(2, S2)]
    center = make_chain(2, ['A', S2, '0'], ['0', '1'])
    eps = Fraction(1, 4)

    inside = make_chain(2, ['A', S2, '0'], ['1/5', '9/10'])
    outside = make_chain(2, ['A', S2, '0'], ['1/5', '1/2'])

    assert plateau_predicate(inside, s2, eps)
    assert ball_contains(center, eps, inside)
    assert not plateau_predicate(outside, s2, eps)
    assert not ball_contains(center, eps, outside)


def test_plateau_needs_room():
    s2 = lattice_for(2)[class_id(2, S2)]
    with pytest.raises(PreconditionViolation, match='leaves no plateau'):
        plateau_predicate(TWO_STEP, s2, Fraction(3, 4))


def test_nerve_of_two_vertices():
    complex_ = nerve(lattice_for(2))

    assert complex_.f_vector == (1, 3, 1)
    assert list(complex_.facets) == maximal_green_sequences(lattice_for(2))
    assert set(complex_.simplices) == set(iter_sequences(lattice_for(2)))


@pytest.mark.parametrize('n', (1, 2, 3))
def test_nerve_facets_are_maximal_green_sequences(n):
    lattice = lattice_for(n)
    assert list(nerve(lattice).facets) == maximal_green_sequences(lattice)


def test_faces_keep_the_endpoints():
    assert faces((4, 3, 1, 0)) == (
        (4, 0),
        (4, 3, 0),
        (4, 1, 0),
        (4, 3, 1, 0),
    )


def test_subsequence_map():
    lattice = lattice_for(2)
    a, s1, s2, zero = (class_id(2, spec) for spec in ('A', S1, S2, '0'))

    found = subsequence_map(lattice, (a, zero), (a, s2, zero))

    assert found.injection == (0, 2)
    assert found.surjection == (1, 1)
    assert found.slices_contained
    assert subsequence_map(lattice, (a, s1, zero), (a, s2, zero)) is None


def test_subsequence_map_rejects_reordered_classes():
    lattice = lattice_for(2)
    a, s1, p1, zero = (class_id(2, spec) for spec in ('A', S1, P1, '0'))

    assert subsequence_map(lattice, (a, s1, p1, zero), (a, p1, s1, zero)) is None


def test_chambers():
    assert is_chamber(TWO_STEP)
    assert not is_chamber(ONE_SLICE)
    assert not is_chamber(make_chain(2, ['A', S1, '0'], ['1/3', '2/3']))
    assert is_chamber(make_chain(2, ['A', P1, S1, '0'], ['1/4', '1/2', '3/4']))


@pytest.mark.parametrize(
    'module_str, expected',
    (
        ('[2,2]', (True, Fraction(0))),
        ('[1,2]', (False, Fraction(1, 6))),
        ('[1,1]', (True, Fraction(0))),
    ),
)
def test_wall_locus(module_str, expected):
    assert wall_locus(TWO_STEP, module(module_str)) == expected


def test_chamber_local_constancy():
    probes = [
        make_chain(2, ['A', S2, '0'], ['3/10', '2/3']),
        make_chain(2, ['A', S2, '0'], ['1/3', '7/10']),
        make_chain(2, ['A', S2, '0'], ['1/2', '3/4']),
        make_chain(2, ['A', '0'], ['1/2']),
    ]
    report = chamber_local_constancy(TWO_STEP, Fraction(1, 8), probes, dim_bound=3)

    assert report.probes_in_ball == 2
    assert report.passed


def test_chamber_local_constancy_preconditions():
    with pytest.raises(PreconditionViolation, match='is not a chamber'):
        chamber_local_constancy(ONE_SLICE, Fraction(1, 8), [])
    with pytest.raises(PreconditionViolation, match='half the minimal gap'):
        chamber_local_constancy(TWO_STEP, Fraction(1, 6), [])


@pytest.mark.parametrize('eps', (Fraction(1, 8), Fraction(1, 64)))
def test_refining_probe_splits_a_semistable_module(eps):
    chain = make_chain(2, ['A', S1, '0'], ['1/3', '2/3'])
    found = refining_probe(chain, eps)

    assert distance(chain, found.probe) < eps
    assert len(found.before.layers) == 1
    assert len(found.after.layers) == 2
    assert found.before == hn_filtration(chain, found.module)


def test_refining_probe_requires_a_non_chamber():
    with pytest.raises(PreconditionViolation, match='has no refinement'):
        refining_probe(TWO_STEP, Fraction(1, 8))


def test_twin_locus_member():
    lattice = lattice_for(2)
    zero, s1, p1 = (lattice[class_id(2, spec)] for spec in ('0', S1, P1))
    a, b = Fraction(1, 4), Fraction(3, 4)

    inside = make_chain(2, ['A', P1, S1, '0'], ['1/4', '1/2', '3/4'])
    outside = make_chain(2, ['A', P1, '0'], ['1/4', '1/2'])

    assert twin_locus_member(inside, zero, p1, a, b)
    assert twin_locus_member(inside, s1, p1, a, b)
    assert twin_locus_member(outside, zero, p1, a, b)
    assert not twin_locus_member(outside, s1, p1, a, b)


def test_twin_locus_preconditions():
    lattice = lattice_for(2)
    s1, s2 = (lattice[class_id(2, spec)] for spec in (S1, S2))

    with pytest.raises(PreconditionViolation, match='is not contained in'):
        twin_locus_member(TWO_STEP, s1, s2, Fraction(1, 4), Fraction(3, 4))
    with pytest.raises(PreconditionViolation, match='Expected a < b'):
        twin_locus_member(TWO_STEP, s1, s1, Fraction(3, 4), Fraction(1, 4))


@pytest.mark.parametrize('n, size', ((1, 2), (2, 5), (3, 14)))
def test_separated_family_is_one_apart(n, size):
    family = separated_family(lattice_for(n))
    matrix = distance_matrix(family)

    assert len(family) == size
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            assert value == (0 if i == j else 1)


@pytest.mark.parametrize(
    'n, classes, simplices',
    (
        (1, 2, 1),
        (2, 5, 5),
    ),
)
def test_compactness_report(n, classes, simplices):
    report = compactness_report(lattice_for(n))

    assert report.classes == classes
    assert report.simplices == simplices
    assert report.verdict.startswith('compact')


def test_chebyshev_distance_bounds_the_distance():
    assert chebyshev_distance(TWO_STEP, TWO_STEP_SHIFTED) == Fraction(1, 6)
    assert distance(TWO_STEP, TWO_STEP_SHIFTED) <= chebyshev_distance(TWO_STEP, TWO_STEP_SHIFTED)

    with pytest.raises(PreconditionViolation):
        chebyshev_distance(TWO_STEP, ONE_SLICE)
