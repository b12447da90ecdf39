from hypothesis import (
    assume,
    given,
    settings,
)
import numpy as np
import pytest

from slicings.exceptions import (
    DimensionBoundExceeded,
    NotASubrepresentation,
)
from slicings.gf2 import (
    Rep,
    SubRep,
    decompose_rep,
    enumerate_ses,
    ext_dim,
    hom_dim,
    iter_subspaces,
    maximal_subrep,
    module_ext_dim,
    module_hom_dim,
    module_to_rep,
    null_space,
    quotient,
    rank,
    row_reduce,
    subobject_pairs,
    subreps,
)
from slicings.interval import (
    Module,
)
from slicings.lattice import (
    lattice_for,
    torsion_subobject,
)

from ..common.strategies import (
    modules_for,
)
from ..common.unit import (
    module,
)


def test_rank_and_null_space_over_gf2():
    matrix = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8)

    # The rows sum to zero mod 2
    assert rank(matrix) == 2
    kernel = null_space(matrix)
    assert kernel.shape[0] == 1
    assert not (matrix.astype(int) @ kernel[0].astype(int) % 2).any()


def test_row_reduce_returns_pivots():
    reduced, pivots = row_reduce(np.array([[0, 1, 1], [1, 1, 0]], dtype=np.uint8))

    assert pivots == (0, 1)
    assert reduced.tolist() == [[1, 0, 1], [0, 1, 1]]


@pytest.mark.parametrize(
    'dim, expected',
    (
        (0, 1),
        (1, 2),
        (2, 5),
        (3, 16),
    ),
)
def test_iter_subspaces_counts_all_subspaces(dim, expected):
    assert sum(1 for _ in iter_subspaces(dim)) == expected


def test_rep_validates_shapes():
    with pytest.raises(ValueError, match='Expected 1 maps for 2 vertices'):
        Rep((1, 1), ())
    with pytest.raises(ValueError, match='nonnegative'):
        Rep((1, -1), (np.zeros((1, 0)),))


@pytest.mark.parametrize(
    'module_str, expected',
    (
        ('[1,2]', 3),
        ('[1,1]+[2,2]', 4),
        ('[1,1]', 2),
        ('[1,2]+[2,2]', 7),
    ),
)
def test_subrep_counts(module_str, expected):
    assert len(subreps(module_to_rep(module(module_str), 2))) == expected


def test_subreps_respect_the_dimension_bound():
    rep = module_to_rep(module('[1,2]*3'), 2)
    with pytest.raises(DimensionBoundExceeded, match='exceeds the bound 4'):
        subreps(rep, dim_bound=4)


def test_quotient_of_interval_by_its_socle():
    rep = module_to_rep(module('[1,2]'), 2)
    socle = SubRep([np.zeros((0, 1), dtype=np.uint8), np.array([[1]], dtype=np.uint8)])

    assert quotient(rep, socle) == module('[1,1]')


def test_quotient_rejects_non_subrepresentations():
    rep = module_to_rep(module('[1,2]'), 2)
    top = SubRep([np.array([[1]], dtype=np.uint8), np.zeros((0, 1), dtype=np.uint8)])

    with pytest.raises(NotASubrepresentation, match='is not mapped into'):
        quotient(rep, top)


@pytest.mark.parametrize(
    'source, target, n, expected',
    (
        ('[1,2]', '[1,1]', 2, 1),
        ('[1,1]', '[1,2]', 2, 0),
        ('[1,2]', '[1,2]', 2, 1),
        ('[1,2]+[2,2]', '[1,2]', 2, 2),
        ('[2,3]', '[1,2]', 3, 1),
    ),
)
def test_hom_dim(source, target, n, expected):
    assert module_hom_dim(module(source), module(target), n) == expected


@pytest.mark.parametrize(
    'source, target, n, expected',
    (
        ('[1,1]', '[2,2]', 2, 1),
        ('[2,2]', '[1,1]', 2, 0),
        ('[1,2]', '[2,2]', 2, 0),
        ('[1,1]*2', '[2,2]', 2, 2),
        ('[1,2]', '[2,3]', 3, 1),
        ('[1,3]', '[2,2]', 3, 0),
    ),
)
def test_ext_dim(source, target, n, expected):
    assert module_ext_dim(module(source), module(target), n) == expected


def test_hom_and_ext_reject_mismatched_quivers():
    left = module_to_rep(module('[1,1]'), 1)
    right = module_to_rep(module('[1,1]'), 2)

    with pytest.raises(ValueError):
        hom_dim(left, right)
    with pytest.raises(ValueError):
        ext_dim(left, right)


@settings(deadline=None, max_examples=50)
@given(modules_for(3))
def test_decompose_rep_recovers_the_module(m):
    assert decompose_rep(module_to_rep(m, 3)) == m


def test_enumerate_ses_for_an_interval():
    assert enumerate_ses(module('[1,2]'), 2) == [
        (module('[2,2]'), module('[1,2]'), module('[1,1]')),
    ]


def test_enumerate_ses_for_a_split_module():
    m = module('[1,1]+[2,2]')
    triples = enumerate_ses(m, 2)

    assert triples == [
        (module('[2,2]'), m, module('[1,1]')),
        (module('[1,1]'), m, module('[2,2]')),
    ]


def test_enumerate_ses_can_include_trivial_sequences():
    triples = enumerate_ses(module('[1,2]'), 2, proper=False)

    assert (Module(), module('[1,2]'), module('[1,2]')) in triples
    assert (module('[1,2]'), module('[1,2]'), Module()) in triples
    assert len(triples) == 3


def test_subobject_pairs_are_deduplicated():
    pairs = subobject_pairs(module('[1,1]*2'), 2)

    assert pairs == (
        (Module(), module('[1,1]*2')),
        (module('[1,1]'), module('[1,1]')),
        (module('[1,1]*2'), Module()),
    )


@settings(deadline=None, max_examples=50)
@given(modules_for(3))
def test_subobject_pairs_add_up_to_the_module(m):
    assume(m.dim <= 5)

    for sub, quot in subobject_pairs(m, 3):
        assert (sub + quot).dimension_vector(3) == m.dimension_vector(3)


@settings(deadline=None, max_examples=30)
@given(modules_for(2))
def test_maximal_subrep_is_the_torsion_subobject(m):
    lattice = lattice_for(2)
    rep = module_to_rep(m, 2)

    for torsion_class in lattice:
        _, found = maximal_subrep(rep, torsion_class.contains)
        expected, _ = torsion_subobject(torsion_class, m)
        assert found == expected
