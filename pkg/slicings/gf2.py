"""
Brute-force linear algebra over the two-element field.

Representations are stored with row vectors: ``maps[i]`` has shape
``dims[i] x dims[i+1]`` and sends ``v`` to ``v @ maps[i]``.  Everything here
is independent of the combinatorial rules in :mod:`slicings.interval` and is
used to check them.
"""
import functools
import itertools
import logging
from typing import (
    Callable,
    Iterator,
    List,
    Sequence,
    Tuple,
)

import numpy as np

from slicings.constants import (
    DEFAULT_DIM_BOUND,
)
from slicings.exceptions import (
    DimensionBoundExceeded,
    NotASubrepresentation,
)
from slicings.interval import (
    Interval,
    Module,
)

logger = logging.getLogger(__name__)

SubspaceKey = Tuple[Tuple[int, ...], ...]


def as_gf2(matrix, cols: int = None) -> np.ndarray:
    array = np.asarray(matrix, dtype=np.int64) % 2
    if array.ndim == 1:
        if array.size == 0 and cols is not None:
            return np.zeros((0, cols), dtype=np.uint8)
        array = array.reshape(1, -1)

    return array.astype(np.uint8)


def gf2_mul(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    product = left.astype(np.int64) @ right.astype(np.int64)

    return (product % 2).astype(np.uint8)


def row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """
    Reduced row echelon form over GF(2).  Returns the nonzero rows and the
    pivot columns.
    """
    reduced = as_gf2(matrix).copy()
    rows, cols = reduced.shape
    pivots: List[int] = []
    pivot_row = 0

    for col in range(cols):
        if pivot_row == rows:
            break

        candidates = np.nonzero(reduced[pivot_row:, col])[0]
        if len(candidates) == 0:
            continue

        found = pivot_row + int(candidates[0])
        if found != pivot_row:
            reduced[[pivot_row, found]] = reduced[[found, pivot_row]]

        for row in np.nonzero(reduced[:, col])[0]:
            if row != pivot_row:
                reduced[row] ^= reduced[pivot_row]

        pivots.append(col)
        pivot_row += 1

    return reduced[:pivot_row], tuple(pivots)


def rank(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0

    _, pivots = row_reduce(matrix)

    return len(pivots)


def null_space(matrix: np.ndarray) -> np.ndarray:
    """
    Basis (as rows) of ``{v : matrix @ v = 0}``.
    """
    matrix = as_gf2(matrix)
    cols = matrix.shape[1]
    reduced, pivots = row_reduce(matrix)
    free = [col for col in range(cols) if col not in pivots]

    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, free_col in enumerate(free):
        basis[k, free_col] = 1
        for i, pivot in enumerate(pivots):
            basis[k, pivot] = reduced[i, free_col]

    return basis


def left_kernel(matrix: np.ndarray) -> np.ndarray:
    """
    Basis (as rows) of ``{v : v @ matrix = 0}``.
    """
    return null_space(as_gf2(matrix).T)


def residual_map(basis: np.ndarray, dim: int) -> np.ndarray:
    """
    Square matrix ``Q`` with ``w @ Q = 0`` iff ``w`` lies in the row space of
    ``basis`` (which must be in reduced row echelon form).
    """
    residual = np.eye(dim, dtype=np.uint8)
    reduced, pivots = row_reduce(basis) if basis.shape[0] else (basis, ())
    for row, pivot in zip(reduced, pivots):
        residual[pivot] ^= row

    return residual


def iter_subspaces(dim: int) -> Iterator[np.ndarray]:
    """
    Every subspace of ``GF(2)^dim`` exactly once, as a reduced row echelon
    basis.
    """
    for size in range(dim + 1):
        for pivots in itertools.combinations(range(dim), size):
            free_slots = [
                (i, col)
                for i, pivot in enumerate(pivots)
                for col in range(pivot + 1, dim)
                if col not in pivots
            ]
            for values in itertools.product((0, 1), repeat=len(free_slots)):
                basis = np.zeros((size, dim), dtype=np.uint8)
                for i, pivot in enumerate(pivots):
                    basis[i, pivot] = 1
                for (i, col), value in zip(free_slots, values):
                    basis[i, col] = value

                yield basis


class Rep:
    """
    A representation of the linear quiver over GF(2).
    """
    __slots__ = ('dims', 'maps')

    def __init__(self, dims: Sequence[int], maps: Sequence[np.ndarray]):
        dims = tuple(int(d) for d in dims)
        if len(dims) == 0:
            raise ValueError('A representation needs at least one vertex')
        if any(d < 0 for d in dims):
            raise ValueError('Dimensions must be nonnegative: got {}'.format(dims))
        if len(maps) != len(dims) - 1:
            raise ValueError('Expected {} maps for {} vertices: got {}'.format(
                len(dims) - 1,
                len(dims),
                len(maps),
            ))

        frozen = []
        for i, matrix in enumerate(maps):
            matrix = as_gf2(matrix, cols=dims[i + 1]).reshape(dims[i], dims[i + 1])
            matrix.flags.writeable = False
            frozen.append(matrix)

        self.dims = dims
        self.maps = tuple(frozen)

    def __repr__(self):  # pragma: no cover
        return '<Rep dims={}>'.format(self.dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def composite(self, a: int, b: int) -> np.ndarray:
        """
        Map from vertex ``a`` to vertex ``b`` (zero based, ``a <= b``).
        """
        result = np.eye(self.dims[a], dtype=np.uint8)
        for i in range(a, b):
            result = gf2_mul(result, self.maps[i])

        return result


class SubRep:
    """
    A family of subspaces, one per vertex, each stored as a reduced row
    echelon basis.
    """
    __slots__ = ('bases',)

    def __init__(self, bases: Sequence[np.ndarray]):
        normalized = []
        for basis in bases:
            basis = np.asarray(basis, dtype=np.uint8)
            if basis.shape[0]:
                basis, _ = row_reduce(basis)
            basis.flags.writeable = False
            normalized.append(basis)

        self.bases = tuple(normalized)

    def __repr__(self):  # pragma: no cover
        return '<SubRep dims={}>'.format(self.dims)

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(basis.shape[0] for basis in self.bases)

    @property
    def key(self) -> Tuple[SubspaceKey, ...]:
        return tuple(
            tuple(tuple(int(x) for x in row) for row in basis)
            for basis in self.bases
        )

    def issuperset(self, other: 'SubRep') -> bool:
        return all(
            rank(np.vstack([mine, theirs])) == mine.shape[0]
            for mine, theirs in zip(self.bases, other.bases)
            if theirs.shape[0]
        )


def _decompose_ranks(n: int, ranks: Callable[[int, int], int]) -> Module:
    @functools.lru_cache(maxsize=None)
    def r(a: int, b: int) -> int:
        if a < 0 or b >= n:
            return 0
        return ranks(a, b)

    summands = []
    for a in range(n):
        for b in range(a, n):
            multiplicity = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if multiplicity < 0:  # pragma: no cover
                raise ValueError('Negative multiplicity for [{},{}]'.format(a + 1, b + 1))
            summands.extend([Interval(a + 1, b + 1)] * multiplicity)

    return Module(summands)


def module_to_rep(module: Module, n: int) -> Rep:
    """
    Direct sum of interval representations; the basis at each vertex follows
    the sorted summands of ``module``.
    """
    occurrences = [
        [s for s, summand in enumerate(module.summands) if summand.a <= vertex <= summand.b]
        for vertex in range(1, n + 1)
    ]
    dims = [len(basis) for basis in occurrences]

    maps = []
    for i in range(n - 1):
        matrix = np.zeros((dims[i], dims[i + 1]), dtype=np.uint8)
        targets = {s: q for q, s in enumerate(occurrences[i + 1])}
        for p, s in enumerate(occurrences[i]):
            if s in targets:
                matrix[p, targets[s]] = 1
        maps.append(matrix)

    return Rep(dims, maps)


def decompose_rep(rep: Rep) -> Module:
    """
    Interval decomposition from ranks of composite maps.
    """
    return _decompose_ranks(rep.n, lambda a, b: rank(rep.composite(a, b)))


def subrep_class(rep: Rep, sub: SubRep) -> Module:
    def ranks(a: int, b: int) -> int:
        basis = sub.bases[a]
        if basis.shape[0] == 0:
            return 0
        return rank(gf2_mul(basis, rep.composite(a, b)))

    return _decompose_ranks(rep.n, ranks)


def validate_subrep(rep: Rep, sub: SubRep) -> None:
    if len(sub.bases) != rep.n:
        raise NotASubrepresentation('Expected {} subspaces: got {}'.format(rep.n, len(sub.bases)))

    for i, (basis, dim) in enumerate(zip(sub.bases, rep.dims)):
        if basis.shape[0] and basis.shape[1] != dim:
            raise NotASubrepresentation(
                'Subspace at vertex {} lives in dimension {}, expected {}'.format(
                    i + 1,
                    basis.shape[1],
                    dim,
                )
            )

    for i in range(rep.n - 1):
        basis = sub.bases[i]
        if basis.shape[0] == 0:
            continue
        image = gf2_mul(basis, rep.maps[i])
        outside = gf2_mul(image, residual_map(sub.bases[i + 1], rep.dims[i + 1]))
        if outside.any():
            raise NotASubrepresentation(
                'Subspace at vertex {} is not mapped into the subspace at vertex {}'.format(
                    i + 1,
                    i + 2,
                )
            )


def quotient(rep: Rep, sub: SubRep) -> Module:
    """
    Interval decomposition of ``rep / sub``.
    """
    validate_subrep(rep, sub)

    def ranks(a: int, b: int) -> int:
        target = sub.bases[b]
        stacked = rep.composite(a, b)
        if target.shape[0]:
            stacked = np.vstack([stacked, target])
        return rank(stacked) - target.shape[0]

    return _decompose_ranks(rep.n, ranks)


def validate_dim_bound(total_dim: int, dim_bound: int) -> None:
    if total_dim > dim_bound:
        raise DimensionBoundExceeded(
            'Total dimension {} exceeds the bound {}; raise `dim_bound` to scan it'.format(
                total_dim,
                dim_bound,
            )
        )


def _iter_subreps(rep: Rep) -> Iterator[Tuple[np.ndarray, ...]]:
    # Choose subspaces from the last vertex backwards: the subspace at vertex
    # i ranges over subspaces of the preimage of the one at vertex i + 1.
    def descend(i: int, chosen: Tuple[np.ndarray, ...]) -> Iterator[Tuple[np.ndarray, ...]]:
        if i < 0:
            yield chosen
            return

        if i == rep.n - 1:
            ambient = np.eye(rep.dims[i], dtype=np.uint8)
        else:
            residual = residual_map(chosen[0], rep.dims[i + 1])
            ambient = left_kernel(gf2_mul(rep.maps[i], residual))

        for coefficients in iter_subspaces(ambient.shape[0]):
            if coefficients.shape[0]:
                basis, _ = row_reduce(gf2_mul(coefficients, ambient))
            else:
                basis = np.zeros((0, rep.dims[i]), dtype=np.uint8)
            yield from descend(i - 1, (basis,) + chosen)

    yield from descend(rep.n - 1, ())


def subreps(rep: Rep, dim_bound: int = DEFAULT_DIM_BOUND) -> List[Tuple[SubRep, Module]]:
    """
    Every subrepresentation of ``rep`` (deduplicated by subspaces) with the
    isomorphism class of the submodule, in canonical order.
    """
    validate_dim_bound(rep.total_dim, dim_bound)

    found = sorted((SubRep(bases) for bases in _iter_subreps(rep)), key=lambda sub: sub.key)
    logger.debug('Found %d subrepresentations for dims %s', len(found), rep.dims)

    return [(sub, subrep_class(rep, sub)) for sub in found]


def hom_dim(source: Rep, target: Rep) -> int:
    """
    Dimension of the space of intertwiners, from the linear system
    ``maps1[i] @ f[i+1] = f[i] @ maps2[i]``.
    """
    if source.n != target.n:
        raise ValueError('Representations live on different quivers')

    n = source.n
    variables = [
        (vertex, p, q)
        for vertex in range(n)
        for p in range(source.dims[vertex])
        for q in range(target.dims[vertex])
    ]
    if not variables:
        return 0

    columns = []
    for vertex, p, q in variables:
        blocks = []
        for i in range(n - 1):
            equation = np.zeros((source.dims[i], target.dims[i + 1]), dtype=np.int64)
            if vertex == i + 1:
                equation[:, q] += source.maps[i][:, p]
            if vertex == i:
                equation[p, :] += target.maps[i][q, :]
            blocks.append(equation.reshape(-1) % 2)
        columns.append(np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.int64))

    system = np.stack(columns, axis=1).astype(np.uint8)

    return len(variables) - rank(system)


def _interval_rep(interval: Interval, n: int) -> Rep:
    return module_to_rep(Module.of(interval), n)


def ext_dim(source: Rep, target: Rep) -> int:
    """
    Dimension of ``Ext^1(source, target)``.  Each interval summand ``[x,y]``
    of the source has the projective resolution
    ``0 -> P_{y+1} -> P_x -> [x,y] -> 0`` with ``P_i = [i,n]``, so
    ``ext = hom(P_{y+1}, N) - hom(P_x, N) + hom([x,y], N)``.
    """
    if source.n != target.n:
        raise ValueError('Representations live on different quivers')

    n = source.n
    total = 0
    for interval, multiplicity in decompose_rep(source).multiplicities():
        if interval.b == n:
            continue
        cover = _interval_rep(Interval(interval.a, n), n)
        syzygy = _interval_rep(Interval(interval.b + 1, n), n)
        dim = (
            hom_dim(syzygy, target)
            - hom_dim(cover, target)
            + hom_dim(_interval_rep(interval, n), target)
        )
        total += multiplicity * dim

    return total


def module_hom_dim(source: Module, target: Module, n: int) -> int:
    return hom_dim(module_to_rep(source, n), module_to_rep(target, n))


def module_ext_dim(source: Module, target: Module, n: int) -> int:
    return ext_dim(module_to_rep(source, n), module_to_rep(target, n))


def enumerate_ses(module: Module,
                  n: int,
                  *,
                  proper: bool = True,
                  dim_bound: int = DEFAULT_DIM_BOUND) -> List[Tuple[Module, Module, Module]]:
    """
    One triple ``(L, M, N)`` per subrepresentation ``L`` of ``M`` with
    ``N = M / L``.  With ``proper`` the triples where ``L`` or ``N`` is zero
    are left out.
    """
    rep = module_to_rep(module, n)
    triples = []
    for sub, sub_class in subreps(rep, dim_bound):
        quotient_class = quotient(rep, sub)
        if proper and (sub_class.is_zero or quotient_class.is_zero):
            continue
        triples.append((sub_class, module, quotient_class))

    return triples


def subobject_pairs(module: Module,
                    n: int,
                    dim_bound: int = DEFAULT_DIM_BOUND) -> Tuple[Tuple[Module, Module], ...]:
    """
    Distinct ``(submodule, quotient)`` isomorphism class pairs of ``module``,
    including the trivial ones.
    """
    validate_dim_bound(module.dim, dim_bound)

    return _subobject_pairs(module, n)


@functools.lru_cache(maxsize=4096)
def _subobject_pairs(module: Module, n: int) -> Tuple[Tuple[Module, Module], ...]:
    rep = module_to_rep(module, n)
    pairs = {
        (sub_class, quotient(rep, sub))
        for sub, sub_class in subreps(rep, dim_bound=module.dim)
    }

    return tuple(sorted(pairs))


def maximal_subrep(rep: Rep,
                   predicate: Callable[[Module], bool],
                   dim_bound: int = DEFAULT_DIM_BOUND) -> Tuple[SubRep, Module]:
    """
    The subrepresentation whose class satisfies ``predicate`` and contains
    every other such subrepresentation.  Raises ``ValueError`` when no single
    maximal one exists.
    """
    candidates = [(sub, cls) for sub, cls in subreps(rep, dim_bound) if predicate(cls)]
    for sub, cls in candidates:
        if all(sub.issuperset(other) for other, _ in candidates):
            return sub, cls

    raise ValueError('No unique maximal subrepresentation among {} candidates'.format(
        len(candidates),
    ))
