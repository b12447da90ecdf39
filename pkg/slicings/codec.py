"""
JSON, DOT and CSV documents for lattices, chains, weak stability conditions
and nerves.  Rationals are always written as exact ``"p/q"`` strings.
"""
import csv
from fractions import (
    Fraction,
)
import io
import json
from typing import (
    Any,
    Dict,
    List,
    Sequence,
)

from slicings.base import (
    BaseWeakStability,
)
from slicings.chains import (
    Chain,
)
from slicings.exceptions import (
    DecodingError,
    IntervalError,
    InvalidChain,
    MalformedDocument,
    NoEntriesFound,
    NotATorsionClass,
    ParseError,
    QuiverSizeExceeded,
)
from slicings.grammar import (
    parse_module,
    parse_rational,
)
from slicings.interval import (
    CategoryContext,
)
from slicings.lattice import (
    TorsLattice,
    lattice_for,
)
from slicings.registry import (
    StabilityRegistry,
    registry as default_registry,
)
from slicings.space import (
    NerveComplex,
)
from slicings.utils.numeric import (
    format_rational,
)

Document = Dict[str, Any]


def _child(path: str, key: Any) -> str:
    if isinstance(key, int):
        return '{}[{}]'.format(path, key)
    if not path:
        return key
    return '{}.{}'.format(path, key)


def _require(document: Any, key: str, path: str) -> Any:
    if not isinstance(document, dict):
        raise MalformedDocument(path, 'expected an object')
    if key not in document:
        raise MalformedDocument(_child(path, key), 'missing field')
    return document[key]


def _require_list(value: Any, path: str) -> List[Any]:
    if not isinstance(value, list):
        raise MalformedDocument(path, 'expected a list: got {}'.format(type(value).__name__))
    return value


def _require_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(path, 'expected an integer: got {!r}'.format(value))
    return value


class DocumentCodec:
    """
    Wraps a :class:`~slicings.registry.StabilityRegistry` to read and write
    the documents exchanged by the command line tool.
    """
    def __init__(self, registry: StabilityRegistry):
        self._registry = registry

    #
    # Lattices
    #
    def decode_lattice(self, n: Any, path: str = 'n') -> TorsLattice:
        n = _require_int(n, path)
        try:
            return lattice_for(n)
        except (IntervalError, QuiverSizeExceeded) as e:
            raise MalformedDocument(path, str(e)) from e

    def encode_lattice(self, lattice: TorsLattice) -> Document:
        return {
            'n': lattice.n,
            'classes': [
                {'id': torsion_class.id, 'members': [str(x) for x in torsion_class.intervals]}
                for torsion_class in lattice
            ],
            'hasse': [
                {'upper': edge.upper, 'lower': edge.lower, 'brick': str(edge.brick)}
                for edge in lattice.hasse_edges
            ],
        }

    def lattice_to_dot(self, lattice: TorsLattice) -> str:
        lines = ['digraph tors {', '  rankdir=TB;']
        for torsion_class in lattice:
            lines.append('  {} [label="{}: {}"];'.format(
                torsion_class.id,
                torsion_class.id,
                str(torsion_class),
            ))
        for edge in lattice.hasse_edges:
            lines.append('  {} -> {} [label="{}"];'.format(edge.upper, edge.lower, edge.brick))
        lines.append('}')

        return '\n'.join(lines) + '\n'

    #
    # Chains
    #
    def _decode_members(self, ctx: CategoryContext, members: Any, path: str) -> int:
        bits = 0
        for k, text in enumerate(_require_list(members, path)):
            member_path = _child(path, k)
            if not isinstance(text, str):
                raise MalformedDocument(member_path, 'expected an interval string')
            try:
                module = parse_module(text)
                summands = module.summands
                if len(summands) != 1:
                    raise MalformedDocument(
                        member_path,
                        'expected a single interval: got {!r}'.format(text),
                    )
                bits |= ctx.bit(summands[0])
            except (ParseError, IntervalError) as e:
                raise MalformedDocument(member_path, str(e)) from e

        return bits

    def _decode_rational(self, value: Any, path: str) -> Fraction:
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if not isinstance(value, str):
            raise MalformedDocument(
                path,
                'expected a rational string "p/q": got {!r}'.format(value),
            )
        try:
            return parse_rational(value)
        except ParseError as e:
            raise MalformedDocument(path, str(e)) from e

    def decode_chain(self, document: Any, path: str = '') -> Chain:
        lattice = self.decode_lattice(_require(document, 'n', path), _child(path, 'n'))
        classes_path = _child(path, 'classes')
        classes = []
        class_docs = _require_list(_require(document, 'classes', path), classes_path)
        for k, members in enumerate(class_docs):
            class_path = _child(classes_path, k)
            bits = self._decode_members(lattice.ctx, members, class_path)
            try:
                classes.append(lattice.id_of(bits))
            except NotATorsionClass as e:
                raise MalformedDocument(class_path, str(e)) from e

        breakpoints_path = _child(path, 'breakpoints')
        breakpoint_docs = _require_list(_require(document, 'breakpoints', path), breakpoints_path)
        breakpoints = tuple(
            self._decode_rational(value, _child(breakpoints_path, k))
            for k, value in enumerate(breakpoint_docs)
        )

        try:
            return Chain(lattice, tuple(classes), breakpoints)
        except InvalidChain as e:
            raise MalformedDocument(path, str(e)) from e

    def encode_chain(self, chain: Chain) -> Document:
        return {
            'n': chain.lattice.n,
            'classes': [
                [str(x) for x in chain.torsion_class(j).intervals]
                for j in range(chain.m + 1)
            ],
            'breakpoints': [format_rational(x) for x in chain.breakpoints],
        }

    #
    # Weak stability conditions
    #
    def _decode_field(self, key: str, value: Any, path: str) -> Any:
        if key == 'chain':
            return self.decode_chain(value, path)

        return [
            _require_int(entry, _child(path, k))
            for k, entry in enumerate(_require_list(value, path))
        ]

    def decode_wsc(self, document: Any, path: str = '') -> BaseWeakStability:
        kind = _require(document, 'kind', path)
        kind_path = _child(path, 'kind')
        if not isinstance(kind, str):
            raise MalformedDocument(kind_path, 'expected a string')
        try:
            cls = self._registry.get_class(kind)
        except NoEntriesFound as e:
            raise MalformedDocument(kind_path, str(e)) from e

        kwargs = {}
        for key, value in document.items():
            if key == 'kind':
                continue
            if key.startswith('_') or getattr(cls, key, False) is not None:
                raise MalformedDocument(
                    _child(path, key),
                    'unknown field for kind {!r}'.format(kind),
                )
            kwargs[key] = self._decode_field(key, value, _child(path, key))

        try:
            return cls(**kwargs)
        except (TypeError, ValueError) as e:
            raise MalformedDocument(path, str(e)) from e

    def encode_wsc(self, wsc: BaseWeakStability) -> Document:
        document: Document = {'kind': self._registry.kind_of(wsc)}
        for key, value in wsc.fields().items():
            if isinstance(value, Chain):
                document[key] = self.encode_chain(value)
            else:
                document[key] = list(value)

        return document

    #
    # Nerves and matrices
    #
    def encode_nerve(self, complex_: NerveComplex) -> Document:
        return {
            'n': complex_.lattice.n,
            'f_vector': list(complex_.f_vector),
            'facets': [list(facet) for facet in complex_.facets],
        }

    def matrix_to_csv(self, labels: Sequence[str], matrix: Sequence[Sequence[Fraction]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow([''] + list(labels))
        for label, row in zip(labels, matrix):
            writer.writerow([label] + [format_rational(value) for value in row])

        return buffer.getvalue()

    #
    # Files
    #
    def load(self, path: str) -> Any:
        try:
            with open(path) as handle:
                return json.load(handle)
        except OSError as e:
            raise DecodingError('Cannot read {}: {}'.format(path, e.strerror)) from e
        except json.JSONDecodeError as e:
            raise DecodingError('{} is not valid JSON: {}'.format(path, e)) from e

    def dumps(self, document: Document) -> str:
        return json.dumps(document, indent=2, sort_keys=True) + '\n'


default_codec = DocumentCodec(default_registry)

decode_chain = default_codec.decode_chain
encode_chain = default_codec.encode_chain
decode_wsc = default_codec.decode_wsc
encode_wsc = default_codec.encode_wsc
