import abc
import copy
import functools
from typing import (
    Any,
    Callable,
    Dict,
    Optional,
    Type,
    Union,
)

from .base import (
    BaseWeakStability,
)
from .exceptions import (
    MultipleEntriesFound,
    NoEntriesFound,
)
from .stability import (
    CentralCharge,
    ChainMho,
    ChainOmega,
)

Lookup = Union[str, Callable[[str], bool]]


class Copyable(abc.ABC):
    @abc.abstractmethod
    def copy(self):
        pass

    def __copy__(self):
        return self.copy()


class PredicateMapping(Copyable):
    """
    Values keyed by predicates over kind strings.  A kind is looked up by
    running every predicate on it; exactly one must match.  Predicates may
    carry a label so they can be removed by name.
    """
    def __init__(self, name: str) -> None:
        self._name = name
        self._values: Dict[Callable[[str], bool], Any] = {}
        self._labels: Dict[str, Callable[[str], bool]] = {}

    def add(self,
            predicate: Callable[[str], bool],
            value: Any,
            label: Optional[str] = None) -> None:
        if predicate in self._values:
            raise ValueError('Lookup {!r} is already registered in {}'.format(
                predicate,
                self._name,
            ))
        if label is not None:
            if label in self._labels:
                raise ValueError("Label '{}' is already taken in {}".format(label, self._name))
            self._labels[label] = predicate

        self._values[predicate] = value

    def find(self, kind: str) -> Any:
        matches = [
            (predicate, value) for predicate, value in self._values.items()
            if predicate(kind)
        ]

        if not matches:
            raise NoEntriesFound("No matching entries for '{}' in {}".format(kind, self._name))
        if len(matches) > 1:
            raise MultipleEntriesFound(
                "Multiple matching entries for '{}' in {}: {}. Remove one of the "
                "registrations or narrow its lookup.".format(
                    kind,
                    self._name,
                    ', '.join(repr(predicate) for predicate, _ in matches),
                )
            )

        _, value = matches[0]
        return value

    def remove(self, lookup_or_label: Lookup) -> None:
        """
        Removes a registration by its label or by an equal predicate, along
        with any label pointing at it.
        """
        if isinstance(lookup_or_label, str):
            try:
                predicate = self._labels.pop(lookup_or_label)
            except KeyError:
                raise KeyError("Label '{}' not found in {}".format(lookup_or_label, self._name))
        elif callable(lookup_or_label):
            predicate = lookup_or_label
            if predicate not in self._values:
                raise KeyError('Lookup {!r} not found in {}'.format(predicate, self._name))
            self._labels = {
                label: labeled for label, labeled in self._labels.items()
                if labeled != predicate
            }
        else:
            raise TypeError(
                'Lookup/label must be a callable or a value of type `str`: got {!r}'.format(
                    lookup_or_label,
                )
            )

        del self._values[predicate]

    def copy(self) -> 'PredicateMapping':
        cpy = type(self)(self._name)

        cpy._values = dict(self._values)
        cpy._labels = dict(self._labels)

        return cpy


class Equals:
    """
    Matches kinds equal to ``value``.  Equal predicates compare and hash
    alike, so a registration can be removed with a fresh instance.
    """
    __slots__ = ('value',)

    def __init__(self, value: str) -> None:
        self.value = value

    def __call__(self, kind: str) -> bool:
        return kind == self.value

    def __repr__(self) -> str:
        return '<Equals (== {!r})>'.format(self.value)

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.value == other.value  # type: ignore

    def __hash__(self) -> int:
        return hash((type(self), self.value))


class StabilityRegistry(Copyable):
    """
    Maps the ``kind`` strings of weak stability documents to the classes
    that build them.
    """
    def __init__(self):
        self._kinds = PredicateMapping('stability registry')

    def register(self, lookup: Lookup, cls: Type[BaseWeakStability], label: str = None) -> None:
        """
        Registers ``cls`` under ``lookup``, either a kind string or a
        predicate over kind strings.  A string lookup doubles as the label of
        the registration.
        """
        if not (isinstance(cls, type) and issubclass(cls, BaseWeakStability)):
            raise TypeError('Registered classes must subclass BaseWeakStability: got {!r}'.format(
                cls,
            ))

        if isinstance(lookup, str):
            self._kinds.add(Equals(lookup), cls, lookup)
        elif callable(lookup):
            self._kinds.add(lookup, cls, label)
        else:
            raise TypeError(
                'Lookup must be a callable or a value of type `str`: got {!r}'.format(lookup)
            )
        self.get_class.cache_clear()

    def unregister(self, lookup_or_label: Lookup) -> None:
        self._kinds.remove(lookup_or_label)
        self.get_class.cache_clear()

    @functools.lru_cache(maxsize=None)
    def get_class(self, kind: str) -> Type[BaseWeakStability]:
        return self._kinds.find(kind)

    def has_kind(self, kind: str) -> bool:
        """
        Returns ``True`` if a class is registered for ``kind``.  Raises
        :class:`~slicings.exceptions.MultipleEntriesFound` if several are.
        """
        try:
            self.get_class(kind)
        except NoEntriesFound:
            return False
        else:
            return True

    def kind_of(self, wsc: BaseWeakStability) -> str:
        return type(wsc).kind

    def copy(self):
        """
        Copies a registry such that registrations can be added or removed
        without affecting the original.
        """
        cpy = type(self)()

        cpy._kinds = copy.copy(self._kinds)

        return cpy


registry = StabilityRegistry()

registry.register('central_charge', CentralCharge)
registry.register('chain_mho', ChainMho)
registry.register('chain_omega', ChainOmega)
