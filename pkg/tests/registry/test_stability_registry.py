import pytest

from slicings.base import (
    BaseWeakStability,
)
from slicings.exceptions import (
    MultipleEntriesFound,
    NoEntriesFound,
)
from slicings.registry import (
    Equals,
    StabilityRegistry,
    registry as default_registry,
)
from slicings.stability import (
    CentralCharge,
    ChainMho,
    ChainOmega,
)

from ..common.unit import (
    TWO_STEP,
)


class Constant(BaseWeakStability):
    kind = 'constant'

    value = None

    def _phase(self, module):
        return self.value


@pytest.fixture
def registry():
    return default_registry.copy()


@pytest.mark.parametrize(
    'kind, cls',
    (
        ('central_charge', CentralCharge),
        ('chain_mho', ChainMho),
        ('chain_omega', ChainOmega),
    ),
)
def test_default_registry_knows_the_builtin_kinds(kind, cls):
    assert default_registry.get_class(kind) is cls
    assert default_registry.has_kind(kind)


def test_kind_of_reads_the_class_attribute():
    assert default_registry.kind_of(ChainOmega(chain=TWO_STEP)) == 'chain_omega'


def test_unknown_kinds():
    assert not default_registry.has_kind('bridgeland')
    with pytest.raises(NoEntriesFound):
        default_registry.get_class('bridgeland')


def test_register_and_unregister_by_kind(registry):
    registry.register('constant', Constant)
    assert registry.get_class('constant') is Constant

    registry.unregister('constant')
    assert not registry.has_kind('constant')


def test_register_with_a_predicate(registry):
    def is_constant(kind):
        return kind.startswith('constant')

    registry.register(is_constant, Constant, label='constants')
    assert registry.get_class('constant-half') is Constant

    registry.unregister('constants')
    assert not registry.has_kind('constant-half')


def test_registrations_do_not_leak_into_the_original(registry):
    registry.register('constant', Constant)

    assert registry.has_kind('constant')
    assert not default_registry.has_kind('constant')


def test_lookups_are_cached_until_the_registry_changes(registry):
    assert registry.get_class('chain_mho') is ChainMho

    registry.unregister('chain_mho')
    registry.register('chain_mho', ChainOmega)

    assert registry.get_class('chain_mho') is ChainOmega


def test_overlapping_registrations_are_reported(registry):
    registry.register(lambda kind: kind.endswith('_mho'), Constant)

    with pytest.raises(MultipleEntriesFound):
        registry.has_kind('chain_mho')


@pytest.mark.parametrize('cls', (object, int, 'chain_mho'))
def test_only_weak_stability_classes_can_be_registered(registry, cls):
    with pytest.raises(TypeError, match='must subclass BaseWeakStability'):
        registry.register('other', cls)


@pytest.mark.parametrize('method', ('register', 'unregister'))
def test_lookups_must_be_strings_or_callables(registry, method):
    args = (3, Constant) if method == 'register' else (3,)

    with pytest.raises(TypeError, match='must be a callable or a value of type `str`'):
        getattr(registry, method)(*args)


def test_equals_predicates_compare_by_value():
    assert Equals('chain_mho') == Equals('chain_mho')
    assert Equals('chain_mho') != Equals('chain_omega')
    assert {Equals('chain_mho'): 1}[Equals('chain_mho')] == 1
    assert repr(Equals('chain_mho')) == "<Equals (== 'chain_mho')>"
