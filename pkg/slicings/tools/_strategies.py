from typing import (
    Callable,
    Union,
)

from hypothesis import (
    strategies as st,
)

from slicings.chains import (
    Chain,
    iter_sequences,
)
from slicings.constants import (
    DEFAULT_MAX_CLASSES,
    GRID_DENOMINATOR,
)
from slicings.interval import (
    Module,
)
from slicings.lattice import (
    TorsLattice,
    lattice_for,
)
from slicings.registry import (
    Copyable,
    Equals,
    Lookup,
    PredicateMapping,
)
from slicings.stability import (
    CentralCharge,
    ChainMho,
    ChainOmega,
)

StrategyFactory = Callable[[TorsLattice, 'StrategyRegistry'], st.SearchStrategy]

# Bound on the summands drawn for a module
MAX_SUMMANDS = 3


class StrategyRegistry(Copyable):
    def __init__(self):
        self._strategies = PredicateMapping('strategy registry')

    def register_strategy(self,
                          lookup: Lookup,
                          factory: StrategyFactory,
                          label: str = None) -> None:
        if isinstance(lookup, str):
            self._strategies.add(Equals(lookup), factory, lookup)
        else:
            self._strategies.add(lookup, factory, label)

    def unregister_strategy(self, lookup_or_label: Lookup) -> None:
        self._strategies.remove(lookup_or_label)

    def get_strategy(self, kind: str, n: Union[int, TorsLattice]) -> st.SearchStrategy:
        """
        Returns a hypothesis strategy for objects of the given kind over the
        quiver with ``n`` vertices.

        :param kind: One of ``"interval"``, ``"module"``, ``"chain"`` or a
            weak stability kind such as ``"central_charge"``.
        :param n: Number of vertices, or the torsion lattice itself.
        """
        lattice = n if isinstance(n, TorsLattice) else lattice_for(n)
        factory = self._strategies.find(kind)

        return factory(lattice, self)

    def copy(self):
        cpy = type(self)()
        cpy._strategies = self._strategies.copy()

        return cpy


def get_interval_strategy(lattice: TorsLattice, registry: StrategyRegistry) -> st.SearchStrategy:
    return st.sampled_from(lattice.ctx.indecomposables)


def get_module_strategy(lattice: TorsLattice, registry: StrategyRegistry) -> st.SearchStrategy:
    intervals = registry.get_strategy('interval', lattice)

    return st.lists(intervals, min_size=1, max_size=MAX_SUMMANDS).map(Module)


def get_chain_strategy(lattice: TorsLattice, registry: StrategyRegistry) -> st.SearchStrategy:
    sequences = iter_sequences(lattice, DEFAULT_MAX_CLASSES)
    phases = st.fractions(min_value=0, max_value=1, max_denominator=2 * GRID_DENOMINATOR)

    @st.composite
    def chains(draw):
        sequence = draw(st.sampled_from(sequences))
        size = len(sequence) - 1
        breakpoints = draw(st.lists(phases, min_size=size, max_size=size))

        return Chain(lattice, sequence, tuple(sorted(breakpoints)))

    return chains()


def get_central_charge_strategy(lattice: TorsLattice,
                                registry: StrategyRegistry) -> st.SearchStrategy:
    n = lattice.n
    theta = st.lists(st.integers(min_value=-5, max_value=5), min_size=n, max_size=n)
    delta = st.lists(st.integers(min_value=1, max_value=5), min_size=n, max_size=n)

    return st.builds(CentralCharge, theta=theta, delta=delta)


def get_chain_mho_strategy(lattice: TorsLattice, registry: StrategyRegistry) -> st.SearchStrategy:
    return registry.get_strategy('chain', lattice).map(lambda chain: ChainMho(chain=chain))


def get_chain_omega_strategy(lattice: TorsLattice,
                             registry: StrategyRegistry) -> st.SearchStrategy:
    return registry.get_strategy('chain', lattice).map(lambda chain: ChainOmega(chain=chain))


strategy_registry = StrategyRegistry()

strategy_registry.register_strategy('interval', get_interval_strategy)
strategy_registry.register_strategy('module', get_module_strategy)
strategy_registry.register_strategy('chain', get_chain_strategy)
strategy_registry.register_strategy('central_charge', get_central_charge_strategy)
strategy_registry.register_strategy('chain_mho', get_chain_mho_strategy)
strategy_registry.register_strategy('chain_omega', get_chain_omega_strategy)

get_strategy = strategy_registry.get_strategy
