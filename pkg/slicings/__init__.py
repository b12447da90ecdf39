import pkg_resources

from slicings.chains import (  # NOQA
    Chain,
    hn_filtration,
    mho_omega,
)
from slicings.lattice import (  # NOQA
    enumerate_torsion_classes,
    lattice_for,
)
from slicings.space import (  # NOQA
    distance,
)
from slicings.stability import (  # NOQA
    CentralCharge,
    ChainMho,
    ChainOmega,
)

__version__ = pkg_resources.get_distribution('slicings').version
