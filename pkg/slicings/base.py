from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
)

from slicings.exceptions import (
    ZeroModuleError,
)
from slicings.interval import (
    CategoryContext,
    Module,
)


class BaseWeakStability:
    """
    Base class for all weak stability condition kinds.  Instances are built
    from keyword arguments naming class attributes and validate their
    combination on construction.
    """
    kind: str = None

    def __init__(self, **kwargs):
        cls = type(self)

        # Ensure no unrecognized kwargs were given
        for key, value in kwargs.items():
            if not hasattr(cls, key):
                raise AttributeError(
                    'Property {key} not found on {cls_name} class. '
                    '`{cls_name}.__init__` only accepts keyword arguments which are '
                    'present on the {cls_name} class.'.format(
                        key=key,
                        cls_name=cls.__name__,
                    )
                )
            setattr(self, key, value)

        # Validate given combination of kwargs
        self.validate()

    def validate(self):
        pass

    @property
    def ctx(self) -> CategoryContext:  # pragma: no cover
        raise NotImplementedError('Must implement `ctx`')

    def phase(self, module: Module) -> Fraction:
        """
        Phase of a nonzero module, an exact rational in ``[0, 1]``.
        """
        if module.is_zero:
            raise ZeroModuleError('Phases are only defined for nonzero modules')
        self.ctx.validate_module(module)

        return self._phase(module)

    def _phase(self, module: Module) -> Fraction:  # pragma: no cover
        raise NotImplementedError('Must implement `_phase`')

    def fields(self) -> Dict[str, Any]:  # pragma: no cover
        """
        Keyword arguments that rebuild this instance; used by the document
        codec.
        """
        raise NotImplementedError('Must implement `fields`')

    def __repr__(self):
        return '<{} {}>'.format(
            type(self).__name__,
            ' '.join('{}={}'.format(key, value) for key, value in self.fields().items()),
        )
