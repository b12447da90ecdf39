from fractions import (
    Fraction,
)
from typing import (
    Any,
)


def validate_phase(value: Any, param_name: str) -> Fraction:
    if isinstance(value, (bool, float)) or not isinstance(value, (int, Fraction)):
        raise TypeError(
            f"The `{param_name}` value must be an exact rational. Got {type(value)}"
        )

    value = Fraction(value)
    if not 0 <= value <= 1:
        raise ValueError(f"The `{param_name}` value must lie in [0, 1]. Got {value}")

    return value


def validate_list_like_param(param: Any, param_name: str) -> None:
    if not isinstance(param, (list, tuple)):
        raise TypeError(
            f"The `{param_name}` value type must be one of list or tuple. Got {type(param)}"
        )


def validate_radius(value: Any, param_name: str) -> Fraction:
    radius = validate_phase(value, param_name)
    if not 0 < radius < 1:
        raise ValueError(f"The `{param_name}` value must lie in (0, 1). Got {radius}")

    return radius
