from ._strategies import (  # noqa: F401
    get_strategy,
)
