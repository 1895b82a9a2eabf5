from typing import Optional

from pydantic import PositiveFloat

from .pydantic_base_model import CamelBaseModel


class Tolerances(CamelBaseModel):
    """
    Numerical thresholds shared by the whole package.

    `alg` is used for finite-dimensional algebra, `loop` for loop arithmetic, `iwa` for the Iwasawa
    factorization, `ode` for the frame and profile ODEs, `frame` for closed-form frames, `fd` for
    finite-difference residuals, `geo` for pointwise geometric identities and `close` for the closing conditions.

    >>> Tolerances().iwa
    1e-07
    >>> Tolerances(fd=1e-3).merged(TolerancesOverride(iwa=1e-8)).iwa
    1e-08
    """

    alg: PositiveFloat = 1e-10
    loop: PositiveFloat = 1e-9
    iwa: PositiveFloat = 1e-7
    ode: PositiveFloat = 1e-9
    frame: PositiveFloat = 1e-6
    fd: PositiveFloat = 1e-4
    geo: PositiveFloat = 1e-6
    close: PositiveFloat = 1e-8

    def merged(self, override: Optional["TolerancesOverride"]) -> "Tolerances":
        if override is None:
            return self
        return self.copy(update=override.dict(exclude_none=True))


class TolerancesOverride(CamelBaseModel):
    alg: Optional[PositiveFloat] = None
    loop: Optional[PositiveFloat] = None
    iwa: Optional[PositiveFloat] = None
    ode: Optional[PositiveFloat] = None
    frame: Optional[PositiveFloat] = None
    fd: Optional[PositiveFloat] = None
    geo: Optional[PositiveFloat] = None
    close: Optional[PositiveFloat] = None


Tolerances.update_forward_refs()

DEFAULT_TOLERANCES = Tolerances()
