from .laurent import LaurentLoop, LaurentLoopJson, SampledLoop, loop_mul, loop_inv, roots_of_unity  # noqa: F401
from .iwasawa import IwasawaResult, iwasawa_su11, DEFAULT_ORDER, DEFAULT_SAMPLES  # noqa: F401
from .birkhoff import birkhoff_plus_minus  # noqa: F401
