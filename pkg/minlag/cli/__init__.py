from .config import OutputPaths, RunConfig, load_config  # noqa: F401
from .main import cli  # noqa: F401
