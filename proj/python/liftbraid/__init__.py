from ._liftbraid import *  # noqa: F401,F403
from ._liftbraid import __version__  # noqa: F401
