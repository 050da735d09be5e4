import logging
import os
import sys
from pathlib import Path
from dotenv import load_dotenv

# Paths
PROJECT_ROOT = Path(__file__).parent.parent

# Load .env from project root
# Use stream for reliable unicode path support on Windows
_env_file = PROJECT_ROOT / ".env"
if _env_file.exists():
    with open(_env_file, "r", encoding="utf-8") as _f:
        load_dotenv(stream=_f, override=True)
else:
    load_dotenv()
DATA_DIR = PROJECT_ROOT / "data"
EXAMPLES_DIR = DATA_DIR / "examples"


def _get_config(key: str, default: str = "") -> str:
    """Read a setting from the environment (a .env file is loaded above)."""
    return os.getenv(key, default)


# Truncation
DEFAULT_MAX_LEVEL = int(_get_config("GAMMAFORGE_MAX_LEVEL", "3"))
PLASMA_MAX_LEVEL = int(_get_config("GAMMAFORGE_PLASMA_MAX_LEVEL", "3"))

# Enumeration guard: caps (m+1)^n hom enumerations, |M|^N level sizes
# and |M|^k assignment searches
ENUMERATION_GUARD = int(_get_config("GAMMAFORGE_ENUMERATION_GUARD", str(10**6)))

# Property sweeps
SWEEP_TUPLE_CAP = int(_get_config("GAMMAFORGE_SWEEP_TUPLE_CAP", "2000"))
DEFAULT_SEED = int(_get_config("GAMMAFORGE_SEED", "0"))

# Ring isomorphism search is only attempted at desk scale
RING_ISO_MAX_ELEMENTS = int(_get_config("GAMMAFORGE_RING_ISO_MAX_ELEMENTS", str(10**4)))
RING_ISO_MAX_RANK = int(_get_config("GAMMAFORGE_RING_ISO_MAX_RANK", "4"))

# Reports
DEFAULT_FORMAT = _get_config("GAMMAFORGE_FORMAT", "text")

# Logging
LOG_LEVEL = _get_config("GAMMAFORGE_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str | None = None):
    """Install a single stderr handler on the package loggers."""
    root = logging.getLogger("src")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or LOG_LEVEL).upper())
    root.propagate = False
