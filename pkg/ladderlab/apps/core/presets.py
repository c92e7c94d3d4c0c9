"""
Named gate-set configurations shipped with the app.
"""

import logging
from functools import lru_cache
from pathlib import Path

from .exceptions import InvalidArgumentError
from .gates import parse_gateset_config

logger = logging.getLogger(__name__)

GATESET_DIR = Path(__file__).resolve().parent / "templates" / "gatesets"

QFT_PRESET = "qft"

# Gate sets whose realized transforms were studied for non-sparsity, with the
# sparsity that was claimed for them.
SPARSITY_STUDY = ("t-cx", "h-cx-cp", "hx-cp", "h-xx-zz", "t-zz")

# Heatmap series: (preset, qubit counts)
FIGURE_SERIES = (
    ("h-cx", (4, 6, 8, 10)),
    ("h-cx-cp", (4, 6, 8, 10)),
    ("h-ising-xx", (8,)),
    ("h-ising-xy", (8,)),
    ("h-ising-yy", (8,)),
    ("h-ising-zz", (8,)),
)


def preset_names():
    return sorted(path.stem for path in GATESET_DIR.glob("*.gates"))


def preset_path(name):
    path = GATESET_DIR / f"{name}.gates"
    if not path.is_file():
        raise InvalidArgumentError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        )
    return path


@lru_cache(maxsize=None)
def load_preset(name):
    """Parse the checked-in configuration for a preset name."""
    path = preset_path(name)
    logger.debug(f"Loading gate-set preset {name} from {path}")
    return parse_gateset_config(path.read_text(encoding="utf-8"))
