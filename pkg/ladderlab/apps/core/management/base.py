"""
Shared plumbing for the lab's management commands.

Exit codes: 0 success, 1 verification failed, 2 input error, 3 resource cap.
"""

import logging
from contextlib import contextmanager
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ladderlab.apps.core.exceptions import CapExceededError, LadderLabError
from ladderlab.apps.core.gates import parse_gateset_config
from ladderlab.apps.core.numerics import Tolerance
from ladderlab.apps.core.presets import load_preset, preset_names

logger = logging.getLogger(__name__)

EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


class LabCommand(BaseCommand):
    def add_gateset_arguments(self, parser):
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--config", help="Path to a gate-set configuration file")
        group.add_argument(
            "--preset", choices=preset_names(), help="Name of a shipped gate-set configuration"
        )

    def load_gateset(self, options, default=None):
        if options.get("config"):
            return parse_gateset_config(self.read_text(options["config"]))
        name = options.get("preset") or default
        if name is None:
            raise CommandError("one of --config or --preset is required", returncode=EXIT_INPUT_ERROR)
        return load_preset(name)

    def tolerance(self, zero_tol=None):
        return Tolerance(
            abs_tol=settings.LADDERLAB_ABS_TOL,
            zero_tol=settings.LADDERLAB_ZERO_TOL if zero_tol is None else zero_tol,
        )

    def read_text(self, path):
        try:
            return Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise CommandError(f"cannot read {path}: {e}", returncode=EXIT_INPUT_ERROR)

    def write_text(self, path, text):
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as e:
            raise CommandError(f"cannot write {path}: {e}", returncode=EXIT_INPUT_ERROR)

    def require_positive(self, name, value):
        if value is None or value < 1:
            raise CommandError(f"--{name} must be a positive integer", returncode=EXIT_INPUT_ERROR)

    @contextmanager
    def lab_errors(self):
        """Translate lab exceptions into command errors with the right exit code."""
        try:
            yield
        except CapExceededError as e:
            logger.debug(f"Resource cap: {e}")
            raise CommandError(str(e), returncode=EXIT_CAP_EXCEEDED)
        except LadderLabError as e:
            logger.debug(f"Input error: {e}")
            raise CommandError(str(e), returncode=EXIT_INPUT_ERROR)
