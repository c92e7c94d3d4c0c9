"""
Render the heatmap series of the studied gate sets.
"""

from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from ladderlab.apps.core.circuit import build_recursive_circuit, realize_unitary
from ladderlab.apps.core.management.base import EXIT_INPUT_ERROR, LabCommand
from ladderlab.apps.core.presets import FIGURE_SERIES, load_preset
from ladderlab.apps.core.visualization import PARTS, write_heatmap


class Command(LabCommand):
    help = "Render heatmaps for the growth series and the Ising panel"

    def add_arguments(self, parser):
        parser.add_argument("--out", required=True, help="Output directory")
        parser.add_argument("--part", choices=PARTS, default="real", help="Matrix part to render")
        parser.add_argument(
            "--max-qubits", type=int, default=10, help="Skip panels larger than this qubit count"
        )

    def handle(self, *args, **options):
        out_dir = Path(options["out"])
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise CommandError(f"cannot create {out_dir}: {e}", returncode=EXIT_INPUT_ERROR)
        written = 0
        with self.lab_errors():
            for name, qubit_counts in FIGURE_SERIES:
                cfg = load_preset(name)
                for n in qubit_counts:
                    if n > options["max_qubits"]:
                        continue
                    unitary = realize_unitary(
                        build_recursive_circuit(cfg, n),
                        cap=settings.LADDERLAB_DENSE_QUBIT_CAP,
                        workers=settings.LADDERLAB_WORKERS,
                    )
                    path = out_dir / f"{name}-n{n}-{options['part']}.pgm"
                    try:
                        write_heatmap(path, unitary, options["part"])
                    except OSError as e:
                        raise CommandError(f"cannot write {path}: {e}", returncode=EXIT_INPUT_ERROR)
                    self.stdout.write(f"Rendered {path.name}")
                    written += 1
        self.stdout.write(self.style.SUCCESS(f"Wrote {written} heatmaps to {out_dir}"))
