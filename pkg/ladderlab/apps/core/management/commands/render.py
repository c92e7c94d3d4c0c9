"""
Render one part of a matrix file as a grayscale PGM heatmap.
"""

from django.core.management.base import CommandError

from ladderlab.apps.core.management.base import EXIT_INPUT_ERROR, LabCommand
from ladderlab.apps.core.serializers import load_matrix
from ladderlab.apps.core.visualization import PARTS, render_heatmap


class Command(LabCommand):
    help = "Render a matrix file as a grayscale heatmap"

    def add_arguments(self, parser):
        parser.add_argument("matrix", help="Input matrix file")
        parser.add_argument("--part", choices=PARTS, default="real", help="Matrix part to render")
        parser.add_argument("--out", required=True, help="Output PGM file")

    def handle(self, *args, **options):
        with self.lab_errors():
            matrix = load_matrix(self.read_text(options["matrix"]))
            data = render_heatmap(matrix, options["part"])
        try:
            with open(options["out"], "wb") as f:
                f.write(data)
        except OSError as e:
            raise CommandError(f"cannot write {options['out']}: {e}", returncode=EXIT_INPUT_ERROR)
        self.stdout.write(
            self.style.SUCCESS(f"Wrote {options['part']} heatmap ({len(data)} bytes) to {options['out']}")
        )
