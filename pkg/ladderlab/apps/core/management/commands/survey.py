"""
Sparsity survey over the studied gate sets and qubit counts.
"""

from django.conf import settings

from ladderlab.apps.core.analysis import sparsity_survey
from ladderlab.apps.core.management.base import LabCommand
from ladderlab.apps.core.presets import SPARSITY_STUDY, preset_names
from ladderlab.apps.core.serializers import format_report


class Command(LabCommand):
    help = "Measure the sparsity of every studied gate set at several sizes"

    def add_arguments(self, parser):
        parser.add_argument(
            "--presets", nargs="+", choices=preset_names(), default=list(SPARSITY_STUDY),
            help="Gate-set presets to survey",
        )
        parser.add_argument(
            "--qubits", type=int, nargs="+", default=[4, 8, 10], help="Qubit counts to realize"
        )
        parser.add_argument("--zero-tol", type=float, help="Magnitude at or below which an entry counts as zero")

    def handle(self, *args, **options):
        for n in options["qubits"]:
            self.require_positive("qubits", n)
        with self.lab_errors():
            rows = sparsity_survey(
                options["presets"],
                options["qubits"],
                self.tolerance(options["zero_tol"]),
                cap=settings.LADDERLAB_DENSE_QUBIT_CAP,
            )
        blocks = []
        for row in rows:
            pairs = [("preset", row.preset), ("qubits", row.n_qubits)] + row.report.items()
            pairs.append(("discrepancy", row.report.discrepancy))
            blocks.append(format_report(pairs))
        self.stdout.write("\n".join(blocks), ending="")
