"""
Desk-scale timing of gate streaming against dense matrix-vector products.
"""

from django.conf import settings
from django.core.management.base import CommandError

from ladderlab.apps.core.analysis import bench_apply
from ladderlab.apps.core.management.base import EXIT_INPUT_ERROR, LabCommand
from ladderlab.apps.core.serializers import format_report


class Command(LabCommand):
    help = "Benchmark gate-streamed vs. dense application of a ladder transform"

    def add_arguments(self, parser):
        self.add_gateset_arguments(parser)
        parser.add_argument("--qubits", type=int, required=True, help="Number of qubits n")
        parser.add_argument("--trials", type=int, default=10, help="Timed repetitions per path")

    def handle(self, *args, **options):
        self.require_positive("qubits", options["qubits"])
        if options["trials"] < 1:
            raise CommandError("--trials must be at least 1", returncode=EXIT_INPUT_ERROR)
        with self.lab_errors():
            cfg = self.load_gateset(options)
            report = bench_apply(
                cfg,
                options["qubits"],
                options["trials"],
                cap=settings.LADDERLAB_DENSE_QUBIT_CAP,
                seed=settings.LADDERLAB_RANDOM_SEED,
                stream_cap=settings.LADDERLAB_STREAM_QUBIT_CAP,
            )
        self.stdout.write(format_report(report.items()), ending="")
