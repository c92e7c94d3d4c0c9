"""
Realize the dense unitary of a ladder circuit and write it as a matrix file.
"""

from django.conf import settings

from ladderlab.apps.core.circuit import build_recursive_circuit, realize_unitary
from ladderlab.apps.core.management.base import LabCommand
from ladderlab.apps.core.serializers import dump_matrix


class Command(LabCommand):
    help = "Synthesize the transform defined by a gate-set configuration"

    def add_arguments(self, parser):
        self.add_gateset_arguments(parser)
        parser.add_argument("--qubits", type=int, required=True, help="Number of qubits n")
        parser.add_argument(
            "--bit-reversal", action="store_true", help="Append the bit-reversal swap stage"
        )
        parser.add_argument("--out", help="Output matrix file (default: standard output)")

    def handle(self, *args, **options):
        n = options["qubits"]
        self.require_positive("qubits", n)
        with self.lab_errors():
            cfg = self.load_gateset(options)
            circuit = build_recursive_circuit(cfg, n, bit_reversal=options["bit_reversal"])
            unitary = realize_unitary(
                circuit,
                cap=settings.LADDERLAB_DENSE_QUBIT_CAP,
                workers=settings.LADDERLAB_WORKERS,
            )
        text = dump_matrix(unitary)
        if options["out"]:
            self.write_text(options["out"], text)
            self.stdout.write(
                self.style.SUCCESS(f"Wrote {unitary.dim}x{unitary.dim} matrix to {options['out']}")
            )
        else:
            self.stdout.write(text, ending="")
