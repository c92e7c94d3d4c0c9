"""
Sparsity and norm report for a matrix file.
"""

from ladderlab.apps.core.analysis import norm_report, sparsity_report
from ladderlab.apps.core.management.base import LabCommand
from ladderlab.apps.core.numerics import unitarity_residual
from ladderlab.apps.core.serializers import format_report, load_matrix


class Command(LabCommand):
    help = "Report sparsity, density and matrix norms of a realized transform"

    def add_arguments(self, parser):
        parser.add_argument("matrix", help="Input matrix file")
        parser.add_argument("--zero-tol", type=float, help="Magnitude at or below which an entry counts as zero")

    def handle(self, *args, **options):
        with self.lab_errors():
            tol = self.tolerance(options["zero_tol"])
            matrix = load_matrix(self.read_text(options["matrix"]))
            sparsity = sparsity_report(matrix, tol)
            norms = norm_report(matrix)
        pairs = [("zero_tol", tol.zero_tol)] + sparsity.items() + norms.items()
        pairs.append(("unitarity_residual", unitarity_residual(matrix)))
        if sparsity.discrepancy:
            pairs.append(
                (
                    "discrepancy",
                    f"expected a non-sparse ladder transform, measured {sparsity.verdict.value} "
                    f"with {sparsity.nnz} of {sparsity.dim ** 2} entries nonzero",
                )
            )
        self.stdout.write(format_report(pairs), ending="")
