"""
Radix-2 FFT of a signal file.
"""

from ladderlab.apps.core.management.base import LabCommand
from ladderlab.apps.core.serializers import dump_signal, load_signal
from ladderlab.apps.core.transforms import (DftConvention, Normalization,
                                            fft_radix2)

SIGNS = {"plus": 1, "minus": -1}


class Command(LabCommand):
    help = "Transform a signal file with the radix-2 FFT"

    def add_arguments(self, parser):
        parser.add_argument("signal", help="Input signal file, one 're,im' pair per line")
        parser.add_argument("--sign", choices=sorted(SIGNS), default="minus", help="Exponent sign")
        parser.add_argument(
            "--norm",
            choices=[choice.value for choice in Normalization],
            default=Normalization.NONE.value,
            help="Normalization",
        )
        parser.add_argument("--out", help="Output signal file (default: standard output)")

    def handle(self, *args, **options):
        with self.lab_errors():
            signal = load_signal(self.read_text(options["signal"]))
            conv = DftConvention(SIGNS[options["sign"]], Normalization(options["norm"]))
            transformed = fft_radix2(signal, conv)
        text = dump_signal(transformed)
        if options["out"]:
            self.write_text(options["out"], text)
            self.stdout.write(
                self.style.SUCCESS(f"Wrote {len(transformed)} samples to {options['out']}")
            )
        else:
            self.stdout.write(text, ending="")
