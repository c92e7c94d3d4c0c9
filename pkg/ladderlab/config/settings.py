import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()
BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "changeme")
DEBUG = os.getenv("DEBUG", "False") == "True"
ALLOWED_HOSTS = os.getenv("ALLOWED_HOSTS", "localhost,127.0.0.1").split(",")

INSTALLED_APPS = [
    "ladderlab.apps.core.apps.CoreConfig",
]
# The lab keeps everything in memory and in plain files.
DATABASES = {}
USE_TZ = True

# Resource caps (qubits) and tolerances
LADDERLAB_DENSE_QUBIT_CAP = int(os.getenv("LADDERLAB_DENSE_QUBIT_CAP", 12))
LADDERLAB_STREAM_QUBIT_CAP = int(os.getenv("LADDERLAB_STREAM_QUBIT_CAP", 24))
LADDERLAB_ABS_TOL = float(os.getenv("LADDERLAB_ABS_TOL", 1e-10))
LADDERLAB_ZERO_TOL = float(os.getenv("LADDERLAB_ZERO_TOL", 1e-12))
# Threads used to realize dense unitaries column block by column block
LADDERLAB_WORKERS = int(os.getenv("LADDERLAB_WORKERS", 1))
LADDERLAB_RANDOM_SEED = int(os.getenv("LADDERLAB_RANDOM_SEED", 20240601))

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "ladderlab": {
            "handlers": ["console"],
            "level": os.getenv("LADDERLAB_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}
