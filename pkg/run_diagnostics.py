#!/usr/bin/env python3
"""
LadderLab Project Diagnostics Tool

Runs the quality gate over the ladderlab package:
- Code formatting checks (Black, isort)
- Python linting (Flake8)
- Static type checking (mypy)
- Security scanning (Bandit, Safety)
- Django system checks
- The test suite (manage.py test)

Usage:
    python run_diagnostics.py [--format] [--lint] [--types] [--security]
                              [--django-checks] [--tests] [--verbose] [--fix]

With no selection flag every diagnostic runs.
"""

import argparse
import os
import platform
import subprocess
import sys
import traceback
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple


class Colors:
    HEADER = "\033[95m"
    OKBLUE = "\033[94m"
    OKGREEN = "\033[92m"
    WARNING = "\033[93m"
    FAIL = "\033[91m"
    ENDC = "\033[0m"
    BOLD = "\033[1m"


class DiagnosticResult(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    WARNING = "WARNING"


PROJECT_ROOT = Path(__file__).resolve().parent
PACKAGE = "ladderlab"
MANAGE = PROJECT_ROOT / PACKAGE / "manage.py"

VERBOSE = False


def run_command(
    cmd: List[str],
    cwd: Optional[Path] = None,
    step: str = "",
    env: Optional[dict] = None,
) -> Tuple[int, str, str]:
    """Run a command and return exit code, stdout and stderr; output is shown on failure."""
    if VERBOSE or step:
        print(f"\n{Colors.OKBLUE}Running command [{step}]: {' '.join(cmd)}{Colors.ENDC}")
    try:
        result = subprocess.run(
            cmd,
            cwd=cwd or PROJECT_ROOT,
            capture_output=True,
            text=True,
            check=False,
            env=env,
        )
    except OSError as e:
        print(f"{Colors.FAIL}Exception running command [{step}]: {e}{Colors.ENDC}")
        return 1, "", str(e)
    if VERBOSE or result.returncode != 0:
        print(f"{Colors.BOLD}Return code:{Colors.ENDC} {result.returncode}")
        print(f"{Colors.BOLD}Stdout:{Colors.ENDC}\n{(result.stdout or '').strip()}")
        print(f"{Colors.BOLD}Stderr:{Colors.ENDC}\n{(result.stderr or '').strip()}")
    return result.returncode, result.stdout, result.stderr


def print_result(name: str, result: DiagnosticResult, message: str = "") -> None:
    result_colors = {
        DiagnosticResult.PASS: Colors.OKGREEN,
        DiagnosticResult.FAIL: Colors.FAIL,
        DiagnosticResult.SKIP: Colors.WARNING,
        DiagnosticResult.WARNING: Colors.WARNING,
    }
    color = result_colors.get(result, "")
    print(f"{Colors.BOLD}{name}{Colors.ENDC}: {color}{result.value}{Colors.ENDC}")
    if message:
        print(f"  {message}")
    print()


def _verdict(returncode: int, soft: bool = False) -> DiagnosticResult:
    if returncode == 0:
        return DiagnosticResult.PASS
    return DiagnosticResult.WARNING if soft else DiagnosticResult.FAIL


def _django_env() -> dict:
    env = os.environ.copy()
    env["PYTHONPATH"] = str(PROJECT_ROOT)
    env.setdefault("DJANGO_SETTINGS_MODULE", "ladderlab.config.settings")
    return env


def check_black(fix: bool = False) -> DiagnosticResult:
    print(f"{Colors.HEADER}Checking Black formatting...{Colors.ENDC}")
    cmd = ["black", PACKAGE, "run_diagnostics.py"]
    if not fix:
        cmd.append("--check")
    if not VERBOSE:
        cmd.append("--quiet")
    returncode, _, _ = run_command(cmd, step="black")
    return _verdict(returncode, soft=fix)


def check_isort(fix: bool = False) -> DiagnosticResult:
    print(f"{Colors.HEADER}Checking isort imports...{Colors.ENDC}")
    cmd = ["isort", PACKAGE]
    if not fix:
        cmd.append("--check-only")
    if not VERBOSE:
        cmd.append("--quiet")
    returncode, _, _ = run_command(cmd, step="isort")
    return _verdict(returncode, soft=fix)


def check_flake8() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running Flake8...{Colors.ENDC}")
    returncode, _, _ = run_command(["flake8", PACKAGE], step="flake8")
    return _verdict(returncode)


def check_mypy() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running mypy...{Colors.ENDC}")
    returncode, _, _ = run_command(["mypy", PACKAGE], step="mypy")
    return _verdict(returncode)


def check_bandit() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running Bandit security scan...{Colors.ENDC}")
    env = os.environ.copy()
    env["PYTHONIOENCODING"] = "utf-8"
    cmd = [sys.executable, "-m", "bandit", "-r", PACKAGE, "-x", f"{PACKAGE}/apps/core/tests", "-q"]
    returncode, _, _ = run_command(cmd, step="bandit", env=env)
    return _verdict(returncode)


def check_safety() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running Safety vulnerability check...{Colors.ENDC}")
    cmd = [sys.executable, "-m", "safety", "check", "--file", "requirements.txt"]
    returncode, _, _ = run_command(cmd, step="safety")
    return _verdict(returncode, soft=True)


def check_django_system() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running Django system checks...{Colors.ENDC}")
    returncode, _, _ = run_command(
        [sys.executable, str(MANAGE), "check"], env=_django_env(), step="django check"
    )
    return _verdict(returncode)


def run_tests() -> DiagnosticResult:
    print(f"{Colors.HEADER}Running the test suite...{Colors.ENDC}")
    returncode, _, _ = run_command(
        [sys.executable, str(MANAGE), "test", PACKAGE], env=_django_env(), step="django test"
    )
    return _verdict(returncode)


def print_env_info() -> None:
    print(f"{Colors.BOLD}Python version:{Colors.ENDC} {platform.python_version()} ({sys.executable})")
    print(f"{Colors.BOLD}Platform:{Colors.ENDC} {platform.platform()}")
    print(f"{Colors.BOLD}PROJECT_ROOT:{Colors.ENDC} {PROJECT_ROOT}")


def main() -> int:
    global VERBOSE
    parser = argparse.ArgumentParser(description="Run LadderLab project diagnostics")
    parser.add_argument("--format", action="store_true", help="Run only formatting checks")
    parser.add_argument("--lint", action="store_true", help="Run only linting checks")
    parser.add_argument("--types", action="store_true", help="Run only type checking")
    parser.add_argument("--security", action="store_true", help="Run only security scanning")
    parser.add_argument("--django-checks", action="store_true", help="Run only Django system checks")
    parser.add_argument("--tests", action="store_true", help="Run only tests")
    parser.add_argument("--verbose", action="store_true", help="Show detailed output")
    parser.add_argument("--fix", action="store_true", help="Fix formatting issues where possible")
    args = parser.parse_args()
    VERBOSE = args.verbose
    print_env_info()
    run_all = not (
        args.format or args.lint or args.types or args.security or args.django_checks or args.tests
    )

    checks = []
    if run_all or args.format:
        checks += [("Black", lambda: check_black(args.fix)), ("isort", lambda: check_isort(args.fix))]
    if run_all or args.lint:
        checks.append(("Flake8", check_flake8))
    if run_all or args.types:
        checks.append(("mypy", check_mypy))
    if run_all or args.security:
        checks += [("Bandit", check_bandit), ("Safety", check_safety)]
    if run_all or args.django_checks:
        checks.append(("Django System", check_django_system))
    if run_all or args.tests:
        checks.append(("Tests", run_tests))

    results = {}
    try:
        for name, check in checks:
            results[name] = check()
            print_result(name, results[name])
    except Exception:
        print(f"{Colors.FAIL}FATAL ERROR in diagnostics script:{Colors.ENDC}")
        traceback.print_exc()
        return 2

    counts = {kind: sum(1 for r in results.values() if r is kind) for kind in DiagnosticResult}
    print(f"{Colors.HEADER}{Colors.BOLD}Diagnostics Summary:{Colors.ENDC}")
    print(f"Total checks: {len(results)}")
    print(f"{Colors.OKGREEN}Passed: {counts[DiagnosticResult.PASS]}{Colors.ENDC}")
    print(f"{Colors.WARNING}Warnings: {counts[DiagnosticResult.WARNING]}{Colors.ENDC}")
    print(f"{Colors.FAIL}Failed: {counts[DiagnosticResult.FAIL]}{Colors.ENDC}")
    print(f"{Colors.WARNING}Skipped: {counts[DiagnosticResult.SKIP]}{Colors.ENDC}")
    if counts[DiagnosticResult.FAIL]:
        print(f"\n{Colors.FAIL}Some diagnostics failed. Please fix the issues and run again.{Colors.ENDC}")
        return 1
    print(f"\n{Colors.OKGREEN}All diagnostics passed!{Colors.ENDC}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
