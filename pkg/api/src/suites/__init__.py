from .registry import SUITES, build_checks, run_suite, suite_help
from .compute import coproduct, delta, z_bracket
