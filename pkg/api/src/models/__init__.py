from .suite_config_model import SUITE_DEFAULTS, SuiteConfig, load_metric
from .report_model import REPORT_SCHEMA, CheckOutcome, SuiteReport, witness_json
from .compute_model import CoproductParameters, DeltaParameters, ZBracketParameters
