from .schemas import (
    Decision, Trichotomy, OutputFormat,
    GroupReport, ProductReport, StabilizationReport,
    CheckResult, VerificationReport, TruthCheck, DecisionReport,
    ConvergenceReport,
    ScenarioResult, ExamplesReport, SweepReport, ScenarioSpec,
    ErrorResponse
)

__all__ = [
    'Decision', 'Trichotomy', 'OutputFormat',
    'GroupReport', 'ProductReport', 'StabilizationReport',
    'CheckResult', 'VerificationReport', 'TruthCheck', 'DecisionReport',
    'ConvergenceReport',
    'ScenarioResult', 'ExamplesReport', 'SweepReport', 'ScenarioSpec',
    'ErrorResponse'
]
