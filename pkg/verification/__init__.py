# Verification harness: per-case checks, suites V1-V9 and P1, worker pool
from verification.models import CaseRecord, VerificationSuiteResult, VerificationReport
from verification.runner import run_cases
from verification.suites import SUITES, SuiteContext, run_suite, verify_all
