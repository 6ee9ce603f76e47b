from unittest.mock import patch
from django.test import TestCase
from harness.models import VerificationFailure, VerificationRun
from harness.tests.test_verify import constant_image
from harness.verify import verify_equinumerosity, verify_roundtrip
from trapezoids.core import TrapezoidParams


class VerificationRunTests(TestCase):

    def test_passed_report(self):
        run = VerificationRun.from_report(verify_roundtrip(TrapezoidParams(3)))
        self.assertEqual(run.status, VerificationRun.StatusChoices.PASSED)
        self.assertEqual((run.magog_count, run.gog_count), ('7', '7'))
        self.assertEqual(run.instances_checked, 14)
        self.assertEqual(run.report['status'], 'passed')
        self.assertFalse(run.failures.exists())
        self.assertEqual(str(run), 'roundtrip (ell=0, n=3): Passed')

    def test_failures_are_stored(self):
        with patch('harness.verify.magog_to_gog', constant_image):
            report = verify_roundtrip(TrapezoidParams(4), failure_cap=5)
        run = VerificationRun.from_report(report)
        self.assertEqual(run.status, VerificationRun.StatusChoices.FAILED)
        self.assertEqual(run.failures.count(), 5)
        self.assertEqual(run.failure_total, report.failure_total)
        failure = run.failures.order_by('id').first()
        self.assertEqual(failure.instance['row2'], [1, 1, 1, 1])

    def test_huge_counts_survive(self):
        report = verify_equinumerosity(TrapezoidParams(60), enumeration_cap=0)
        run = VerificationRun.from_report(report)
        run.refresh_from_db()
        self.assertEqual(run.status, VerificationRun.StatusChoices.SKIPPED)
        self.assertEqual(int(run.magog_count), report.counts['magog'])
        self.assertEqual(VerificationFailure.objects.count(), 0)
