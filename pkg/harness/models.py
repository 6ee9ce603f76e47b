from django.db import models, transaction
from harness.verify import VerifyReport


class VerificationRun(models.Model):

    class Meta:
        verbose_name = 'Verification run'
        verbose_name_plural = 'Verification runs'
        ordering = ['-created_at']

    class StatusChoices(models.TextChoices):
        PASSED = 'PASSED', 'Passed'
        FAILED = 'FAILED', 'Failed'
        SKIPPED = 'SKIPPED', 'Skipped'

    check_name = models.CharField(verbose_name='check', max_length=32)
    n = models.PositiveIntegerField(verbose_name='n')
    ell = models.PositiveIntegerField(verbose_name='ell')
    status = models.CharField(verbose_name='status', choices=StatusChoices.choices, max_length=7)
    # Counts outgrow 64-bit integers long before the sweep gets slow.
    magog_count = models.TextField(verbose_name='magog count')
    gog_count = models.TextField(verbose_name='gog count')
    instances_checked = models.PositiveBigIntegerField(verbose_name='instances checked', default=0)
    failure_total = models.PositiveBigIntegerField(verbose_name='failure total', default=0)
    elapsed = models.FloatField(verbose_name='elapsed seconds')
    report = models.JSONField(verbose_name='report')
    created_at = models.DateTimeField(verbose_name='created at', auto_now_add=True)

    @classmethod
    @transaction.atomic
    def from_report(cls, report: VerifyReport) -> 'VerificationRun':
        data = report.to_dict()
        run = cls.objects.create(
            check_name=report.check,
            n=report.params.n,
            ell=report.params.ell,
            status=report.status.upper(),
            magog_count=str(report.counts.get('magog', '')),
            gog_count=str(report.counts.get('gog', '')),
            instances_checked=sum(report.instances_checked.values()),
            failure_total=report.failure_total,
            elapsed=report.elapsed,
            report=data,
        )
        VerificationFailure.objects.bulk_create([
            VerificationFailure(
                run=run,
                check_name=failure['check'],
                instance=failure['instance'],
                detail=failure['detail'],
            )
            for failure in data['failures']
        ])
        return run

    def __str__(self) -> str:
        return f'{self.check_name} (ell={self.ell}, n={self.n}): {self.get_status_display()}'


class VerificationFailure(models.Model):

    class Meta:
        verbose_name = 'Verification failure'
        verbose_name_plural = 'Verification failures'

    run = models.ForeignKey(verbose_name='run', to='harness.VerificationRun', on_delete=models.CASCADE, related_name='failures')
    check_name = models.CharField(verbose_name='check', max_length=32)
    instance = models.JSONField(verbose_name='instance', blank=True, null=True)
    detail = models.TextField(verbose_name='detail')

    def __str__(self) -> str:
        return f'{self.check_name}: {self.detail}'
