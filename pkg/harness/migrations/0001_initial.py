import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('check_name', models.CharField(max_length=32, verbose_name='check')),
                ('n', models.PositiveIntegerField(verbose_name='n')),
                ('ell', models.PositiveIntegerField(verbose_name='ell')),
                ('status', models.CharField(choices=[('PASSED', 'Passed'), ('FAILED', 'Failed'), ('SKIPPED', 'Skipped')], max_length=7, verbose_name='status')),
                ('magog_count', models.TextField(verbose_name='magog count')),
                ('gog_count', models.TextField(verbose_name='gog count')),
                ('instances_checked', models.PositiveBigIntegerField(default=0, verbose_name='instances checked')),
                ('failure_total', models.PositiveBigIntegerField(default=0, verbose_name='failure total')),
                ('elapsed', models.FloatField(verbose_name='elapsed seconds')),
                ('report', models.JSONField(verbose_name='report')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='created at')),
            ],
            options={
                'verbose_name': 'Verification run',
                'verbose_name_plural': 'Verification runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='VerificationFailure',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('check_name', models.CharField(max_length=32, verbose_name='check')),
                ('instance', models.JSONField(blank=True, null=True, verbose_name='instance')),
                ('detail', models.TextField(verbose_name='detail')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='failures', to='harness.verificationrun', verbose_name='run')),
            ],
            options={
                'verbose_name': 'Verification failure',
                'verbose_name_plural': 'Verification failures',
            },
        ),
    ]
