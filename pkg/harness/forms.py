from django import forms
from trapezoids.forms import ParamsForm
from harness.verify import CHECKS


class VerifyForm(ParamsForm):
    checks = forms.MultipleChoiceField(choices=[(check, check) for check in CHECKS])
    workers = forms.IntegerField(min_value=1)
    enumeration_cap = forms.IntegerField(min_value=0)
    failure_cap = forms.IntegerField(min_value=1)
