from typing import Any
from django import forms
from django.core.validators import RegexValidator
from trapezoids.core import Kind, TrapezoidParams
from trapezoids.formats import FORMATS
from trapezoids.utils import parse_partition


class ParamsForm(forms.Form):
    n = forms.IntegerField(min_value=3, error_messages={'min_value': 'n must be at least 3.'})
    ell = forms.IntegerField(min_value=0, initial=0, error_messages={'min_value': 'ell must be non-negative.'})

    def params(self) -> TrapezoidParams:
        return TrapezoidParams(self.cleaned_data['n'], self.cleaned_data['ell'])


class FamilyForm(ParamsForm):
    kind = forms.ChoiceField(choices=[(str(kind), str(kind)) for kind in Kind])
    format = forms.ChoiceField(choices=[(fmt, fmt) for fmt in FORMATS], required=False)

    def clean_kind(self) -> Kind:
        return Kind(self.cleaned_data['kind'])

    def clean_format(self) -> str:
        return self.cleaned_data['format'] or 'text'


class EnumerateForm(FamilyForm):
    partition_validator = RegexValidator(
        regex=r'^\d+/\d+$',
        message='Enter the partition as i/p, e.g. 0/4 for the first of four shards!'
    )
    partition = forms.CharField(required=False, validators=[partition_validator], strip=True)
    limit = forms.IntegerField(required=False, min_value=0)

    def clean(self) -> dict[str, Any]:
        cleaned_data = super().clean()
        partition = cleaned_data.get('partition')
        if not partition:
            cleaned_data['partition'] = (0, 1)
            return cleaned_data
        try:
            cleaned_data['partition'] = parse_partition(partition)
        except ValueError as e:
            raise forms.ValidationError(str(e))
        return cleaned_data


def form_errors(form: forms.Form) -> str:
    """One line per problem, field name first."""
    lines = []
    for field, errors in form.errors.items():
        prefix = '' if field == '__all__' else f'{field}: '
        lines.extend(f'{prefix}{error}' for error in errors)
    return '\n'.join(lines)
