from django.contrib import admin
from harness.models import VerificationRun, VerificationFailure


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):

    class FailureInline(admin.TabularInline):
        model = VerificationFailure
        extra = 0
        fields = ('check_name', 'instance', 'detail')
        readonly_fields = ('check_name', 'instance', 'detail')
        classes = ['collapse']

    list_display = ('check_name', 'n', 'ell', 'status', 'magog_count', 'instances_checked', 'failure_total', 'elapsed', 'created_at')
    readonly_fields = ('check_name', 'n', 'ell', 'status', 'magog_count', 'gog_count', 'instances_checked', 'failure_total', 'elapsed', 'report', 'created_at')
    list_filter = ('status', 'check_name', 'created_at')
    search_fields = ('check_name',)
    inlines = [FailureInline]


@admin.register(VerificationFailure)
class VerificationFailureAdmin(admin.ModelAdmin):
    list_select_related = ('run',)
    list_display = ('run', 'check_name', 'detail')
    readonly_fields = ('run', 'check_name', 'instance', 'detail')
    list_filter = ('check_name',)
    search_fields = ('detail',)
