"""
URL configuration: only the admin site, where stored verification runs
can be browsed.
"""
from django.contrib import admin
from django.urls import path
from django.views.generic import RedirectView

app_name = 'config'
urlpatterns = [
    path('', RedirectView.as_view(pattern_name='admin:index', permanent=False)),
    path('admin/', admin.site.urls),
]
