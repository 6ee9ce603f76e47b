"""
Django settings for the trapezoid bijection toolkit.

Every value is read through python-decouple and has a default, so
``python manage.py <command>`` works without any environment set up.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path
from decouple import config as env

LOGGING_CONFIG = None

LOG_LEVEL = env('TRAPEZOID_LOG_LEVEL', default='INFO', cast=str)

import logging.config
logging.config.dictConfig({
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
        },
        'trapezoids': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'harness': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
})

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: only the admin site uses this; set a real key when serving it.
SECRET_KEY = env('DJANGO_SECRET_KEY', default='django-insecure-trapezoids-local-only', cast=str)

DEBUG = env('DJANGO_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = [i.strip() for i in env('DJANGO_ALLOWED_HOSTS', default='localhost 127.0.0.1', cast=str).split(' ') if i] # type: ignore


# Trapezoid toolkit

# Enumeration-backed checks are skipped above this family size.
TRAPEZOID_ENUMERATION_CAP = env('TRAPEZOID_ENUMERATION_CAP', default=10_000_000, cast=int)

# Failures kept with full detail per verification report.
TRAPEZOID_FAILURE_CAP = env('TRAPEZOID_FAILURE_CAP', default=100, cast=int)

# Worker processes for sharded verification and distributions.
TRAPEZOID_WORKERS = env('TRAPEZOID_WORKERS', default=os.cpu_count() or 1, cast=int)


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'trapezoids',
    'harness',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'config.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]


# Database
# Verification runs are stored here when `verify --save` is used.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': env('DATABASE_NAME', default=str(BASE_DIR / 'db.sqlite3'), cast=str),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


STATIC_URL = 'static/'
STATIC_ROOT = BASE_DIR / 'static'
