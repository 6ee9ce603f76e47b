#!/usr/bin/env python
"""Command-line entry point for the trapezoid toolkit.

    python manage.py validate fig1.txt
    python manage.py map fig1.txt --direction auto
    python manage.py count --kind gog --n 200 --ell 0
    python manage.py verify --n 8 --ell 2 --grid
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django, which runs every trapezoid command. "
            "Install requirements.txt into the active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
