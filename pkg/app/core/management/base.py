"""
Base class for harderlab management commands.
"""
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from core.exceptions import CapabilityError, HarderLabError
from core.models import Report
from core.serializers import ReportSerializer

VERBOSITY_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


def add_common_arguments(parser):
    parser.add_argument('--json', metavar='PATH', help='Write the machine-readable result to PATH.')
    parser.add_argument('--threads', type=int, default=None, help='Worker processes for enumeration.')


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2})


class HarderLabCommand(BaseCommand):
    """Shared flags, JSON output and exit codes for every harderlab subcommand.

    Subclasses implement run(**options) and return either a Report or a dict of
    already-serializable data.
    """
    requires_system_checks = []

    def add_subcommand(self, subparsers, name, help_text):
        parser = subparsers.add_parser(
            name, help=help_text, called_from_command_line=getattr(self, '_called_from_command_line', None))
        add_common_arguments(parser)
        return parser

    def run(self, **options):
        raise NotImplementedError('subclasses of HarderLabCommand must provide a run() method')

    def workers(self, options):
        threads = options.get('threads')
        return threads if threads else settings.HARDERLAB['WORKERS']

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity', 1), logging.DEBUG)
        loggers = [logging.getLogger(app) for app in settings.HARDERLAB_APPS]
        previous = [app_logger.level for app_logger in loggers]
        for app_logger in loggers:
            app_logger.setLevel(level)
        try:
            self._execute(options)
        finally:
            for app_logger, old_level in zip(loggers, previous):
                app_logger.setLevel(old_level)

    def _execute(self, options):
        try:
            result = self.run(**options)
        except CapabilityError as exc:
            raise CommandError(f'capability: {exc}', returncode=3)
        except HarderLabError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)
        if isinstance(result, Report):
            result.finish()
            data = ReportSerializer(result).data
            self.stdout.write(str(result))
        else:
            data = result
            self.stdout.write(json.dumps(data, indent=2, ensure_ascii=False))
        if options.get('json'):
            Path(options['json']).write_bytes(render_json(data))
        if isinstance(result, Report) and not result.passed:
            logging.getLogger('core').warning('%s failed', result.case)
            raise CommandError(f'{result.case}: assertion failure', returncode=1)
