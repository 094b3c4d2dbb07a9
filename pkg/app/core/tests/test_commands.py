"""
Test the shared behaviour of harderlab management commands.
"""
import json
import logging
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import CapabilityError, PreconditionError
from core.models import Report


def failing_report():
    report = Report('sample')
    report.check('one equals two', 1, 2)
    return report


@patch('lift_calculus.management.commands.lifts.incongruence_table')
class CommandTests(SimpleTestCase):
    """Test output, JSON files and exit codes."""

    def test_report_passes(self, patched_table):
        """Test a passing report is printed and returns normally."""
        report = Report('sample')
        report.check('two equals two', 2, 2)
        patched_table.return_value = report
        out = StringIO()

        call_command('lifts', 'incongruence', stdout=out)

        self.assertIn('sample: pass', out.getvalue())
        patched_table.assert_called_once_with(None)

    def test_report_fails(self, patched_table):
        """Test a failed assertion exits with code 1."""
        patched_table.return_value = failing_report()

        with self.assertRaises(CommandError) as context:
            call_command('lifts', 'incongruence', stdout=StringIO())

        self.assertEqual(context.exception.returncode, 1)

    def test_capability(self, patched_table):
        """Test a missing capability exits with code 3."""
        patched_table.side_effect = CapabilityError('no local series')

        with self.assertRaises(CommandError) as context:
            call_command('lifts', 'incongruence', stdout=StringIO())

        self.assertEqual(context.exception.returncode, 3)
        self.assertIn('capability', str(context.exception))

    def test_precondition(self, patched_table):
        """Test other harderlab errors keep their own exit code."""
        patched_table.side_effect = PreconditionError('bad input')

        with self.assertRaises(CommandError) as context:
            call_command('lifts', 'incongruence', stdout=StringIO())

        self.assertEqual(context.exception.returncode, 1)

    def test_json_output(self, patched_table):
        """Test --json writes the serialized report."""
        report = Report('sample')
        report.check('exact value', '1/3', '1/3')
        report.note('a note')
        report.uses('fixture:published')
        patched_table.return_value = report

        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'report.json'
            call_command('lifts', 'incongruence', '--json', str(path), stdout=StringIO())
            data = json.loads(path.read_text())

        self.assertEqual(data['case'], 'sample')
        self.assertEqual(data['status'], 'pass')
        self.assertEqual(data['assertions'][0]['expected'], '1/3')
        self.assertEqual(data['notes'], ['a note'])
        self.assertEqual(data['capabilities'], ['fixture:published'])

    def test_verbosity_levels_restored(self, patched_table):
        """Test verbosity sets the app loggers for one run only."""
        app_logger = logging.getLogger('lift_calculus')
        before = app_logger.level
        seen = []

        def passing_report(directory):
            seen.append(app_logger.level)
            return Report('sample')
        patched_table.side_effect = passing_report

        call_command('lifts', 'incongruence', verbosity=3, stdout=StringIO())
        call_command('lifts', 'incongruence', verbosity=0, stdout=StringIO())

        self.assertEqual(seen, [logging.DEBUG, logging.ERROR])
        self.assertEqual(app_logger.level, before)
