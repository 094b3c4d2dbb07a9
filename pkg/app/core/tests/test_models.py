"""
Test reports and the fixture store.
"""
import json
import tempfile
from fractions import Fraction
from pathlib import Path

from django.test import SimpleTestCase

from core.exceptions import FixtureError
from core.fixtures import FixtureStore
from core.models import Provenance, Report, Status
from exact_arith.models import QuadFieldElem


class TestReport(SimpleTestCase):
    """Test reports"""

    def test_empty_report_passes(self):
        """Test a report without assertions passes"""
        self.assertEqual(Report('empty').status, Status.PASS)

    def test_check(self):
        """Test equality decides unless passed is given"""
        report = Report('sample')
        self.assertTrue(report.check('equal', Fraction(1, 2), Fraction(2, 4)))
        self.assertFalse(report.check('forced', 1, 1, passed=False))
        self.assertFalse(report.passed)
        self.assertEqual(report.status, Status.FAIL)
        self.assertIn('[fail] forced', str(report))

    def test_uses_once(self):
        report = Report('sample')
        report.uses('recomputed')
        report.uses('recomputed')
        self.assertEqual(report.capabilities, ['recomputed'])

    def test_finish(self):
        report = Report('sample').finish()
        self.assertGreaterEqual(report.timing_seconds, 0)


class TestFixtureStore(SimpleTestCase):
    """Test loading fixtures"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.path = Path(self.directory.name)

    def write(self, name, entries):
        (self.path / name).write_text(json.dumps(entries))

    def test_values(self):
        """Test values are parsed into exact numbers"""
        self.write('values.json', [
            {'key': 'x', 'value': '-20874555/28', 'provenance': 'published'},
            {'key': 'y', 'value': '4320-96*sqrt(51349)', 'provenance': 'published-table'},
            {'key': 'Fp:2:[[2]]', 'coeffs': [1, -1], 'provenance': 'recomputed'},
        ])
        store = FixtureStore(self.path)
        self.assertEqual(store.get('x'), Fraction(-20874555, 28))
        self.assertEqual(store.get('y'), QuadFieldElem.from_parts(4320, -96, 51349))
        self.assertEqual(store.provenance('y'), Provenance.PUBLISHED_TABLE)
        self.assertEqual(store.keys('F'), ['Fp:2:[[2]]'])
        with self.assertRaises(FixtureError):
            store.get('Fp:2:[[2]]')

    def test_missing(self):
        """Test missing directories and keys raise FixtureError"""
        with self.assertRaises(FixtureError):
            FixtureStore(self.path / 'absent')
        with self.assertRaises(FixtureError):
            FixtureStore(self.path).entry('x')

    def test_invalid(self):
        """Test entries without value or coeffs are rejected"""
        self.write('bad.json', [{'key': 'x', 'provenance': 'published'}])
        with self.assertRaises(FixtureError):
            FixtureStore(self.path)

    def test_conflict(self):
        """Test the same key with two values is rejected"""
        self.write('a.json', [{'key': 'x', 'value': '1', 'provenance': 'published'}])
        self.write('b.json', [{'key': 'x', 'value': '2', 'provenance': 'published'}])
        with self.assertRaises(FixtureError):
            FixtureStore(self.path)

    def test_recomputed_mismatch_is_reported(self):
        """Test a disagreeing recomputed value fails the report and leaves the store unchanged"""
        self.write('a.json', [{'key': 'x', 'value': '1/3', 'provenance': 'published'}])
        store = FixtureStore(self.path)
        report = Report('sample')
        self.assertFalse(report.check('x recomputed', store.get('x'), Fraction(1, 2)))
        self.assertEqual(report.status, Status.FAIL)
        self.assertEqual(store.get('x'), Fraction(1, 3))
        self.assertEqual(store.keys(), ['x'])
