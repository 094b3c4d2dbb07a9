"""
Core models
"""
import time

from django.db import models


class Provenance(models.TextChoices):
    """Where a fixture value comes from."""
    PUBLISHED = 'published', 'Published computation'
    PUBLISHED_TABLE = 'published-table', 'Published eigenvalue table'
    RECOMPUTED = 'recomputed', 'Recomputed here'


class Status(models.TextChoices):
    PASS = 'pass', 'Pass'
    FAIL = 'fail', 'Fail'


class Assertion:
    """One checked statement of a report."""

    def __init__(self, description, expected, got, passed):
        self.description = description
        self.expected = expected
        self.got = got
        self.status = Status.PASS if passed else Status.FAIL

    @property
    def passed(self):
        return self.status == Status.PASS

    def __str__(self):
        return f'[{self.status}] {self.description}: expected {self.expected}, got {self.got}'


class Report:
    """Machine-readable result of a verification run."""

    def __init__(self, case):
        self.case = case
        self.assertions = []
        self.notes = []
        self.capabilities = []
        self.timing_seconds = 0.0
        self._started = time.perf_counter()

    def check(self, description, expected, got, passed=None):
        """Record an assertion; equality of expected and got decides unless passed is given."""
        if passed is None:
            passed = expected == got
        self.assertions.append(Assertion(description, expected, got, bool(passed)))
        return bool(passed)

    def note(self, text):
        self.notes.append(text)

    def uses(self, capability):
        if capability not in self.capabilities:
            self.capabilities.append(capability)

    def finish(self):
        self.timing_seconds = round(time.perf_counter() - self._started, 3)
        return self

    @property
    def status(self):
        return Status.PASS if all(a.passed for a in self.assertions) else Status.FAIL

    @property
    def passed(self):
        return self.status == Status.PASS

    def __str__(self):
        lines = [f'{self.case}: {self.status}']
        lines += [f'  {assertion}' for assertion in self.assertions]
        lines += [f'  note: {note}' for note in self.notes]
        return '\n'.join(lines)
