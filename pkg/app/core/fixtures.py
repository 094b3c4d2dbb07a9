"""
Fixture store for published and recomputed values
"""
import json
import logging
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from core.exceptions import FixtureError
from core.serializers import FixtureEntrySerializer

logger = logging.getLogger(__name__)


class FixtureStore:
    """All fixture entries found in the *.json files of a directory.

    Every entry carries a provenance. The store is read-only once loaded; callers
    compare recomputed values against it through a Report.
    """

    def __init__(self, directory=None):
        self.directory = Path(directory or settings.HARDERLAB['FIXTURES_DIR'])
        self._entries = {}
        if not self.directory.is_dir():
            raise FixtureError(f'Fixture directory {self.directory} does not exist')
        for path in sorted(self.directory.glob('*.json')):
            self._load(path)

    def _load(self, path):
        try:
            raw = json.loads(path.read_text(encoding='utf-8'))
        except (OSError, ValueError) as exc:
            raise FixtureError(f'Cannot read fixtures from {path}: {exc}') from exc
        serializer = FixtureEntrySerializer(data=raw, many=True)
        if not serializer.is_valid():
            raise FixtureError(f'Invalid fixtures in {path}: {serializer.errors}')
        for entry in serializer.validated_data:
            key = entry['key']
            known = self._entries.get(key)
            if known is not None and (known.get('value'), known.get('coeffs')) != (
                    entry.get('value'), entry.get('coeffs')):
                raise FixtureError(f'Fixture {key} has conflicting values')
            entry['source'] = path.name
            self._entries[key] = entry
        logger.debug('Loaded %d fixtures from %s', len(serializer.validated_data), path)

    def __contains__(self, key):
        return key in self._entries

    def keys(self, prefix=''):
        return sorted(k for k in self._entries if k.startswith(prefix))

    def entry(self, key):
        try:
            return self._entries[key]
        except KeyError:
            raise FixtureError(f'Fixture {key} is missing from {self.directory}') from None

    def get(self, key):
        entry = self.entry(key)
        if 'value' not in entry:
            raise FixtureError(f'Fixture {key} stores coefficients, not a value')
        return entry['value']

    def provenance(self, key):
        return self.entry(key)['provenance']


@lru_cache(maxsize=8)
def fixture_store(directory=None):
    return FixtureStore(directory)
