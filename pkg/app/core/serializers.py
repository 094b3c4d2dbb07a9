"""
Serializers for exact values, fixtures and reports.
"""
from rest_framework import serializers

from core.exceptions import HarderLabError
from core.models import Provenance
from core.utils import format_exact, parse_exact


class ExactValueField(serializers.Field):
    """Exact numbers travel as strings, never as floats."""

    def to_representation(self, value):
        return format_exact(value)

    def to_internal_value(self, data):
        try:
            return parse_exact(data)
        except HarderLabError as exc:
            raise serializers.ValidationError(str(exc))


class FixtureEntrySerializer(serializers.Serializer):
    """A stored exact value, or the integer coefficients of a polynomial."""
    key = serializers.CharField(max_length=255)
    value = ExactValueField(required=False)
    coeffs = serializers.ListField(child=serializers.IntegerField(), required=False)
    provenance = serializers.ChoiceField(choices=Provenance.choices)
    citation = serializers.CharField(required=False, allow_blank=True, default='')
    index = serializers.JSONField(required=False)

    def validate(self, attrs):
        if 'value' not in attrs and 'coeffs' not in attrs:
            raise serializers.ValidationError(f'Fixture {attrs.get("key")} needs a value or coeffs')
        return attrs


class AssertionSerializer(serializers.Serializer):
    description = serializers.CharField()
    expected = ExactValueField()
    got = ExactValueField()
    status = serializers.CharField()


class ReportSerializer(serializers.Serializer):
    case = serializers.CharField()
    status = serializers.CharField()
    assertions = AssertionSerializer(many=True)
    notes = serializers.ListField(child=serializers.CharField())
    capabilities = serializers.ListField(child=serializers.CharField())
    timing_seconds = serializers.FloatField()
