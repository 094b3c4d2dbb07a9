"""
Serializers for half-integral matrices and local series.
"""
import json

from rest_framework import serializers

from core.exceptions import PreconditionError
from local_siegel.models import HalfIntegralMat


class MatrixSerializer(serializers.Serializer):
    """Matrix JSON {"n": n, "twoT": [[...]]}; validated data is a HalfIntegralMat."""
    n = serializers.IntegerField(min_value=0)
    twoT = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))

    def validate(self, attrs):
        rows = attrs['twoT']
        if len(rows) != attrs['n']:
            raise serializers.ValidationError(f'twoT has {len(rows)} rows, expected {attrs["n"]}')
        try:
            return HalfIntegralMat(rows)
        except PreconditionError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, instance):
        return {'n': instance.n, 'twoT': [list(row) for row in instance.G]}


class LocalSeriesSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    coeffs = serializers.ListField(child=serializers.IntegerField())
    depth = serializers.IntegerField(allow_null=True)


def parse_matrix(text):
    """HalfIntegralMat from CLI JSON: either {"n": n, "twoT": [...]} or the bare 2T rows."""
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise PreconditionError(f'Matrix JSON is malformed: {exc}') from exc
    if isinstance(data, list):
        data = {'n': len(data), 'twoT': data}
    serializer = MatrixSerializer(data=data)
    if not serializer.is_valid():
        raise PreconditionError(f'Invalid matrix: {serializer.errors}')
    return serializer.validated_data
