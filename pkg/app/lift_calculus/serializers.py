"""
Serializers for A-parameters.
"""
import json

from rest_framework import serializers

from core.exceptions import PreconditionError
from core.serializers import ExactValueField
from lift_calculus.models import AParameter, Piece, PieceKind


class PieceSerializer(serializers.Serializer):
    """One piece pi[d]; the kind decides which of the weight fields are read."""
    kind = serializers.ChoiceField(choices=PieceKind.choices)
    d = serializers.IntegerField(min_value=1, default=1)
    label = serializers.CharField(required=False, allow_blank=True, default='')
    weight = serializers.IntegerField(required=False)
    k = serializers.IntegerField(required=False)
    j = serializers.IntegerField(required=False)
    k1 = serializers.IntegerField(required=False)
    k2 = serializers.IntegerField(required=False)
    n = serializers.IntegerField(required=False)
    weights = serializers.ListField(child=ExactValueField(), required=False)

    FIELDS = {
        PieceKind.ELLIPTIC: ('weight',),
        PieceKind.SIEGEL2: ('k', 'j'),
        PieceKind.RANKIN: ('k1', 'k2'),
        PieceKind.TRIVIAL: (),
        PieceKind.GENERIC: ('n', 'weights'),
    }

    def validate(self, attrs):
        kind = attrs['kind']
        missing = [name for name in self.FIELDS[kind] if name not in attrs]
        if missing:
            raise serializers.ValidationError(f'A {kind} piece needs {", ".join(missing)}')
        try:
            if kind == PieceKind.ELLIPTIC:
                return Piece.elliptic(attrs['weight'], attrs['d'], attrs['label'])
            if kind == PieceKind.SIEGEL2:
                return Piece.siegel2(attrs['k'], attrs['j'], attrs['d'], attrs['label'])
            if kind == PieceKind.RANKIN:
                return Piece.rankin(attrs['k1'], attrs['k2'], attrs['d'], attrs['label'])
            if kind == PieceKind.TRIVIAL:
                return Piece.trivial(attrs['d'])
            return Piece.generic(attrs['n'], attrs['weights'], attrs['d'], attrs['label'])
        except PreconditionError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, instance):
        return {'kind': instance.kind, 'n': instance.n, 'd': instance.d, 'label': instance.label,
                'weights': [str(w) for w in instance.weights]}


class AParameterSerializer(serializers.Serializer):
    pieces = PieceSerializer(many=True)

    def validate(self, attrs):
        try:
            return AParameter(tuple(attrs['pieces']))
        except PreconditionError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, instance):
        return {'pieces': PieceSerializer(instance.pieces, many=True).data, 'rank': instance.rank,
                'i0': instance.i0}


def parse_parameter(text):
    """AParameter from CLI JSON {"pieces": [...]}."""
    try:
        data = json.loads(text)
    except ValueError as exc:
        raise PreconditionError(f'A-parameter JSON is malformed: {exc}') from exc
    serializer = AParameterSerializer(data=data)
    if not serializer.is_valid():
        raise PreconditionError(f'Invalid A-parameter: {serializer.errors}')
    return serializer.validated_data
