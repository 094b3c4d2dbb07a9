"""
Serializers for elliptic eigenforms.
"""
from rest_framework import serializers

from core.serializers import ExactValueField


class PrimitiveFormSerializer(serializers.Serializer):
    weight = serializers.IntegerField()
    D = serializers.IntegerField(source='hecke_field_D')
    label = serializers.CharField(allow_blank=True)
    coeffs = serializers.ListField(child=ExactValueField())


class QExpansionSerializer(serializers.Serializer):
    weight = serializers.IntegerField()
    precision = serializers.IntegerField()
    coeffs = serializers.ListField(child=ExactValueField())
