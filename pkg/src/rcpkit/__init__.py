"""Coprime-pair posets and ring-class checks over explicit finite rings."""

__version__ = "0.1.0"
