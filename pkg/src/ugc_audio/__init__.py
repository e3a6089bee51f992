"""Generative-audio pipeline for user-built game levels and vehicles."""

__version__ = "0.1.0"
