"""Simulatore classico dei perceptron basati sulla ricerca di Grover."""

__version__ = "0.1.0"
