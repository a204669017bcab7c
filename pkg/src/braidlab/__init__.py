"""Exact decision procedures for finite-dimensional braided vector spaces."""

__version__ = "0.1.0"
