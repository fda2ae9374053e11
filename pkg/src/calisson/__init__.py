"""Lozenge tilings of triangular-grid regions under non-overlap and saliency constraints."""

__version__ = "0.1.0"
