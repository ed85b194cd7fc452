"""Cuspidal ribbon tilings of skew shapes in affine type A."""
