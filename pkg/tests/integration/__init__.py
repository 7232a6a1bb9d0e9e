"""Acceptance sweeps over large random samples."""
