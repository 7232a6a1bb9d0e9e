"""Tests for svineq."""
