"""Unit tests for svineq."""
