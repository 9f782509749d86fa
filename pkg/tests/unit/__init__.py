"""Unit tests for graphprod-py."""
