"""Tests for cord systems and elimination."""
