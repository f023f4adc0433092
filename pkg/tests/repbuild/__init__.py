"""Tests for representation construction."""
