"""Tests for the solve stage."""
