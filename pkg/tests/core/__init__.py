"""Tests for core models and registry."""
