"""Tests for the cordaug package."""
