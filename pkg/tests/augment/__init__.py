"""Tests for augmentation classification and reports."""
