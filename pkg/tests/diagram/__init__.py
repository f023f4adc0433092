"""Tests for diagram ingestion."""
