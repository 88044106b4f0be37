# tests/integration/__init__.py
"""Tests de integración"""
