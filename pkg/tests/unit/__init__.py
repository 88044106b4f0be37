# tests/unit/__init__.py
"""Tests unitarios"""
