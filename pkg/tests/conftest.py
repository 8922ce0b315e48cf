"""Shared test configuration.

The presence of this file puts tests/ on sys.path so the test modules can
import the sibling ``oracles`` helpers.
"""
