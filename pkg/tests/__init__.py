"""
Test suite for Agent Bot.
"""
