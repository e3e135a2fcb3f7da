"""Test suite for multihntf"""
