"""Test suite for Permia Backend"""
