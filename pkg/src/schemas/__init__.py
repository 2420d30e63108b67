"""Pydantic schemas for table rows and reports"""
