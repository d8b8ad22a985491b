"""Verification pipelines package"""
