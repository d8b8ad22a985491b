"""Command handlers package"""
