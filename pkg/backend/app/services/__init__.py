"""Wavefront planning, terrain profiling and robot selection services"""
