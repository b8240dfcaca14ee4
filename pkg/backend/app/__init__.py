"""WaveSelect application package: wavefront planning and robot selection"""

__version__ = "1.0.0"
