"""WaveSelect Backend Package"""
