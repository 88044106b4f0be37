"""
Infrastructure layer: file formats and the local artifact store.
"""
