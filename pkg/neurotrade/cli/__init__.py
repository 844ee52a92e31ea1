from neurotrade.cli.main import main

__all__ = ['main']
