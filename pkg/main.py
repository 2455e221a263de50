"""
Entry point for icdef.
"""
from src.interface.cli.main import main_sync

if __name__ == "__main__":
    main_sync()
