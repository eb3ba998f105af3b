from src.cli.main import build_parser, execute, run

__all__ = ["build_parser", "execute", "run"]
