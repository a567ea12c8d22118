from .args import build_parser, parse_args
from .commands import dispatch

__all__ = ['build_parser', 'parse_args', 'dispatch']
