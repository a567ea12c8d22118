from .loaders import load_algebra, load_group, load_triangulation, load_word
from .serializer import SCHEMA, render, to_jsonable

__all__ = ['SCHEMA', 'load_algebra', 'load_group', 'load_triangulation', 'load_word', 'render', 'to_jsonable']
