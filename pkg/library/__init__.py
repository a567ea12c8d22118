from .loader import get_library_loader, LibraryLoader

__all__ = ['get_library_loader', 'LibraryLoader']
