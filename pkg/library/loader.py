import json
import os
from typing import Dict, List, Optional
import logging

from core.lattice.triangulation import Triangulation, triangulation_from_dict

logger = logging.getLogger('lattice')


class LibraryLoader:
    """Loads and caches the bundled triangulations from JSON files"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(LibraryLoader, cls).__new__(cls)
            cls._instance._surfaces = {}
            cls._instance._load_all_surfaces()
        return cls._instance

    def _load_all_surfaces(self) -> None:
        """Load all triangulation JSON files from the library directory"""
        library_dir = os.path.dirname(os.path.abspath(__file__))
        for filename in sorted(os.listdir(library_dir)):
            if filename.endswith('.json'):
                try:
                    filepath = os.path.join(library_dir, filename)
                    with open(filepath, 'r') as f:
                        data = json.load(f)
                    name = data.get('name', filename[:-len('.json')])
                    self._surfaces[name] = triangulation_from_dict(data, name=name)
                except Exception as e:
                    logger.error(f"Error loading triangulation {filename}: {e}")

    def get_triangulation(self, name: str) -> Optional[Triangulation]:
        """Get a fresh copy of a bundled triangulation by name"""
        surface = self._surfaces.get(name)
        return surface.copy() if surface is not None else None

    def get_all_names(self) -> List[str]:
        """Get a list of all bundled triangulation names"""
        return list(self._surfaces.keys())


# Singleton instance for easy access
_loader = None

def get_library_loader() -> LibraryLoader:
    """Get the singleton library loader instance"""
    global _loader
    if _loader is None:
        _loader = LibraryLoader()
    return _loader
