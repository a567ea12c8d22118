import logging
import os

COMPONENTS = ('core', 'lattice', 'modular', 'cli', 'selftest')


def setup_logging(logs_dir: str = None, level: int = logging.DEBUG):
    """Set up logging configuration with separate loggers for different components."""
    logs_dir = logs_dir or os.environ.get('TQFT_LOG_DIR', 'logs')
    # Create logs directory if it doesn't exist
    if not os.path.exists(logs_dir):
        os.makedirs(logs_dir)

    # Common formatter for all loggers
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    # core: groups, characters, algebras, cobordisms, bundle counting
    # lattice: triangulations, Pachner moves, exact contractions
    # modular: Drinfeld double and SU(2)_k data, Verlinde formulas
    # cli: argument handling and dispatch
    # selftest: the oracle suite
    for name in COMPONENTS:
        component_logger = logging.getLogger(name)
        for handler in list(component_logger.handlers):
            component_logger.removeHandler(handler)
            handler.close()
        handler = logging.FileHandler(os.path.join(logs_dir, f'{name}.log'), mode='w')
        handler.setFormatter(formatter)
        component_logger.addHandler(handler)
        component_logger.setLevel(level)
        # Prevent log propagation to avoid duplicate entries
        component_logger.propagate = False

    # Root logger for any uncategorized logs
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if isinstance(handler, logging.FileHandler):
            root_logger.removeHandler(handler)
            handler.close()
    root_handler = logging.FileHandler(os.path.join(logs_dir, 'tqft.log'), mode='w')
    root_handler.setFormatter(formatter)
    root_logger.addHandler(root_handler)
    root_logger.setLevel(level)
