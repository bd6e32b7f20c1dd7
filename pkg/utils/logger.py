import os
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Logger:
    _run_id = None
    _log_dir_path = None
    _loggers = {}
    _run_file_handler = None
    _debug_file_handler = None
    _console_level = logging.WARNING
    _is_initialized = False

    @classmethod
    def initialize(cls, log_dir: Optional[str] = None, console_level: Union[int, str] = logging.WARNING):
        """
        Initialize logger at class level. Sets up handlers for all instances to use.

        A later call reconfigures the loggers created so far: the console level is
        replaced and file logging moves to ``log_dir`` (or stops when it is None).
        The run id is assigned by the first call and kept afterwards.

        Args:
            log_dir: Directory where log files will be saved. None disables file logging.
            console_level: Minimum level written to stderr
        """
        first_call = not cls._is_initialized
        if first_call:
            cls._run_id = datetime.now().strftime('%Y%m%d_%H%M%S')
        cls._console_level = logging.getLevelName(console_level) if isinstance(console_level, str) \
            else console_level

        log_dir_path = os.path.abspath(log_dir) if log_dir is not None else None
        if log_dir_path != cls._log_dir_path:
            cls._close_file_handlers()
            if log_dir_path is not None:
                cls._open_file_handlers(log_dir_path)

        for logger in cls._loggers.values():
            cls._attach_handlers(logger)

        # lark logs grammar construction at DEBUG
        logging.getLogger('lark').setLevel(logging.WARNING)

        cls._is_initialized = True
        if first_call:
            Logger("session").debug(f"===== New Session Started: {cls._run_id} =====")

    @classmethod
    def _open_file_handlers(cls, log_dir_path: str):
        run_log_dir = os.path.join(log_dir_path, 'run')
        debug_log_dir = os.path.join(log_dir_path, 'debug')
        Path(run_log_dir).mkdir(parents=True, exist_ok=True)
        Path(debug_log_dir).mkdir(parents=True, exist_ok=True)
        cls._log_dir_path = log_dir_path

        run_file_handler = logging.FileHandler(os.path.join(run_log_dir, f'run_{cls._run_id}.log'))
        run_file_handler.setLevel(logging.INFO)
        run_file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        cls._run_file_handler = run_file_handler

        debug_file_handler = logging.FileHandler(os.path.join(debug_log_dir, f'debug_{cls._run_id}.log'))
        debug_file_handler.setLevel(logging.DEBUG)
        debug_file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        cls._debug_file_handler = debug_file_handler

    @classmethod
    def _close_file_handlers(cls):
        for handler in (cls._run_file_handler, cls._debug_file_handler):
            if handler is not None:
                for logger in cls._loggers.values():
                    logger.removeHandler(handler)
                handler.close()
        cls._run_file_handler = None
        cls._debug_file_handler = None
        cls._log_dir_path = None

    @classmethod
    def _attach_handlers(cls, logger: logging.Logger):
        logger.handlers.clear()
        if cls._run_file_handler is not None:
            logger.addHandler(cls._run_file_handler)
            logger.addHandler(cls._debug_file_handler)

        # StreamHandler defaults to stderr; stdout carries command results only
        console_handler = logging.StreamHandler()
        console_handler.setLevel(cls._console_level)
        console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(console_handler)

    def __init__(self, name: str):
        """
        Initialize a new logger instance

        Args:
            name: Name of the logger
        """
        self.name = name

        if not Logger._is_initialized:
            Logger.initialize()

        # Reuse existing logger if it exists
        if name in Logger._loggers:
            self.logger = Logger._loggers[name]
            return

        self.logger = logging.getLogger(f"bpdl.{name}")
        self.logger.setLevel(logging.DEBUG)
        Logger._attach_handlers(self.logger)
        self.logger.propagate = False
        Logger._loggers[name] = self.logger

    def get_logger_path(self, log_type: str = 'run') -> Optional[str]:
        """
        Get the path to a specific log file

        Args:
            log_type: Type of log (run or debug)

        Returns:
            Path to the log file, or None when file logging is disabled
        """
        if Logger._log_dir_path is None:
            return None
        if log_type == 'run':
            return os.path.join(Logger._log_dir_path, 'run', f'run_{Logger._run_id}.log')
        elif log_type == 'debug':
            return os.path.join(Logger._log_dir_path, 'debug', f'debug_{Logger._run_id}.log')
        else:
            return None

    def info(self, msg):
        """Log an info message"""
        self.logger.info(msg)

    def debug(self, msg):
        """Log a debug message"""
        self.logger.debug(msg)

    def warning(self, msg):
        """Log a warning message"""
        self.logger.warning(msg)

    def error(self, msg):
        """Log an error message"""
        self.logger.error(msg)

    @classmethod
    def get_run_id(cls):
        """Return the current run ID"""
        if not cls._is_initialized:
            cls.initialize()
        return cls._run_id
