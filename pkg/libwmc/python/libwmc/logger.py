import logging
from pathlib import Path
from typing import Optional


class Formatter(logging.Formatter):
    """Formats records with the wall clock time and the logger name."""
    def usesTime(self) -> bool:
        return True

    def formatMessage(self, record: logging.LogRecord) -> str:
        return (
                'wmclab %(asctime)s %(levelname)-7s %(name)s:'
                ' %(message)s' % record.__dict__)


class Logger:
    """Configures logging for a command line run.

    Installs a handler writing to standard error, or to a file if one
    is given, and sets the level of the libwmc loggers.
    """
    def __init__(
            self, log_file: Optional[Path] = None,
            log_level: Optional[str] = None) -> None:
        """Create a Logger.

        Log levels may be any of the Python predefined log levels, i.e.
        critical, error, warning, info and debug, and they're
        case-insensitive.

        Args:
            log_file: File to write the log to, or None for stderr.
            log_level: Log level to set, WARNING by default.
        """
        if log_file is None:
            self._handler: logging.Handler = logging.StreamHandler()
        else:
            self._handler = logging.FileHandler(str(log_file), mode='w')
        self._handler.setFormatter(Formatter())

        # Drop default stderr handlers, but leave pytest's caplog alone
        logging.getLogger().handlers = [
                h for h in logging.getLogger().handlers
                if 'stderr' not in str(h)]
        logging.getLogger().addHandler(self._handler)

        if log_level is None:
            log_level = 'WARNING'
        else:
            log_level = log_level.upper()
        logging.getLogger('libwmc').setLevel(log_level)
        logging.getLogger('wmclab').setLevel(log_level)
        logging.getLogger('yatiml').setLevel(logging.WARNING)

    def close(self) -> None:
        logging.getLogger().removeHandler(self._handler)
        self._handler.close()
