import logging
from logging.handlers import RotatingFileHandler
import sys
from datetime import datetime
import os

from config import LOG_DIR, CONSOLE_LOG_LEVEL


def setup_logger(log_dir=LOG_DIR, console_level=CONSOLE_LOG_LEVEL):
    logger = logging.getLogger('dighom')
    logger.setLevel(logging.DEBUG)
    # Reports own stdout; the console handler writes to stderr.
    logger.propagate = False

    formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s')

    if log_dir:
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)
        log_file = os.path.join(log_dir, f"""dighom_log_{
                                datetime.now().strftime('%Y%m%d_%H%M%S')}.log""")
        file_handler = RotatingFileHandler(
            log_file, maxBytes=10*1024*1024, backupCount=5)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level.upper())
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


logger = setup_logger()
