import sys
import logging
import colorlog
import numpy as np
from mpcode.conf import Conf
from .file import load_json, clear_empty


SUCCESS = Conf.SUCCESS_LEVEL
logging.addLevelName(SUCCESS, "SUCCESS")


def success(self, message, *args, **kws):
    if self.isEnabledFor(SUCCESS):
        self._log(SUCCESS, message, args, **kws)


logging.Logger.success = success


def init_logger():
    log_colors = {
        'DEBUG': 'white',
        'INFO': 'green',
        'SUCCESS': 'cyan',
        'WARNING': 'yellow',
        'ERROR': 'red',
        'CRITICAL': 'bold_red',
    }

    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(
        fmt='%(log_color)s[%(asctime)s] [%(levelname)s] '
            '[%(threadName)s] [%(filename)s:%(lineno)d] %(message)s',
        log_colors=log_colors, datefmt="%Y-%m-%d %H:%M:%S"))

    logger = colorlog.getLogger('mpcode')
    logger.setLevel(Conf.LOGGER_LEVEL)
    logger.addHandler(handler)
    logger.propagate = False


def get_logger():
    logger = logging.getLogger('mpcode')
    if not logger.handlers:
        init_logger()

    logger.setLevel(Conf.LOGGER_LEVEL)
    return logger


def make_rng(seed, *stream):
    """
    Seeded generator for one replayable stream.

    `stream` is a tuple of non-negative ints (grid index, trial, ...) spawned off
    the root seed, so every trial owns an independent generator.
    """
    if isinstance(seed, np.random.Generator):
        return seed

    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(s) for s in stream))
    bit_generator = getattr(np.random, Conf.RNG_ALGORITHM)
    return np.random.Generator(bit_generator(seq))


def parse_number_list(text, cast=float):
    """'1,2, 3' -> [1.0, 2.0, 3.0]"""
    items = clear_empty(str(text).replace(";", ",").split(","))
    return [cast(item) for item in items]
