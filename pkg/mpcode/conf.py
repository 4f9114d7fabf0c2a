import os
import logging
import yaml


class Conf(object):
    """运行配置类"""

    """源码目录"""
    PROJECT_DIRECTORY = os.path.abspath(os.path.dirname(__file__))

    """YAML配置文件路径"""
    CONFIG_YAML_PATH = "config.yml"

    """exact-input feasibility tolerance for the multipermutation polytope"""
    EPS_FEAS = 1e-9

    """feasibility tolerance when Z comes out of the LP solver"""
    EPS_FEAS_LP = 1e-6

    """integrality tolerance of the ML certificate"""
    EPS_INT = 1e-6

    """LP row and bound feasibility tolerance"""
    EPS_LP = 1e-8

    """multinomial guard for codebook enumeration"""
    ENUM_LIMIT = 10 ** 7

    """n! guard for permutation code enumeration"""
    PERM_ENUM_LIMIT = 10 ** 6

    """maximum codeword evaluations per oracle call"""
    ORACLE_LIMIT = 10 ** 6

    """absolute tolerance when grouping co-optimal oracle values"""
    ORACLE_TIE_TOL = 1e-9

    """numpy bit generator used for every simulation stream"""
    RNG_ALGORITHM = "PCG64"

    """simulation worker count"""
    SIM_CONCURRENCY = 4

    """l1 tie-break refinement after the min-delta Chebyshev LP"""
    CHEBYSHEV_REFINE = True

    """crossover used for decoder costs when the simulated q-SC has p = 0"""
    QSC_P_FLOOR = 1e-12

    """CSV schema version written in the comment header"""
    CSV_SCHEMA_VERSION = 1

    """日志等级"""
    LOGGER_LEVEL = logging.INFO

    SUCCESS_LEVEL = 51


def _as_bool(value):
    if not isinstance(value, bool):
        raise ValueError("expected true or false, got {!r}".format(value))
    return value


# yaml section -> {key: (Conf attribute, cast)}
_YAML_KEYS = {
    "tolerance": {
        "feas": ("EPS_FEAS", float),
        "feas_lp": ("EPS_FEAS_LP", float),
        "int": ("EPS_INT", float),
        "lp": ("EPS_LP", float),
        "oracle_tie": ("ORACLE_TIE_TOL", float),
    },
    "limit": {
        "enumerate": ("ENUM_LIMIT", int),
        "permutation": ("PERM_ENUM_LIMIT", int),
        "oracle": ("ORACLE_LIMIT", int),
    },
    "simulation": {
        "concurrency": ("SIM_CONCURRENCY", int),
        "chebyshev_refine": ("CHEBYSHEV_REFINE", _as_bool),
        "qsc_p_floor": ("QSC_P_FLOOR", float),
    },
    "random": {
        "algorithm": ("RNG_ALGORITHM", str),
    },
}


def load_yaml_config(filename=None):
    if filename is None:
        filename = os.environ.get('MPCODE_CONFIG_FILE',
                                  os.path.join(Conf.PROJECT_DIRECTORY, Conf.CONFIG_YAML_PATH))

    if not os.path.isfile(filename):
        return {}

    with open(filename, 'r', encoding='utf-8') as f:
        try:
            config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError("{} is not valid yaml: {}".format(filename, e))

    if config is None:
        return {}

    if not isinstance(config, dict):
        raise ValueError("{} is not a mapping".format(filename))

    return config


def apply_yaml_config(yml_config):
    for section, keys in _YAML_KEYS.items():
        values = yml_config.get(section)
        if not values:
            continue

        if not isinstance(values, dict):
            raise ValueError("config section {} is not a mapping".format(section))

        for key, value in values.items():
            if key not in keys:
                raise ValueError("unknown config key {}.{}".format(section, key))

            attr, cast = keys[key]
            setattr(Conf, attr, cast(value))

    if Conf.RNG_ALGORITHM not in ("PCG64", "PCG64DXSM", "Philox", "SFC64", "MT19937"):
        raise ValueError("unknown random.algorithm {}".format(Conf.RNG_ALGORITHM))


def load_conf(filename=None):
    apply_yaml_config(load_yaml_config(filename))


load_conf()
