import os
import argparse
import logging
import mpcode
from mpcode.conf import Conf, load_conf


class ObjectDict(dict):
    """Makes a dictionary behave like an object, with attribute-style access.
    """

    def __getattr__(self, name):
        # type: (str) -> any
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    def __setattr__(self, name, value):
        # type: (str, any) -> None
        self[name] = value


class ArgumentDefaultsHelpFormatter(argparse.HelpFormatter):
    """Help message formatter which adds default values to argument help.

    Only the name of this class is considered a public API. All the methods
    provided by the class are considered an implementation detail.
    """

    def _get_help_string(self, action):
        help = action.help
        if '%(default)' not in action.help:
            if action.default is not argparse.SUPPRESS:
                defaulting_nargs = [argparse.OPTIONAL, argparse.ZERO_OR_MORE]
                if action.option_strings or action.nargs in defaulting_nargs:
                    if action.default is not None:
                        help += ' (default: %(default)s)'
        return help


def _add_spec_argument(parser):
    parser.add_argument('--spec',
                        '-s',
                        required=True,
                        help='code spec JSON file')


def build_parser():
    parser = argparse.ArgumentParser(prog="mpcode",
                                     formatter_class=ArgumentDefaultsHelpFormatter)

    parser.add_argument('--version', '-V',
                        action='version', version='%(prog)s ' + mpcode.__version__)

    parser.add_argument('--quit',
                        '-q',
                        action='store_true',
                        help='安静模式, no logging',
                        default=False)

    parser.add_argument('--log',
                        '-L',
                        default='info',
                        choices=["debug", "info", "success", "warning", "error"],
                        help='日志等级')

    parser.add_argument('--config',
                        help='YAML file overriding tolerances and limits')

    subparsers = parser.add_subparsers(dest='subparser', help='子命令')

    parser_enumerate = subparsers.add_parser(SubParser.ENUMERATE, help='enumerate a code',
                                             formatter_class=ArgumentDefaultsHelpFormatter)
    _add_spec_argument(parser_enumerate)
    parser_enumerate.add_argument('--max',
                                  '-k',
                                  default=10,
                                  type=int,
                                  help='number of codewords to print')

    parser_decode = subparsers.add_parser(SubParser.DECODE, help='LP decode one received word',
                                          formatter_class=ArgumentDefaultsHelpFormatter)
    _add_spec_argument(parser_decode)
    parser_decode.add_argument('--channel',
                               required=True,
                               choices=[ChannelType.AWGN, ChannelType.QSC, ChannelType.CHEBYSHEV],
                               help='channel model of the decoder')

    parser_decode.add_argument('--param',
                               '-p',
                               type=float,
                               help='sigma for awgn, crossover p for qsc')

    parser_decode.add_argument('--received',
                               '-y',
                               required=True,
                               help='received word, comma separated')

    parser_simulate = subparsers.add_parser(SubParser.SIMULATE, help='channel + decoder simulation',
                                            formatter_class=ArgumentDefaultsHelpFormatter)
    _add_spec_argument(parser_simulate)
    parser_simulate.add_argument('--channel',
                                 required=True,
                                 choices=[ChannelType.AWGN, ChannelType.QSC],
                                 help='simulated channel')

    parser_simulate.add_argument('--param-grid',
                                 '-g',
                                 required=True,
                                 help='sigma or p values, comma separated')

    parser_simulate.add_argument('--trials',
                                 '-n',
                                 default=100,
                                 type=int,
                                 help='trials per grid point')

    parser_simulate.add_argument('--seed',
                                 default=0,
                                 type=int,
                                 help='root seed')

    parser_simulate.add_argument('--out',
                                 '-o',
                                 help='CSV output file, stdout when omitted')

    parser_simulate.add_argument('--decoder',
                                 default=DecoderType.LP,
                                 choices=[DecoderType.LP, DecoderType.CHEBYSHEV],
                                 help='decoder, chebyshev only over awgn')

    parser_simulate.add_argument('--concurrency-count',
                                 '-c',
                                 default=Conf.SIM_CONCURRENCY,
                                 type=int,
                                 help='并发数量')

    parser_simulate.add_argument('--union-bound',
                                 action='store_true',
                                 default=False,
                                 help='append the AWGN union bound to each summary line')

    parser_examples = subparsers.add_parser(SubParser.EXAMPLES, help='run the worked examples',
                                            formatter_class=ArgumentDefaultsHelpFormatter)
    parser_examples.add_argument('--eps-int',
                                 type=float,
                                 help='integrality tolerance used by the checks')

    return parser


def init_args(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    update_conf(args)

    return args, parser


def update_conf(args):
    config = getattr(args, "config", None)
    if config:
        if not os.path.isfile(config):
            raise ValueError("config file {} not found".format(config))
        load_conf(config)

    loglevel = args.log
    numeric_level = getattr(logging, loglevel.upper(), None)
    if loglevel == "success":
        numeric_level = Conf.SUCCESS_LEVEL

    if not isinstance(numeric_level, int):
        raise ValueError('Invalid log level:{0}'.format(loglevel))

    Conf.LOGGER_LEVEL = numeric_level

    if args.quit:
        Conf.LOGGER_LEVEL = 1000


from mpcode.core.const import SubParser, ChannelType, DecoderType, Metric, Relation, LpStatus
from mpcode.core.const import BuiltinSpec, CSV_HEADER
from mpcode.core.ThreadMap import thread_map, ThreadMap
from mpcode.core.BaseThread import BaseThread
