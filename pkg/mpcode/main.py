#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import sys
import json
from mpcode.core import init_args, SubParser, ChannelType, Metric
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.utils import get_logger, parse_number_list
from mpcode import services
from mpcode.services import codes, channels, lpdec


def cmd_enumerate(args):
    logger = get_logger()
    spec = services.load_spec_file(args.spec)
    book = codes.enumerate_codebook(spec)
    logger.info("enumerate {} -> {} codewords".format(args.spec, len(book)))

    line = "{} codewords".format(len(book))
    if len(book) >= 2:
        line += ", d_H_min = {}, d_inf_min = {:g}, d_euc_min = {:.6g}".format(
            codes.min_distance(book, Metric.HAMMING),
            codes.min_distance(book, Metric.CHEBYSHEV),
            codes.min_distance(book, Metric.EUCLIDEAN))
    print(line)

    for k, X in enumerate(book):
        if k >= args.max:
            break
        print("[{}] {}".format(k, ",".join(str(s) for s in X.symbols)))

    return 0


def cmd_decode(args, parser):
    spec = services.load_spec_file(args.spec)

    if args.channel == ChannelType.CHEBYSHEV:
        y = services.parse_received(args.received, spec.n)
        result = lpdec.decode_chebyshev(spec, y)

    elif args.channel == ChannelType.AWGN:
        if args.param is None:
            parser.error("--param sigma is required for awgn")
        y = services.parse_received(args.received, spec.n)
        result = lpdec.decode_memoryless(spec, channels.cost_matrix_awgn(y, spec.t, args.param))

    else:
        if args.param is None:
            parser.error("--param p is required for qsc")
        y = services.parse_received(args.received, spec.n, symbols_m=spec.m)
        result = lpdec.decode_memoryless(spec, channels.cost_matrix_qsc(y, args.param, spec.m))

    item = result.dump_json(flag=False)
    item["channel"] = args.channel
    print(json.dumps(item, sort_keys=True))
    return 0


def cmd_simulate(args):
    spec = services.load_spec_file(args.spec)
    try:
        grid = parse_number_list(args.param_grid)
    except ValueError:
        raise MpCodeError(ErrorMsg.ParamGridInvalid, grid=args.param_grid)

    kwargs = dict(decoder=args.decoder, concurrency=args.concurrency_count,
                  union_bound=args.union_bound)

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            summaries = services.run_simulation(spec, args.channel, grid, args.trials, args.seed, f, **kwargs)
        summary_stream = sys.stdout
    else:
        # stdout carries the CSV
        summaries = services.run_simulation(spec, args.channel, grid, args.trials, args.seed, sys.stdout, **kwargs)
        summary_stream = sys.stderr

    for summary in summaries:
        print(services.simulate.format_summary(summary), file=summary_stream)

    return 0


def cmd_examples(args):
    results = services.run_worked_examples(eps_int=args.eps_int)
    for name, ok in results:
        print("{} {}".format("PASS" if ok else "FAIL", name))

    if all(ok for _, ok in results):
        return 0
    return 1


def main(argv=None):
    try:
        args, parser = init_args(argv)
    except ValueError as e:
        # bad --config content
        get_logger().error(str(e))
        sys.exit(2)

    logger = get_logger()
    try:
        if args.subparser == SubParser.ENUMERATE:
            code = cmd_enumerate(args)

        elif args.subparser == SubParser.DECODE:
            code = cmd_decode(args, parser)

        elif args.subparser == SubParser.SIMULATE:
            code = cmd_simulate(args)

        elif args.subparser == SubParser.EXAMPLES:
            code = cmd_examples(args)

        else:
            parser.print_usage()
            code = 2

    except MpCodeError as e:
        logger.error(e.message)
        code = 2 if e.is_usage_error else 1

    except OSError as e:
        logger.error("io error {}".format(e))
        code = 1

    sys.exit(code)


if __name__ == '__main__':  # pragma: no cover
    main()
