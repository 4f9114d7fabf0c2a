import csv
import numpy as np
from mpcode import utils
from mpcode.conf import Conf
from mpcode.core.const import ChannelType, DecoderType, CSV_HEADER
from mpcode.core.SimulationRunner import SimulationRunner
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.modules import AwgnChannel, QSymmetricChannel, SimulationRecord
from mpcode.services.codes import enumerate_codebook
from mpcode.services.channels import union_bound_awgn
from mpcode.services.lpdec import decode_memoryless, decode_chebyshev

logger = utils.get_logger()


def make_channel(channel_type, param, m):
    if channel_type == ChannelType.AWGN:
        return AwgnChannel(param)
    if channel_type == ChannelType.QSC:
        return QSymmetricChannel(param, m, allow_zero=True)
    raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="unknown channel", channel=str(channel_type))


class Simulation(object):
    """
    Transmit a uniformly drawn codeword, pass it through the channel and
    LP decode, `trials` times per grid value. Trial k of grid point g draws
    from the stream (seed, g, k).
    """

    def __init__(self, spec, channel_type, grid, trials, seed=0,
                 decoder=DecoderType.LP, concurrency=None, union_bound=False, book=None):
        self.spec = spec
        self.channel_type = channel_type
        self.grid = list(grid)
        self.trials = int(trials)
        self.seed = int(seed)
        self.decoder = decoder
        self.concurrency = Conf.SIM_CONCURRENCY if concurrency is None else concurrency
        self.union_bound = union_bound
        self.book = book
        self.summaries = []
        self._check()

    def _check(self):
        if not self.grid:
            raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="empty grid")
        if self.trials < 1:
            raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="trials must be positive")
        if self.seed < 0:
            raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="seed must be non negative")
        if self.decoder == DecoderType.CHEBYSHEV and self.channel_type != ChannelType.AWGN:
            raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="chebyshev decoder needs an awgn channel")
        if self.union_bound and self.channel_type != ChannelType.AWGN:
            raise MpCodeError(ErrorMsg.ParamGridInvalid, reason="union bound needs an awgn channel")

        for param in self.grid:
            try:
                make_channel(self.channel_type, param, self.spec.m)
            except MpCodeError as e:
                raise MpCodeError(ErrorMsg.ParamGridInvalid, reason=e.message, param=param)

    def trial(self, trial, arg):
        grid_index, param = arg
        rng = utils.make_rng(self.seed, grid_index, trial)
        channel = make_channel(self.channel_type, param, self.spec.m)

        k = int(rng.integers(len(self.book)))
        X = self.book[k]
        symbols = np.array(X.symbols)

        if self.channel_type == ChannelType.AWGN:
            y = channel.sample(self.spec.t.array[symbols - 1], rng)
        else:
            y = channel.sample(symbols, rng)

        if self.decoder == DecoderType.CHEBYSHEV:
            result = decode_chebyshev(self.spec, y)
        else:
            result = decode_memoryless(self.spec, channel.cost_matrix(y, self.spec.t))

        decoded_index = -1
        if result.valid:
            found = self.book.find(result.decoded.x)
            if found is not None:
                decoded_index = found

        return SimulationRecord(trial=trial, seed=self.seed, channel=self.channel_type,
                                param=param, codeword_index=k, certified=result.certificate,
                                decoded_index=decoded_index,
                                word_error=result.decoded.x != X.symbols)

    def _mean_union_bound(self, sigma):
        total = sum(union_bound_awgn(self.book, X, self.spec.t, sigma) for X in self.book)
        return total / len(self.book)

    def summarize(self, param, records):
        errors = sum(1 for rec in records if rec.word_error)
        certified = sum(1 for rec in records if rec.certified)
        item = {
            "channel": self.channel_type,
            "param": param,
            "trials": len(records),
            "word_errors": errors,
            "wer": errors / len(records),
            "certificate_rate": certified / len(records),
        }
        if self.union_bound:
            item["union_bound"] = self._mean_union_bound(param)
        return item

    def run(self):
        if self.book is None:
            self.book = enumerate_codebook(self.spec)
        if len(self.book) == 0:
            raise MpCodeError(ErrorMsg.EmptyCodebook)

        logger.info("simulate {} codewords channel {} decoder {} trials {}".format(
            len(self.book), self.channel_type, self.decoder, self.trials))

        runner = SimulationRunner(self.trial, self.grid, self.trials, concurrency=self.concurrency)
        for _, param, records in runner.run():
            summary = self.summarize(param, records)
            self.summaries.append(summary)
            logger.success(format_summary(summary))
            yield records


def format_summary(summary):
    line = "{} param={} trials={} wer={:.6g} certificate_rate={:.6g}".format(
        summary["channel"], summary["param"], summary["trials"],
        summary["wer"], summary["certificate_rate"])
    if "union_bound" in summary:
        line += " union_bound={:.6g}".format(summary["union_bound"])
    return line


def write_header(stream):
    stream.write("# schema_version={}\n".format(Conf.CSV_SCHEMA_VERSION))
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    return writer


def run_simulation(spec, channel_type, grid, trials, seed, stream, **kwargs):
    """stream CSV for every grid point; returns the per-point summaries"""
    sim = Simulation(spec, channel_type, grid, trials, seed, **kwargs)
    writer = write_header(stream)
    for records in sim.run():
        for rec in records:
            writer.writerow(rec.to_row())
    return sim.summaries
