from mpcode.core.const import CSV_HEADER
from .baseInfo import BaseInfo


class SimulationRecord(BaseInfo):
    """One trial of a simulation, one CSV row."""

    def __init__(self, trial, seed, channel, param, codeword_index,
                 certified, decoded_index, word_error):
        self.trial = int(trial)
        self.seed = int(seed)
        self.channel = channel
        self.param = float(param)
        self.codeword_index = int(codeword_index)
        self.certified = bool(certified)
        self.decoded_index = int(decoded_index)
        self.word_error = bool(word_error)

    def to_row(self):
        return [
            self.trial,
            self.seed,
            self.channel,
            repr(self.param),
            self.codeword_index,
            int(self.certified),
            self.decoded_index,
            int(self.word_error),
        ]

    def _dump_json(self):
        return dict(zip(CSV_HEADER, self.to_row()))
