class SubParser:
    ENUMERATE = "enumerate"
    DECODE = "decode"
    SIMULATE = "simulate"
    EXAMPLES = "examples"


class ChannelType:
    AWGN = "awgn"
    QSC = "qsc"
    CHEBYSHEV = "chebyshev"


class DecoderType:
    LP = "lp"
    CHEBYSHEV = "chebyshev"


class Metric:
    HAMMING = "hamming"
    CHEBYSHEV = "chebyshev"
    EUCLIDEAN = "euclidean"


class Relation:
    LE = "le"
    EQ = "eq"


class LpStatus:
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    FAILED = "failed"


class BuiltinSpec:
    SHIEH = "shieh"
    DERANGEMENT = "derangement"


CSV_HEADER = ["trial", "seed", "channel", "param", "codeword_index",
              "certified", "decoded_index", "word_error"]
