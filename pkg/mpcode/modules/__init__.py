from .baseInfo import BaseInfo


error_map = {
    "Success": {
        "message": "success",
        "code": 200,
    },
    "ShapeMismatch": {
        "message": "shape mismatch",
        "code": 1001,
    },
    "LengthMismatch": {
        "message": "length mismatch",
        "code": 1002,
    },
    "MultiplicityMismatch": {
        "message": "symbol counts do not match the multiplicity vector",
        "code": 1003,
    },
    "InvalidMultiplicity": {
        "message": "multiplicity vector must be non-empty positive integers",
        "code": 1004,
    },
    "InitialVectorNotDistinct": {
        "message": "initial vector entries must be pairwise distinct",
        "code": 1005,
    },
    "InvalidMatrix": {
        "message": "not a valid multipermutation or permutation matrix",
        "code": 1006,
    },
    "SymbolOutOfRange": {
        "message": "symbol out of range",
        "code": 1007,
    },
    "InfeasibleRelaxed": {
        "message": "matrix is outside the multipermutation polytope",
        "code": 1101,
    },
    "NoPerfectMatching": {
        "message": "no perfect matching on the positive support, matrix is not doubly stochastic",
        "code": 1102,
    },
    "ConstraintEmpty": {
        "message": "linear constraint has no nonzero coefficient",
        "code": 1201,
    },
    "ConstraintOutOfRange": {
        "message": "constraint index outside the m x n grid",
        "code": 1202,
    },
    "DivisorInvalid": {
        "message": "d must divide m",
        "code": 1203,
    },
    "EnumerationTooLarge": {
        "message": "enumeration exceeds the configured limit",
        "code": 1204,
    },
    "CodebookTooSmall": {
        "message": "codebook needs at least two codewords",
        "code": 1205,
    },
    "EmptyCodebook": {
        "message": "codebook is empty",
        "code": 1206,
    },
    "IndexOutOfRange": {
        "message": "codeword index out of range",
        "code": 1207,
    },
    "CodewordNotInBook": {
        "message": "codeword is not in the codebook",
        "code": 1208,
    },
    "InvalidSigma": {
        "message": "sigma must be positive",
        "code": 1301,
    },
    "InvalidCrossover": {
        "message": "crossover probability must satisfy 0 < p < (m-1)/m",
        "code": 1302,
    },
    "PseudodistanceUndefined": {
        "message": "pseudodistance undefined for coinciding codewords",
        "code": 1303,
    },
    "LpInfeasible": {
        "message": "LP infeasible, code spec is inconsistent",
        "code": 1401,
    },
    "LpUnbounded": {
        "message": "LP unbounded",
        "code": 1402,
    },
    "LpFailed": {
        "message": "LP solver failed",
        "code": 1403,
    },
    "VariableOutOfRange": {
        "message": "LP row references an unknown variable",
        "code": 1404,
    },
    "OracleTooLarge": {
        "message": "oracle request exceeds the evaluation cap",
        "code": 1501,
    },
    "SpecFileInvalid": {
        "message": "code spec file invalid",
        "code": 1601,
    },
    "ReceivedInvalid": {
        "message": "received word invalid",
        "code": 1602,
    },
    "ParamGridInvalid": {
        "message": "parameter grid invalid",
        "code": 1603,
    },
    "SimulationFailed": {
        "message": "simulation failed",
        "code": 1604,
    },
}


class ErrorMsg:
    Success = error_map["Success"]
    ShapeMismatch = error_map["ShapeMismatch"]
    LengthMismatch = error_map["LengthMismatch"]
    MultiplicityMismatch = error_map["MultiplicityMismatch"]
    InvalidMultiplicity = error_map["InvalidMultiplicity"]
    InitialVectorNotDistinct = error_map["InitialVectorNotDistinct"]
    InvalidMatrix = error_map["InvalidMatrix"]
    SymbolOutOfRange = error_map["SymbolOutOfRange"]
    InfeasibleRelaxed = error_map["InfeasibleRelaxed"]
    NoPerfectMatching = error_map["NoPerfectMatching"]
    ConstraintEmpty = error_map["ConstraintEmpty"]
    ConstraintOutOfRange = error_map["ConstraintOutOfRange"]
    DivisorInvalid = error_map["DivisorInvalid"]
    EnumerationTooLarge = error_map["EnumerationTooLarge"]
    CodebookTooSmall = error_map["CodebookTooSmall"]
    EmptyCodebook = error_map["EmptyCodebook"]
    IndexOutOfRange = error_map["IndexOutOfRange"]
    CodewordNotInBook = error_map["CodewordNotInBook"]
    InvalidSigma = error_map["InvalidSigma"]
    InvalidCrossover = error_map["InvalidCrossover"]
    PseudodistanceUndefined = error_map["PseudodistanceUndefined"]
    LpInfeasible = error_map["LpInfeasible"]
    LpUnbounded = error_map["LpUnbounded"]
    LpFailed = error_map["LpFailed"]
    VariableOutOfRange = error_map["VariableOutOfRange"]
    OracleTooLarge = error_map["OracleTooLarge"]
    SpecFileInvalid = error_map["SpecFileInvalid"]
    ReceivedInvalid = error_map["ReceivedInvalid"]
    ParamGridInvalid = error_map["ParamGridInvalid"]
    SimulationFailed = error_map["SimulationFailed"]


# CLI exits 2 on these, 1 on every other MpCodeError
USAGE_ERROR_CODES = {
    ErrorMsg.SpecFileInvalid["code"],
    ErrorMsg.ReceivedInvalid["code"],
    ErrorMsg.ParamGridInvalid["code"],
    ErrorMsg.LengthMismatch["code"],
}


def build_ret(error, data):
    if isinstance(error, str):
        error = {
            "message": error,
            "code": 999,
        }

    ret = {}
    ret.update(error)
    ret["data"] = data
    msg = error["message"]

    if error["code"] != 200:
        for k in data:
            if k.endswith("id"):
                continue
            if data[k] is None or data[k] == "":
                continue
            if isinstance(data[k], (str, int, float)):
                msg += " {}:{}".format(k, data[k])

    ret["message"] = msg
    return ret


class MpCodeError(Exception):
    def __init__(self, error, /, **data):
        self.error = error
        self.data = data
        self.ret = build_ret(error, data)
        super(MpCodeError, self).__init__(self.ret["message"])

    @property
    def code(self):
        return self.error["code"]

    @property
    def message(self):
        return self.ret["message"]

    @property
    def is_usage_error(self):
        return self.code in USAGE_ERROR_CODES


from .multiperm import MultiplicityVector, InitialVector, IndexSets, Multipermutation
from .multiperm import MultipermutationMatrix, PermutationMatrix
from .relaxed import RelaxedMatrix, DoublyStochasticMatrix, ConvexCombination, MembershipReport
from .codeSpec import LinearConstraint, CodeSpec, Codebook, PermutationSpec
from .channel import AwgnChannel, QSymmetricChannel, CostMatrix
from .lpModel import LinearProgram, LpSolution, DecodeResult, OracleResult
from .simRecord import SimulationRecord, CSV_HEADER
