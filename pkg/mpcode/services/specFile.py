"""
CodeSpecFile: the JSON form of a CodeSpec.

    {"r": [2, 2], "t": [1, 2], "constraints": [{"terms": [[1, 1, 1]], "rel": "eq", "rhs": 0}]}
    {"builtin": "shieh", "r": 2, "m": 6, "d": 3}
    {"builtin": "derangement", "r": [2, 2, 2], "t": [1, 2, 3]}

Grid indices are 1-based. Unknown fields are rejected.
"""
import json
from mpcode import utils
from mpcode.core.const import BuiltinSpec, Relation
from mpcode.modules import MpCodeError, ErrorMsg, CodeSpec, LinearConstraint
from mpcode.services.codes import shieh_spec, derangement_spec

logger = utils.get_logger()

_EXPLICIT_FIELDS = {"r", "t", "constraints", "name"}
_CONSTRAINT_FIELDS = {"terms", "rel", "rhs"}
_BUILTIN_FIELDS = {
    BuiltinSpec.SHIEH: ({"builtin", "r", "m", "d"}, {"t", "name"}),
    BuiltinSpec.DERANGEMENT: ({"builtin", "r"}, {"t", "name"}),
}


def _invalid(reason, **data):
    return MpCodeError(ErrorMsg.SpecFileInvalid, reason=reason, **data)


def _check_fields(doc, required, optional, where):
    if not isinstance(doc, dict):
        raise _invalid("{} must be an object".format(where))

    unknown = sorted(set(doc) - required - optional)
    if unknown:
        raise _invalid("unknown field in {}".format(where), field=",".join(unknown))

    missing = sorted(required - set(doc))
    if missing:
        raise _invalid("missing field in {}".format(where), field=",".join(missing))


def _json_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise _invalid("{} must be an integer".format(where), value=str(value))
    return value


def _json_number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _invalid("{} must be a number".format(where), value=str(value))
    return float(value)


def _int_list(value, where):
    if not isinstance(value, list):
        raise _invalid("{} must be a list".format(where))
    return [_json_int(v, where) for v in value]


def _number_list(value, where):
    if not isinstance(value, list):
        raise _invalid("{} must be a list".format(where))
    return [_json_number(v, where) for v in value]


def _parse_constraint(item):
    _check_fields(item, _CONSTRAINT_FIELDS, set(), "constraint")

    if item["rel"] not in (Relation.LE, Relation.EQ):
        raise _invalid("rel must be le or eq", rel=str(item["rel"]))

    terms = item["terms"]
    if not isinstance(terms, list):
        raise _invalid("terms must be a list")

    triples = []
    for term in terms:
        if not isinstance(term, list) or len(term) != 3:
            raise _invalid("term must be [i, j, coef]", term=str(term))
        triples.append([_json_int(v, "term entry") for v in term])

    return LinearConstraint.from_terms(triples, item["rel"], _json_int(item["rhs"], "rhs"))


def _parse(doc):
    builtin = doc.get("builtin") if isinstance(doc, dict) else None

    if builtin is None:
        _check_fields(doc, {"r", "constraints"}, _EXPLICIT_FIELDS, "spec")
        r = _int_list(doc["r"], "r")
        t = _number_list(doc["t"], "t") if "t" in doc else list(range(1, len(r) + 1))
        if not isinstance(doc["constraints"], list):
            raise _invalid("constraints must be a list")
        rows = [_parse_constraint(item) for item in doc["constraints"]]
        return CodeSpec(r, t, rows, name=doc.get("name"))

    if builtin not in _BUILTIN_FIELDS:
        raise _invalid("unknown builtin", builtin=str(builtin))

    required, optional = _BUILTIN_FIELDS[builtin]
    _check_fields(doc, required, optional, builtin)
    t = _number_list(doc["t"], "t") if "t" in doc else None

    if builtin == BuiltinSpec.SHIEH:
        spec = shieh_spec(_json_int(doc["r"], "r"), _json_int(doc["m"], "m"),
                          _json_int(doc["d"], "d"), t=t)
    else:
        spec = derangement_spec(_int_list(doc["r"], "r"), t)

    if doc.get("name"):
        spec.name = doc["name"]
    return spec


def parse_spec(doc):
    """document -> CodeSpec; any validation failure is reported as SpecFileInvalid"""
    try:
        return _parse(doc)
    except MpCodeError as e:
        if e.code == ErrorMsg.SpecFileInvalid["code"]:
            raise
        raise _invalid(e.message)


def load_spec_file(path):
    try:
        doc = utils.load_json(path)
    except (OSError, ValueError) as e:
        raise _invalid("cannot read spec file", path=path, error=str(e))

    spec = parse_spec(doc)
    logger.debug("load spec {} m={} n={} constraints={}".format(
        path, spec.m, spec.n, len(spec.constraints)))
    return spec


def dump_spec(spec):
    """CodeSpec -> JSON text in the explicit form"""
    return json.dumps(spec.dump_json(flag=False), indent=2, sort_keys=True)


def parse_received(text, n, symbols_m=None):
    """
    Comma separated received word. With symbols_m set the entries must be
    symbols in 1..m.
    """
    try:
        values = utils.parse_number_list(text)
    except ValueError:
        raise MpCodeError(ErrorMsg.ReceivedInvalid, received=str(text))

    if len(values) != n:
        raise MpCodeError(ErrorMsg.LengthMismatch, expected=n, actual=len(values))

    if symbols_m is not None:
        if any(v != int(v) or v < 1 or v > symbols_m for v in values):
            raise MpCodeError(ErrorMsg.ReceivedInvalid, reason="symbols must lie in 1..m", m=symbols_m)
        return [int(v) for v in values]

    return values
