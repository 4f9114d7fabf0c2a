from . import mpcore, polytope, codes, channels, lpdec, oracle
from .specFile import load_spec_file, parse_spec, parse_received, dump_spec
from .simulate import Simulation, run_simulation
from .workedExamples import WorkedExamples, run_worked_examples
