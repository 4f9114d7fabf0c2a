import time
from mpcode.core.ThreadMap import ThreadMap
from mpcode.modules import MpCodeError, ErrorMsg
from mpcode.utils import get_logger


class SimulationRunner(object):
    """
    Runs `trial_fun(trial, (grid_index, param))` for every trial of every
    grid point on a worker pool. Each grid point yields its records sorted
    by trial index, whatever order the workers finished in.
    """

    def __init__(self, trial_fun, grid, trials, concurrency=4):
        self.trial_fun = trial_fun
        self.grid = list(grid)
        self.trials = int(trials)
        self.concurrency = concurrency
        self.logger = get_logger()

    def run_point(self, grid_index, param):
        runner = ThreadMap(fun=self.trial_fun, items=list(range(self.trials)),
                           arg=(grid_index, param), concurrency=self.concurrency)
        result_map = runner.run()

        if runner.errors:
            target, error = runner.errors[0]
            raise MpCodeError(ErrorMsg.SimulationFailed, trial=target, param=param, error=str(error))

        missing = [k for k in range(self.trials) if result_map.get(k) is None]
        if missing:
            raise MpCodeError(ErrorMsg.SimulationFailed, reason="missing trials", count=len(missing))

        return [result_map[k] for k in range(self.trials)]

    def run(self):
        count = len(self.grid)
        for grid_index, param in enumerate(self.grid):
            t1 = time.time()
            self.logger.info("[{}/{}] SimulationRunner param {}".format(grid_index + 1, count, param))
            records = self.run_point(grid_index, param)
            elapse = time.time() - t1
            self.logger.debug("param {} trials {} elapse {:.3f}".format(param, self.trials, elapse))
            yield grid_index, param, records
