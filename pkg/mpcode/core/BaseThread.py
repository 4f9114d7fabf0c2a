import threading
import collections
import time
from mpcode.utils import get_logger
from mpcode.modules import MpCodeError


class BaseThread(object):
    def __init__(self, targets, concurrency=4):
        self.concurrency = max(1, int(concurrency))
        self.semaphore = threading.Semaphore(self.concurrency)
        self._targets = targets
        self.logger = get_logger()
        self.errors = []
        self._lock = threading.Lock()

    def work(self, target):
        raise NotImplementedError()

    def _work(self, target):
        try:
            self.work(target)
        except MpCodeError as e:
            self.logger.warning("error on {} {}".format(target, e.message))
            with self._lock:
                self.errors.append((target, e))

        except Exception as e:
            self.logger.warning("error on {}".format(target))
            self.logger.exception(e)
            with self._lock:
                self.errors.append((target, e))

        except BaseException as e:
            self.logger.warning("BaseException on {}".format(target))
            self.semaphore.release()
            raise e

        self.semaphore.release()

    def _run(self):
        threads = collections.deque()
        cnt = 0

        for target in self._targets:
            cnt += 1
            self.logger.debug("[{}/{}] work on {}".format(cnt, len(self._targets), target))

            self.semaphore.acquire()
            t1 = threading.Thread(target=self._work, args=(target,))
            # 可以快速结束程序
            t1.daemon = True
            t1.start()
            threads.append(t1)

        for t in list(threads):
            while t.is_alive():
                time.sleep(0.01)
