'''
threadpool
==========

Sweeps in bnwalls (table rows, rank slabs of the wall search, oracle boxes)
are split into chunks and handed to a ThreadPool. Jobs come back from
result_generator in the order they were added, so merged output does not
depend on which thread finished first.

>>> pool = threadpool.ThreadPool(4)
>>> for (d, r) in cells:
>>>     pool.add(classify, name=(d, r), args=(g, d, r))
>>> labels = [job.value for job in pool.result_generator()]

Most callers only need map_ordered.
'''
import queue
import threading

from bnwalls import sentinel
from bnwalls import vlogging

log = vlogging.get_logger(__name__, 'bnwalls.threadpool')

PENDING = sentinel.Sentinel('PENDING')
RUNNING = sentinel.Sentinel('RUNNING')
FINISHED = sentinel.Sentinel('FINISHED')
RAISED = sentinel.Sentinel('RAISED')

STOP = sentinel.Sentinel('STOP')
NO_VALUE = sentinel.Sentinel('NO_VALUE', truthyness=False)
NO_EXCEPTION = sentinel.Sentinel('NO_EXCEPTION', truthyness=False)

class PoolClosed(Exception):
    pass

class Job:
    def __init__(self, function, *, name=None, args=(), kwargs=None):
        self.function = function
        self.name = name
        self.args = tuple(args)
        self.kwargs = kwargs or {}
        self.status = PENDING
        self.value = NO_VALUE
        self.exception = NO_EXCEPTION
        self.done = threading.Event()

    def __repr__(self):
        label = repr(self.name) if self.name is not None else self.function.__name__
        return f'<Job {label} {self.status.name}>'

    def run(self) -> None:
        self.status = RUNNING
        try:
            self.value = self.function(*self.args, **self.kwargs)
        except BaseException as exc:
            # The worker survives; the caller decides what to do with it.
            self.exception = exc
            self.status = RAISED
        else:
            self.status = FINISHED
        finally:
            self.done.set()

class ThreadPool:
    def __init__(self, size):
        if size < 1:
            raise ValueError(f'size must be >= 1, not {size}.')
        self.size = size
        self.closed = False
        self._inbox = queue.SimpleQueue()
        self._jobs = []
        self._workers = [
            threading.Thread(target=self._work, name=f'bnwalls-worker-{index}', daemon=True)
            for index in range(size)
        ]
        for worker in self._workers:
            worker.start()

    def _work(self) -> None:
        while (job := self._inbox.get()) is not STOP:
            log.loud('%s picked up %s.', threading.current_thread().name, job)
            job.run()

    def add(self, function, *, name=None, args=(), kwargs=None) -> Job:
        if self.closed:
            raise PoolClosed(f'Cannot add {name or function} to a closed pool.')
        job = Job(function, name=name, args=args, kwargs=kwargs)
        self._jobs.append(job)
        self._inbox.put(job)
        return job

    def close(self) -> None:
        if self.closed:
            return
        self.closed = True
        for _ in self._workers:
            self._inbox.put(STOP)

    def join(self) -> None:
        self.close()
        for worker in self._workers:
            worker.join()

    def result_generator(self):
        '''
        Close the pool, then yield each job once it is done, in the order the
        jobs were added.
        '''
        self.close()
        for job in self._jobs:
            job.done.wait()
            yield job

def map_ordered(function, argss, *, workers=1):
    '''
    Return [function(*args) for args in argss], computed on up to `workers`
    threads. If any job raised, the earliest one's exception is re-raised
    after every job has finished.
    '''
    argss = [tuple(args) for args in argss]
    if workers <= 1 or len(argss) <= 1:
        return [function(*args) for args in argss]

    pool = ThreadPool(min(workers, len(argss)))
    for args in argss:
        pool.add(function, args=args)
    jobs = list(pool.result_generator())
    pool.join()
    for job in jobs:
        if job.status is RAISED:
            raise job.exception
    return [job.value for job in jobs]
