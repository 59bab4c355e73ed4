"""Fork-based worker pool with a shared dynamic work queue.

Shared-memory parallelism in CPython means processes: the pool forks after
the graph (and ranking) are pinned in module state, so every worker reads
the same copy-on-write pages instead of receiving a serialized graph.

Scheduling is dynamic: tasks live on one joinable queue, any idle worker
takes the next one, and a worker that holds a big subproblem can donate its
independently-computed child subproblems back to the queue when the queue
is running dry. Workers never share mutable algorithm state; each keeps a
local (count, histogram, cliques) accumulator that the driver merges after
the queue drains.
"""

from __future__ import annotations

import multiprocessing as mp
import traceback
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class ParallelConfig:
    """Worker budget and the spawn cutoff for nested subproblem splitting.

    Subproblems whose cand is smaller than `cutoff` run as plain sequential
    backtracking inside their worker; at or above it they may be unrolled
    into independent child tasks.
    """

    threads: int = 1
    cutoff: int = 16

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")


class LocalAccumulator:
    """Per-worker emission buffer merged by the driver at the end."""

    __slots__ = ("count", "hist", "cliques")

    def __init__(self, collect_cliques: bool) -> None:
        self.count = 0
        self.hist: Counter[int] = Counter()
        self.cliques: list[tuple[int, ...]] | None = [] if collect_cliques else None

    def emit(self, clique: tuple[int, ...]) -> None:
        self.count += 1
        self.hist[len(clique)] += 1
        if self.cliques is not None:
            self.cliques.append(clique)

    def snapshot(self) -> tuple[int, dict[int, int], list[tuple[int, ...]] | None]:
        return self.count, dict(self.hist), self.cliques


# Handler set (in the parent) just before forking; inherited by workers.
# Signature: process(task, emit, spawn, hungry) where spawn enqueues a new
# task and hungry() reports whether the shared queue wants more of them.
_TASK_HANDLER: Callable[..., None] | None = None
_COLLECT_CLIQUES = False


def _worker(work_q: Any, result_q: Any) -> None:
    handler = _TASK_HANDLER
    assert handler is not None, "worker forked without a task handler"
    acc = LocalAccumulator(_COLLECT_CLIQUES)
    errors: list[str] = []

    def hungry() -> bool:
        try:
            return work_q.qsize() < _HUNGER_MARK
        except NotImplementedError:
            return True

    while True:
        task = work_q.get()
        if task is None:
            result_q.put((acc.snapshot(), errors))
            work_q.task_done()
            return
        try:
            handler(task, acc.emit, work_q.put, hungry)
        except Exception:
            errors.append(traceback.format_exc())
        finally:
            work_q.task_done()


_HUNGER_MARK = 4


def run_task_pool(
    tasks: list[Any],
    handler: Callable[..., None],
    config: ParallelConfig,
    collect_cliques: bool,
) -> tuple[int, Counter[int], list[tuple[int, ...]] | None]:
    """Run tasks on `config.threads` forked workers; merge their accumulators.

    `handler` may enqueue follow-up tasks via its spawn callback; the pool
    drains until every task and descendant is done.
    """
    global _TASK_HANDLER, _COLLECT_CLIQUES, _HUNGER_MARK
    ctx = mp.get_context("fork")
    work_q = ctx.JoinableQueue()
    result_q = ctx.SimpleQueue()

    _TASK_HANDLER = handler
    _COLLECT_CLIQUES = collect_cliques
    _HUNGER_MARK = 2 * config.threads
    try:
        workers = [
            ctx.Process(target=_worker, args=(work_q, result_q), daemon=True)
            for _ in range(config.threads)
        ]
        for p in workers:
            p.start()
    finally:
        _TASK_HANDLER = None

    for t in tasks:
        work_q.put(t)
    work_q.join()
    for _ in workers:
        work_q.put(None)

    count = 0
    hist: Counter[int] = Counter()
    cliques: list[tuple[int, ...]] | None = [] if collect_cliques else None
    failures: list[str] = []
    for _ in workers:
        (c, h, cl), errs = result_q.get()
        count += c
        hist.update(h)
        if cliques is not None and cl is not None:
            cliques.extend(cl)
        failures.extend(errs)
    for p in workers:
        p.join()
    work_q.close()

    if failures:
        raise RuntimeError("worker task failed:\n" + "\n".join(failures))
    return count, hist, cliques
