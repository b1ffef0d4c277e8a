"""Fan independent cases out over worker processes.

Items and results must be picklable plain data (graph6 strings, parameter tuples, pydantic
models). Results come back aligned with the input items; an exception raised by a case is
returned in its slot instead of being raised.
"""
import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence
from tqdm import tqdm
from utils.config import config
from utils.logger import logger


def _run_inline(func: Callable[[Any], Any], items: Sequence[Any], desc: str, progress: bool) -> List[Any]:
    results = []
    for item in tqdm(items, desc=desc, disable=not progress):
        try:
            results.append(func(item))
        except Exception as e:
            results.append(e)
    return results


async def _run_pool(func: Callable[[Any], Any], items: Sequence[Any], jobs: int, desc: str, progress: bool) -> List[Any]:
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(2 * jobs)
    bar = tqdm(total=len(items), desc=desc, disable=not progress)

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        async def run_one(item):
            async with semaphore:
                try:
                    return await loop.run_in_executor(pool, func, item)
                finally:
                    bar.update(1)

        results = await asyncio.gather(*(run_one(item) for item in items), return_exceptions=True)
    bar.close()
    return list(results)


def run_cases(
    func: Callable[[Any], Any],
    items: Sequence[Any],
    jobs: Optional[int] = None,
    desc: str = "cases",
    progress: Optional[bool] = None,
) -> List[Any]:
    """Apply a top-level function to every item, in-process for jobs == 1, else in a process pool."""
    items = list(items)
    jobs = jobs or config.settings.runner.jobs
    progress = config.settings.runner.progress if progress is None else progress
    if jobs <= 1 or len(items) <= 1:
        return _run_inline(func, items, desc, progress)
    logger.debug(f"Running {len(items)} {desc} on {jobs} workers")
    return asyncio.run(_run_pool(func, items, jobs, desc, progress))
