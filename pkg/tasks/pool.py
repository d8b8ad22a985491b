"""
Process-pool fan-out for independent verification instances
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar
import logging

from config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def fan_out(fn: Callable[[T], R], items: Iterable[T], jobs: Optional[int] = None) -> List[R]:
    """
    Apply fn to every item, in parallel when jobs > 1

    Args:
        fn: Picklable top-level callable
        items: Work items
        jobs: Worker count; defaults to DEFAULT_JOBS

    Returns:
        List: Results in input order
    """
    items = list(items)
    jobs = jobs if jobs is not None else get_settings().DEFAULT_JOBS
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    workers = min(jobs, len(items))
    logger.info(f"Fanning out {len(items)} instances over {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
