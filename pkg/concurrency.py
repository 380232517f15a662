import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

logger = logging.getLogger(__name__)


async def _gather_in_pool(worker: Callable[..., Any], payloads: Sequence[tuple], jobs: int) -> list[Any]:
    """Executa os lotes num pool de processos e aguarda todos."""
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = [loop.run_in_executor(pool, worker, *payload) for payload in payloads]
        return await asyncio.gather(*tasks)


def run_batches(worker: Callable[..., Any], payloads: Sequence[tuple], jobs: int) -> list[Any]:
    """Roda `worker(*payload)` para cada lote; em paralelo quando jobs > 1.

    A ordem do resultado segue a ordem dos lotes.
    """
    if jobs > 1 and len(payloads) > 1:
        try:
            asyncio.get_running_loop()
        except RuntimeError:
            # nenhum event loop ativo: usa asyncio.run()
            return asyncio.run(_gather_in_pool(worker, payloads, jobs))
        logger.info("event loop already running, processing %d batches sequentially", len(payloads))
    return [worker(*payload) for payload in payloads]
