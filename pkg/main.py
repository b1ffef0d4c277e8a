import asyncio
import json
import sys
from typing import List, Optional
from pydantic import BaseModel
from cli.commands import build_parser
from utils.errors import CriticalIdealsError, GroebnerBudgetExhausted, ReportStorageError
from utils.logger import Logger, logger
from utils.report_storage import ReportStorage
from verification.models import VerificationReport

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _dump(payload) -> str:
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2)
    return json.dumps(payload, indent=2, ensure_ascii=False)


async def _save(command: str, payload) -> None:
    storage = ReportStorage(run_name=command)
    if not await storage.is_ready():
        raise ReportStorageError(f"Report directory {storage.reports_dir} is not writable")
    if isinstance(payload, VerificationReport):
        await storage.save_report(payload, command, validate=True)
    else:
        await storage.save_report(payload if isinstance(payload, dict) else {"results": payload}, command)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        Logger().set_level(args.log_level)

    try:
        payload, text, ok = args.handler(args)
    except GroebnerBudgetExhausted as e:
        logger.error(f"{args.command}: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (CriticalIdealsError, ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(text if args.text else _dump(payload))
    if args.save:
        try:
            asyncio.run(_save(args.command, payload))
        except CriticalIdealsError as e:
            logger.error(f"Could not save report: {e}", exc_info=True)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILED
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
