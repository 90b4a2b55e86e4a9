import os, sys

sys.path.append(os.getcwd())

from typing import Any, Dict, List

from simple_parsing import ArgumentParser, DashVariant

from topzeta.algebra import NAMED_ALGEBRAS
from topzeta.engine import RunConfig, run_algebra
from topzeta.helpers import Timer

parser = ArgumentParser(add_option_string_dash_variants=DashVariant.DASH)
parser.add_argument("--slow", action="store_true", help="also run fil4 and zx4")
parser.add_arguments(RunConfig, dest="config")
args = parser.parse_args()
config: RunConfig = args.config

rows: Dict[str, List[Any]] = dict(algebra=[], status=[], regular=[], seconds=[], result=[])
for name, named in NAMED_ALGEBRAS.items():
    if named.slow and not args.slow:
        continue
    try:
        timer = Timer()
        with timer.phase("run"):
            outcome = run_algebra(named.build(), config)
        if not outcome.ok:
            status = f"{outcome.failure.phase} failure"
        elif named.expected is not None and outcome.function != named.expected:
            status = "MISMATCH"
        else:
            status = "ok"
        rows["algebra"].append(name)
        rows["status"].append(status)
        rows["regular"].append(outcome.stats.n_regular)
        rows["seconds"].append(f"{timer.total:.1f}")
        result = str(outcome.function) if outcome.ok else outcome.failure.reason
        rows["result"].append(result)
    except Exception as e:
        print(f"Error processing {name}: {e}")

widths = {k: max([len(k)] + [len(str(v)) for v in vs]) for k, vs in rows.items()}
print("  ".join(k.ljust(widths[k]) for k in rows))
for i in range(len(rows["algebra"])):
    print("  ".join(str(rows[k][i]).ljust(widths[k]) for k in rows))
