"""Batch evaluation of every assertion over the Cartesian product of its bindings."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import EvalError
from .evaluator import evaluate
from .parser import Assertion, parse_source
from .printer import pretty_assertion

BUNDLED = (
    "theorem.idn",
    "corollary1.idn",
    "corollary2.idn",
    "corollary3_printed.idn",
    "corollary3_corrected.idn",
    "conjecture_printed.idn",
    "conjecture_corrected.idn",
)


@dataclass(frozen=True)
class TupleVerdict:
    """Outcome for one binding tuple; ``verdict`` is pass, fail or error."""

    bindings: tuple[tuple[str, Fraction], ...]
    verdict: str
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    error_kind: str = ""
    detail: str = ""


@dataclass(frozen=True)
class AssertionReport:
    index: int
    line: int
    text: str
    verdicts: tuple[TupleVerdict, ...]


@dataclass(frozen=True)
class FileReport:
    filename: str
    assertions: tuple[AssertionReport, ...]

    def all_verdicts(self):
        for a in self.assertions:
            for v in a.verdicts:
                yield a, v


def bundled_files() -> list[str]:
    return list(BUNDLED)


def bundled_path(name: str) -> Path:
    """Filesystem path of a bundled ``.idn`` file shipped with the package."""
    if name not in BUNDLED:
        raise FileNotFoundError(f"no bundled identity file named {name!r}")
    return Path(str(resources.files("spv") / "data" / name))


def binding_tuples(a: Assertion) -> list[tuple[tuple[str, Fraction], ...]]:
    """Lexicographic over bindings in declaration order."""
    names = [b.name for b in a.bindings]
    return [tuple(zip(names, combo)) for combo in itertools.product(*(b.values() for b in a.bindings))]


def evaluate_tuple(a: Assertion, bindings) -> TupleVerdict:
    env = dict(bindings)
    try:
        lhs = evaluate(a.lhs, env)
    except EvalError as exc:
        return TupleVerdict(bindings, "error", error_kind=exc.kind, detail=f"lhs {exc}")
    try:
        rhs = evaluate(a.rhs, env)
    except EvalError as exc:
        return TupleVerdict(bindings, "error", lhs=lhs, error_kind=exc.kind, detail=f"rhs {exc}")
    return TupleVerdict(bindings, "pass" if lhs == rhs else "fail", lhs, rhs)


def _evaluate_job(job):
    return evaluate_tuple(*job)


def check_assertions(assertions: list[Assertion], filename: str = "<input>", jobs: int = 1) -> FileReport:
    per_assertion = [binding_tuples(a) for a in assertions]
    work = [(a, t) for a, tuples in zip(assertions, per_assertion) for t in tuples]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_job, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_evaluate_job(w) for w in work]
    reports = []
    it = iter(results)
    for i, (a, tuples) in enumerate(zip(assertions, per_assertion), start=1):
        verdicts = tuple(next(it) for _ in tuples)
        reports.append(AssertionReport(i, a.span.line, pretty_assertion(a), verdicts))
    return FileReport(filename, tuple(reports))


def check_source(source: str, filename: str = "<input>", jobs: int = 1) -> FileReport:
    """Parse and check ``source``; raises DslSyntaxError with every positioned error."""
    return check_assertions(parse_source(source, filename), filename, jobs)


def check_file(path, jobs: int = 1) -> FileReport:
    path = Path(path)
    source = path.read_text(encoding="utf-8")
    return check_source(source, str(path), jobs)
