"""Trial reports and their line-oriented text serialization.

Layout::

    # theorem <id>
    # config field=<F> n=<n> trials=<N> seed=<seed>
    FAIL trial=<i> identity="<text>" <name>=[<inline matrix>] ...
    # summary run=<r> passed=<p> premise_hits=<h> positives=<c>

Inline matrices are the matrix-file lines joined with ``' | '``; each
payload is wrapped in ``[...]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..matfile import format_inline, parse_inline
from ..matrix import StarMatrix


@dataclass
class Failure:
    trial: int
    identity: str
    inputs: dict = field(default_factory=dict)  # name -> StarMatrix


@dataclass
class TheoremReport:
    theorem: str
    config: dict = field(default_factory=dict)
    trials_run: int = 0
    trials_passed: int = 0
    premise_hits: int = 0
    positives: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.trials_passed == self.trials_run

    @property
    def first_failure(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def record(self, index: int, passed: bool, premise_hit: bool, violated=None, inputs=None, positive=False):
        self.trials_run += 1
        self.premise_hits += bool(premise_hit)
        self.positives += bool(positive)
        if passed:
            self.trials_passed += 1
        else:
            self.failures.append(Failure(index, violated or "?", dict(inputs or {})))

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        return TheoremReport(
            self.theorem,
            dict(self.config),
            self.trials_run + other.trials_run,
            self.trials_passed + other.trials_passed,
            self.premise_hits + other.premise_hits,
            self.positives + other.positives,
            self.failures + other.failures,
        )

    def summary_line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status} {self.theorem}: {self.trials_passed}/{self.trials_run} trials passed, "
            f"premise hits {self.premise_hits}, positives {self.positives}"
        )

    def to_text(self) -> str:
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [f"# theorem {self.theorem}", f"# config {cfg}"]
        for f in self.failures:
            ident = f.identity.replace('"', "'")
            payload = " ".join(f"{name}=[{format_inline(m)}]" for name, m in f.inputs.items())
            lines.append(f'FAIL trial={f.trial} identity="{ident}" {payload}'.rstrip())
        lines.append(
            f"# summary run={self.trials_run} passed={self.trials_passed} "
            f"premise_hits={self.premise_hits} positives={self.positives}"
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TheoremReport":
        rep = cls(theorem="?")
        for line in text.splitlines():
            if line.startswith("# theorem "):
                rep.theorem = line[len("# theorem "):].strip()
            elif line.startswith("# config"):
                for tok in line[len("# config"):].split():
                    k, _, v = tok.partition("=")
                    rep.config[k] = v
            elif line.startswith("# summary"):
                vals = dict(tok.split("=") for tok in line.split()[2:])
                rep.trials_run = int(vals["run"])
                rep.trials_passed = int(vals["passed"])
                rep.premise_hits = int(vals["premise_hits"])
                rep.positives = int(vals.get("positives", 0))
            elif line.startswith("FAIL "):
                m = re.match(r'FAIL trial=(\d+) identity="([^"]*)"(.*)$', line)
                inputs = {
                    name: parse_inline(body) for name, body in re.findall(r"(\S+?)=\[([^\]]*)\]", m.group(3))
                }
                rep.failures.append(Failure(int(m.group(1)), m.group(2), inputs))
        return rep


def inputs_of(**kw) -> dict:
    return {k: v for k, v in kw.items() if isinstance(v, StarMatrix)}
