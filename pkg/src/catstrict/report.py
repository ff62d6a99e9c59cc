"""Validation reports with stable ordering."""
from dataclasses import dataclass, field

from .ids import encode_id


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple

    def render(self):
        parts = []
        for w in self.witness:
            try:
                parts.append(encode_id(w))
            except Exception:
                parts.append(repr(w))
        return f"{self.axiom}: " + " ".join(parts)


@dataclass
class Report:
    subject: str
    failures: list = field(default_factory=list)
    checked: int = 0
    skipped: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    total_failures: int = 0
    max_failures: int = 200
    tally: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.total_failures == 0

    def __bool__(self):
        return self.ok

    def check(self, cond, axiom, *witness):
        self.checked += 1
        self.tally[axiom] = self.tally.get(axiom, 0) + 1
        if not cond:
            self.fail(axiom, *witness)
        return cond

    def count(self, axiom, n):
        """Record n checks of ``axiom`` whose failures were reported separately."""
        self.checked += n
        self.tally[axiom] = self.tally.get(axiom, 0) + n

    def fail(self, axiom, *witness):
        self.total_failures += 1
        if len(self.failures) < self.max_failures:
            self.failures.append(Failure(axiom, tuple(witness)))

    def skip(self, axiom, count=1):
        self.skipped[axiom] = self.skipped.get(axiom, 0) + count

    def note(self, text):
        self.notes.append(text)

    def absorb(self, other, prefix=""):
        self.checked += other.checked
        for k, v in other.tally.items():
            self.tally[prefix + k] = self.tally.get(prefix + k, 0) + v
        for f in other.failures:
            self.total_failures += 1
            if len(self.failures) < self.max_failures:
                self.failures.append(Failure(prefix + f.axiom, f.witness))
        self.total_failures += other.total_failures - len(other.failures)
        for k, v in other.skipped.items():
            self.skip(prefix + k, v)
        self.notes.extend(other.notes)

    def axioms_failed(self):
        return sorted({f.axiom for f in self.failures})

    def render(self, per_axiom=True):
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}",
                 f"  instances checked: {self.checked}"]
        if per_axiom:
            bad = {f.axiom for f in self.failures}
            for k in sorted(set(self.tally) | bad):
                lines.append(f"  [{'FAIL' if k in bad else 'ok'}] {k} ({self.tally.get(k, 0)})")
        if self.total_failures:
            lines.append(f"  failures: {self.total_failures}")
            lines.extend("  - " + f.render() for f in self.failures)
        for k in sorted(self.skipped):
            lines.append(f"  skipped (out of truncation) {k}: {self.skipped[k]}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines) + "\n"
