"""Uniform check-line reports shared by the verification modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CheckLine:
    check_id: str
    label: str
    computed: str
    expected: str
    ok: bool

    def render(self) -> str:
        verdict = "ok" if self.ok else "FAILED"
        return (
            f"{self.check_id} [{self.label}] computed={self.computed} "
            f"expected={self.expected} {verdict}"
        )


@dataclass
class Report:
    title: str
    lines: list[CheckLine]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def render(self) -> str:
        body = "\n".join(line.render() for line in self.lines)
        return f"== {self.title}: {'pass' if self.ok else 'FAIL'} ==\n{body}"
