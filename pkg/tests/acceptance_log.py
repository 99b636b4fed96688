"""Shared sink for per-criterion pass/fail lines printed at the end of a run."""

LINES: list[str] = []


def record(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    LINES.append(f"ACCEPTANCE {number:02d} {name}: {status}{suffix}")
