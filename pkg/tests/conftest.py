"""Shared test plumbing: the acceptance criteria summary block.

Each acceptance test records its verdict before asserting, so the final
report shows one line per criterion even when a criterion fails.
"""

_criteria: dict[int, tuple[bool, str, tuple[str, ...]]] = {}


def record_criterion(num: int, ok: bool, detail: str, notes: tuple[str, ...] = ()) -> None:
    _criteria[num] = (ok, detail, notes)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_criteria):
        ok, detail, notes = _criteria[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"CRITERION {num}: {verdict} - {detail}")
        for line in notes:
            terminalreporter.write_line(f"  {line}")
