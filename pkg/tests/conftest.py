import pytest

# registry for the acceptance table printed after the run; keys sort
# numerically first so supplementary rows land under their criterion
_RESULTS = {}
_ORDER = []


class AcceptanceLog:
    @staticmethod
    def record(key: str, title: str, passed: bool, detail: str = ""):
        if key not in _RESULTS:
            _ORDER.append(key)
        _RESULTS[key] = {"title": title, "passed": bool(passed),
                         "detail": detail}


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def _sort_key(key: str):
    head = key.split()[0].rstrip("*")
    try:
        major = int(head)
    except ValueError:
        major = 99
    return (major, key)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(_ORDER, key=_sort_key):
        entry = _RESULTS[key]
        verdict = "PASS" if entry["passed"] else "FAIL"
        line = f"criterion {key}: {verdict}  {entry['title']}"
        if entry["detail"] and not entry["passed"]:
            line += f"  [{entry['detail']}]"
        tr.write_line(line, green=entry["passed"], red=not entry["passed"])
