from collections import defaultdict

_TITLES = {
    1: "trivial modulus table",
    2: "odd-order ratios divisible by phi - 2k, k <= 15",
    3: "closed forms for R[2..5]",
    4: "odd-order derivative divisibility, n <= 2000",
    5: "Jordan totient congruence and witnesses",
    6: "ratio table against direct derivatives",
    7: "Taylor coefficient fixtures and odd-J vanishing",
    8: "self-reciprocal property suite",
    9: "scalar identities at 1",
    10: "sign change of Phi_2p'",
    11: "Lehmer expansion",
}

_results: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    outcome = "passed" if call.excinfo is None else "failed"
    _results[marker.args[0]].append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        parts = _results[n]
        ok = all(o == "passed" for _, o in parts)
        failed = [name for name, o in parts if o != "passed"]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {_TITLES.get(n, '')}"
        if failed:
            line += "  [failed: " + ", ".join(failed) + "]"
        tr.write_line(line)
