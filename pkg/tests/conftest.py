def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(RESULTS):
        parts = RESULTS[criterion]
        ok = all(passed for _, passed in parts)
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}"
        failed = [label for label, passed in parts if not passed]
        if failed:
            line += "  (failed: " + "; ".join(failed) + ")"
        terminalreporter.write_line(line)
