def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.rstrip("abc")), k)):
        ok, title, detail = RESULTS[key]
        line = "%s  criterion %-3s %s" % ("PASS" if ok else "FAIL", key, title)
        if detail:
            line += "  [%s]" % detail
        terminalreporter.write_line(line)
