"""Command line front end.

    monodromy verify [--p 2] [--word-cap 3] [--out report.json] [--json]
    monodromy scan --max-p 3 [--word-cap 3] [--out scan.json] [--json]
    monodromy show --p 2 {full,reduced,germ,omega} [--json]

Exit codes: 0 success, 1 a check failed (or a scan row is incomplete),
2 usage error.  ``MONODROMY_TIMEOUT`` sets the wall-time ceiling in seconds
for each p of a scan (default 600).
"""
import argparse
import json
import multiprocessing
import os
import sys
import time
from pathlib import Path

from . import __version__
from .homology import build_model, germ_monodromy
from .rep import reduce

TIMEOUT_ENV = "MONODROMY_TIMEOUT"
DEFAULT_TIMEOUT = 600.0


def _positive(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1, got %d" % v)
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monodromy",
        description="Monodromy of x^p y^p (1-x-y): exact verification and scans.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the full verification pipeline for one p")
    v.add_argument("--p", type=_positive, default=2)
    v.add_argument("--word-cap", type=_positive, default=3)
    v.add_argument("--out", type=Path)
    v.add_argument("--json", action="store_true", help="print the JSON report")

    s = sub.add_parser("scan", help="closure dimension against p(2p+1) for p = 1..max-p")
    s.add_argument("--max-p", type=_positive, required=True)
    s.add_argument("--word-cap", type=_positive, default=3)
    s.add_argument("--out", type=Path)
    s.add_argument("--json", action="store_true")
    s.add_argument("--jobs", type=_positive, default=None,
                   help="worker processes (default: number of CPUs)")

    sh = sub.add_parser("show", help="print the matrices for one p")
    sh.add_argument("--p", type=_positive, default=2)
    sh.add_argument("what", choices=("full", "reduced", "germ", "omega"))
    sh.add_argument("--json", action="store_true")
    return parser


def cmd_verify(args, out=None):
    out = out or sys.stdout
    from .report import run_verify
    report = run_verify(args.p, args.word_cap)
    if args.out:
        args.out.write_text(report.to_json(), encoding="utf-8")
    if args.json:
        out.write(report.to_json())
    else:
        print(report.summary(), file=out)
        for note in report.notes:
            print("  note: %s" % note, file=out)
    failure = report.first_failure()
    if failure is not None:
        print("FAILED %s: expected %s, computed %s"
              % (failure.name, failure.expected, failure.computed), file=sys.stderr)
        return 1
    return 0


def _scan_worker(p, word_cap, conn):
    from .report import closure_row
    try:
        conn.send(closure_row(p, word_cap))
    except Exception as e:  # reported as an incomplete row
        conn.send({"p": p, "status": "incomplete", "error": repr(e)})
    finally:
        conn.close()


def run_scan(max_p, word_cap=3, timeout=None, jobs=None):
    """Rows for p = 1..max_p; rows over the time ceiling are marked incomplete."""
    if timeout is None:
        timeout = float(os.environ.get(TIMEOUT_ENV, DEFAULT_TIMEOUT))
    jobs = jobs or os.cpu_count() or 1
    ctx = multiprocessing.get_context("spawn")
    pending = list(range(1, max_p + 1))
    running = {}
    rows = {}
    while pending or running:
        while pending and len(running) < jobs:
            p = pending.pop(0)
            recv, send = ctx.Pipe(duplex=False)
            proc = ctx.Process(target=_scan_worker, args=(p, word_cap, send), daemon=True)
            proc.start()
            send.close()
            running[p] = (proc, recv, time.monotonic())
        for p, (proc, recv, started) in list(running.items()):
            if recv.poll():
                try:
                    rows[p] = recv.recv()
                except EOFError:
                    rows[p] = {"p": p, "status": "incomplete", "error": "worker died"}
            elif not proc.is_alive():
                rows[p] = {"p": p, "status": "incomplete", "error": "worker died"}
            elif time.monotonic() - started > timeout:
                proc.terminate()
                rows[p] = {"p": p, "status": "incomplete",
                           "error": "time ceiling of %gs exceeded" % timeout}
            else:
                continue
            proc.join()
            recv.close()
            del running[p]
        if running:
            time.sleep(0.02)
    return [rows[p] for p in range(1, max_p + 1)]


def format_scan(rows):
    lines = ["%3s  %9s  %6s  %-24s  %-9s  %s" % (
        "p", "dim", "target", "verdict", "saturated", "cyclic(d0)")]
    for r in rows:
        if r["status"] != "complete":
            lines.append("%3d  incomplete (%s)" % (r["p"], r.get("error", "")))
            continue
        lines.append("%3d  %9s  %6d  %-24s  %-9s  %d" % (
            r["p"], "%d/%d" % (r["closure_dim"], r["target"]), r["target"], r["verdict"],
            "yes" if r["saturated"] else "no", r["cyclic_module_dim"]))
    return "\n".join(lines)


def cmd_scan(args, out=None):
    out = out or sys.stdout
    rows = run_scan(args.max_p, args.word_cap, jobs=args.jobs)
    payload = {"version": __version__, "word_cap": args.word_cap, "rows": rows}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    if args.json:
        out.write(text)
    else:
        print(format_scan(rows), file=out)
        print("dimensions are lower bounds from logarithms of unipotent words; "
              "no claim is made beyond the rows shown", file=out)
    return 0 if all(r["status"] == "complete" for r in rows) else 1


def show_payload(p, what):
    if what == "germ":
        return {"germ": germ_monodromy(p)}
    model = build_model(p)
    if what == "omega":
        return {"omega": model.omega}
    if what == "full":
        return {"M1": model.m1, "M2": model.m2}
    rep = reduce(model)
    return {"M1_red": rep.m1_red, "M2_red": rep.m2_red, "J": rep.j_form}


def cmd_show(args, out=None):
    out = out or sys.stdout
    payload = show_payload(args.p, args.what)
    if args.json:
        out.write(json.dumps({k: m.to_json() for k, m in payload.items()},
                             indent=2, sort_keys=True) + "\n")
    else:
        for name, m in payload.items():
            print("%s =" % name, file=out)
            print(m.pretty(), file=out)
    return 0


COMMANDS = {"verify": cmd_verify, "scan": cmd_scan, "show": cmd_show}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
