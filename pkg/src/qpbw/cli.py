"""Command line front end.

    qpbw [--config FILE] [--max-degree D] [--json] [--seed N] COMMAND [ARGS]

Exit status: 0 success, 1 an invariant was falsified, 2 bad configuration
or a construction the engine refuses.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .config import ConfigError, default_config, load_config
from .context import ContextError
from .coproduct import delta, is_skew_primitive, coproduct_certificate
from .expr import ExprError, format_poly, format_tensor, parse_gpoly, parse_superword_sum, scalar_str
from .fields import FieldError
from .pbw import (
    PresentationError, associated_graded_check, build_vocabulary_R, dropped_words_independent,
    enumerate_pbw, finiteness_verdict,
)
from .selftest import run_selftest
from .superletters import (
    InvariantViolation, SuperLetterError, calculus, format_combo, format_superword,
)
from .words import (
    WordError, enumerate_standard, format_bracketing, is_standard, shirshov_bracket,
    standard_factorization,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_CONFIG = 0, 1, 2


class UsageError(ValueError):
    pass


def _height_str(h) -> str:
    return "inf" if h == math.inf else str(h)


def _order_str(t) -> str:
    return "inf" if t == math.inf else str(t)


class Runner:
    def __init__(self, args):
        self.args = args
        cfg = load_config(args.config) if getattr(args, "config", None) else default_config()
        self.cfg = cfg
        self.ctx, self.P = cfg.build()
        md = getattr(args, "max_degree", None)
        self.D = md if md is not None else cfg.max_degree
        if self.D < 1:
            raise UsageError("--max-degree must be positive")
        self.calc = calculus(self.ctx)
        self._report = None

    def header(self) -> dict:
        return {"max_degree": self.D, "mode": self.P.mode, "field": str(self.ctx.field)}

    def fw(self, w) -> str:
        return self.ctx.format_word(w)

    def word_arg(self, text: str):
        try:
            return self.ctx.parse_word(text)
        except ContextError as e:
            raise UsageError(str(e)) from e

    def report(self):
        if self._report is None:
            self._report = enumerate_pbw(self.P, self.D)
        return self._report

    # -- subcommands -----------------------------------------------------

    def standard_words(self):
        ws = enumerate_standard(self.ctx.n, self.D, self.ctx.weights)
        counts = {}
        for w in ws:
            d = self.ctx.degree(w)
            counts[d] = counts.get(d, 0) + 1
        data = {**self.header(), "words": [self.fw(w) for w in ws],
                "counts": {str(d): counts.get(d, 0) for d in range(1, self.D + 1)}}
        text = [self.fw(w) for w in ws]
        text.append("counts: " + " ".join(f"{d}:{counts.get(d, 0)}" for d in range(1, self.D + 1)))
        return data, text, EXIT_OK

    def bracket(self):
        u = self.word_arg(self.args.word)
        if not u or not is_standard(u):
            raise UsageError(f"{self.args.word} is not a standard word")
        names = self.ctx.names
        full = format_bracketing(shirshov_bracket(u), names)
        if len(u) == 1:
            top = f"[{self.fw(u)}]"
        else:
            v, w = standard_factorization(u)
            top = f"[[{self.fw(v)}][{self.fw(w)}]]"
        return {"word": self.fw(u), "top": top, "tree": full}, [top, full], EXIT_OK

    def expand(self):
        u = self.word_arg(self.args.word)
        if not u or not is_standard(u):
            raise UsageError(f"{self.args.word} is not a standard word")
        s = format_poly(self.ctx, self.calc.expansion(u))
        return {"word": self.fw(u), "expansion": s}, [f"[{self.fw(u)}] = {s}"], EXIT_OK

    def straighten(self):
        combo = parse_superword_sum(self.ctx, self.args.expr)
        out = self.calc.straighten_combo(combo)
        status = EXIT_OK
        if self.calc.combo_expansion(out) != self.calc.combo_expansion(combo):
            status = EXIT_FALSIFIED
        s = format_combo(self.ctx, out)
        return {"input": self.args.expr, "monotonic": s, "value_preserved": status == EXIT_OK}, [s], status

    def coproduct(self):
        f = parse_gpoly(self.ctx, self.args.expr, self.calc.expansion)
        t = delta(self.ctx, f)
        lines = format_tensor(self.ctx, t).splitlines()
        data = {"input": self.args.expr, "terms": lines}
        status = EXIT_OK
        if f:
            g = is_skew_primitive(self.ctx, f)
            sp = self.ctx.group.format(g) if g is not None else None
            data["skew_primitive"] = sp
            lines.append(f"skew-primitive: {sp if sp is not None else 'no'}")
        letter = self.args.expr.strip()
        if letter.startswith("[") and letter.endswith("]") and letter.count("[") == 1:
            u = self.word_arg(letter[1:-1])
            cert = coproduct_certificate(self.ctx, u)
            mids = [{"right": self.fw(m.right), "group": self.ctx.group.format(m.group),
                     "left": format_combo(self.ctx, m.left)} for m in cert.middle]
            data["certificate"] = {"ok": cert.ok, "middle": mids, "violations": cert.violations}
            lines.append(f"certificate: {'ok' if cert.ok else 'FAILED'} ({len(mids)} middle terms)")
            for m in mids:
                lines.append(f"  {m['group']} ({m['left']}) (x) {m['right']}")
            lines.extend(f"  violation: {v}" for v in cert.violations)
            if not cert.ok:
                status = EXIT_FALSIFIED
        return data, lines, status

    def hard_letters(self):
        R = self.report()
        data = {**self.header(), "hard_letters": [self.fw(u) for u in R.hard_letters]}
        lines = [f"[{self.fw(u)}]  degree {self.ctx.degree(u)}" for u in R.hard_letters]
        return data, lines, EXIT_OK

    def heights(self):
        R = self.report()
        rows, lines = [], []
        for u in R.hard_letters:
            p = self.ctx.p_words(u, u)
            t = self.ctx.order_of(p)
            rows.append({"letter": self.fw(u), "p": scalar_str(p), "order": _order_str(t),
                         "height": _height_str(R.heights[u])})
            lines.append(f"[{self.fw(u)}]  p={scalar_str(p)}  order={_order_str(t)}  "
                         f"height={_height_str(R.heights[u])}")
        lines.extend(f"note: {n}" for n in R.notes)
        return {**self.header(), "heights": rows, "notes": R.notes}, lines, EXIT_OK

    def pbw_basis(self):
        R = self.report()
        data = {**self.header(), "basis": {}, "words": {}}
        lines = []
        for d in range(self.D + 1):
            sws = [format_superword(self.ctx, sw) for sw in R.basis[d]]
            dropped = [self.fw(w) for w in R.dropped[d]]
            data["basis"][str(d)] = sws
            data["words"][str(d)] = dropped
            lines.append(f"degree {d} ({len(sws)}): " + ", ".join(sws))
        ind = dropped_words_independent(self.P, R)
        data["dropped_independent"] = all(ind.values())
        lines.append(f"bracket-dropped words independent: {'yes' if all(ind.values()) else 'NO'}")
        return data, lines, EXIT_OK if all(ind.values()) else EXIT_FALSIFIED

    def hilbert(self):
        R = self.report()
        rows = [{"degree": d, "engine": R.hilbert[d], "oracle": R.oracle[d]} for d in range(self.D + 1)]
        lines = ["degree  engine  oracle"]
        lines += [f"{r['degree']:>6}  {r['engine']:>6}  {r['oracle']:>6}" for r in rows]
        verdict = finiteness_verdict(self.P, R)
        lines.append(f"verdict: {verdict}")
        if verdict == "finite-dimensional":
            lines.append(f"total dimension: {R.total}")
        data = {**self.header(), "table": rows, "match": R.consistent, "verdict": verdict,
                "total": R.total if verdict == "finite-dimensional" else None}
        if not R.consistent:
            lines.append("MISMATCH between engine and oracle")
        return data, lines, EXIT_OK if R.consistent else EXIT_FALSIFIED

    def filtration(self):
        R = self.report()
        voc = build_vocabulary_R(self.P, R)
        checks = associated_graded_check(self.P, R, voc)
        table = [{"letter": self.fw(u), "n": voc.n(u), "Deg": voc.letter_degree(self.ctx, u)}
                 for u in R.hard_letters]
        crows = []
        for c in checks:
            name = "".join(f"[{self.fw(w)}]" for w in c.letters)
            label = f"{name}^{c.exponent}" if c.kind == "power" else name
            crows.append({"kind": c.kind, "letters": label,
                          "degree": c.degree, "bound": c.bound, "ok": c.ok})
        ok = all(c.ok for c in checks)
        lines = [f"R: {len(voc.words)} words of degree <= {voc.bound}", f"M = {voc.M}", f"L = {voc.L}"]
        lines += [f"Deg([{t['letter']}]) = {t['Deg']}  (n = {t['n']})" for t in table]
        for c in crows:
            shown = "-inf" if c["degree"] is None else c["degree"]
            lines.append(f"{c['kind']} {c['letters']}: {shown} < {c['bound']}  {'ok' if c['ok'] else 'FAIL'}")
        data = {**self.header(), "R_size": len(voc.words), "R_bound": voc.bound, "M": voc.M, "L": voc.L,
                "degrees": table, "checks": crows, "ok": ok}
        return data, lines, EXIT_OK if ok else EXIT_FALSIFIED

    def selftest(self):
        seed = getattr(self.args, "seed", None) or 0
        results = run_selftest(seed)
        lines = [f"{'PASS' if m is None else 'FAIL'} {name}" + ("" if m is None else f": {m}")
                 for name, m in results]
        ok = all(m is None for _, m in results)
        data = {"seed": seed, "results": [{"check": n, "ok": m is None, "detail": m} for n, m in results]}
        return data, lines, EXIT_OK if ok else EXIT_FALSIFIED


COMMANDS = {
    "standard-words": ("standard_words", None),
    "bracket": ("bracket", "word"),
    "expand": ("expand", "word"),
    "straighten": ("straighten", "expr"),
    "coproduct": ("coproduct", "expr"),
    "hard-letters": ("hard_letters", None),
    "heights": ("heights", None),
    "pbw-basis": ("pbw_basis", None),
    "hilbert": ("hilbert", None),
    "filtration": ("filtration", None),
    "selftest": ("selftest", None),
}


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", default=argparse.SUPPRESS, help="presentation file (YAML)")
    p.add_argument("--max-degree", type=int, default=argparse.SUPPRESS, help="degree bound")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpbw", description="Quantum PBW bases by exact linear algebra.")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, arg) in COMMANDS.items():
        sp = sub.add_parser(name)
        _add_common(sp)
        if arg:
            sp.add_argument(arg)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "selftest" and not getattr(args, "config", None):
            runner = Runner.__new__(Runner)
            runner.args = args
        else:
            runner = Runner(args)
        data, lines, status = getattr(runner, COMMANDS[args.command][0])()
    except (ConfigError, PresentationError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (ExprError, FieldError, ContextError, WordError, SuperLetterError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantViolation as e:
        print(f"falsified: {e}", file=sys.stderr)
        return EXIT_FALSIFIED
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        if args.command not in ("bracket", "expand", "straighten", "coproduct", "selftest"):
            print(f"# max_degree {runner.D}, mode {runner.P.mode}")
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
