"""Expression parser, evaluator, and REPL for the whole package.

Grammar (statements are evaluated one per line):

    stmt    := expr (CMPOP expr)?             CMPOP: "<" | ">" | "==" | "~"
    expr    := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := call | NAME | NUMBER | "|N|" | "(" expr ")"
    call    := "S" "(" expr ")"
             | "lim"  "(" NAME "in" DOMAIN "," seqbody ")"
             | "xlim" "(" NAME "in" DOMAIN "," seqbody ")"
             | "digits" "(" expr ")"
             | "dist" "(" expr "," expr ")"
             | "pair" "(" expr "," expr ")"
             | "enum" "(" enumspec "," NUMBER ")"
    seqbody := seqatom ("+" NUMBER)*
    seqatom := "ones" "(" VAR ")" | "pow2" "(" VAR ")" | VAR
    enumspec:= NAME ("(" NUMBER ")")?         DOMAIN: "L" | "N" | "M"

Names follow the canonical grammar: decimals, "w", "w_3", "o_2", plus the
cardinal names "K" and "kappa" (or the Greek letter). Offset spellings
like "w-2" and "o_1+2" arrive as ordinary subtraction or addition and land
on exactly the value the literal denotes. "|N|" is a literal for K.

Arithmetic stays at the element level while it can; as soon as a cardinal
value appears (a K or kappa literal, or an escalated result), remaining
operands are coerced to their cardinals (finite n to the finite cardinal n,
every infinite element to K) and the cardinal table takes over. The "~"
operator is the cardinal comparison, "<", ">", "==" the structural one;
comparisons are defined on elements only.

Exit codes: 0 success, 1 evaluation error under --eval, 2 syntax error
under --eval, 64 bad flags.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Union

from . import arith, bijections, cardinal, limits, order
from .errors import InfnatError
from .model import (
    CardValue,
    Fin,
    FinCard,
    K,
    MNumber,
    canonical_name,
    card_name,
    parse_value,
)


class CalcSyntaxError(InfnatError):
    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.column = column


class CalcEvalError(InfnatError):
    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.column = column


# ------------------------------------------------------------------
# Lexer
# ------------------------------------------------------------------

_NAME_CHARS = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TWO_CHAR = {"==": "CMP"}
_ONE_CHAR = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "(": "LPAREN",
    ")": "RPAREN",
    ",": "COMMA",
    "<": "CMP",
    ">": "CMP",
    "~": "CMP",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int  # 1-based byte column


def _byte_col(src: str, i: int) -> int:
    return len(src[:i].encode("utf-8")) + 1


def tokenize(src: str) -> list:
    tokens = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
            continue
        col = _byte_col(src, i)
        if c.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(Token("NUMBER", src[i:j], col))
            i = j
            continue
        if c == "κ":
            tokens.append(Token("NAME", "kappa", col))
            i += 1
            continue
        m = _NAME_CHARS.match(src, i)
        if m:
            tokens.append(Token("NAME", m.group(0), col))
            i = m.end()
            continue
        if c == "|":
            if src[i : i + 3] == "|N|":
                tokens.append(Token("NSET", "|N|", col))
                i += 3
                continue
            raise CalcSyntaxError("expected '|N|'", col)
        if src[i : i + 2] in _TWO_CHAR:
            tokens.append(Token(_TWO_CHAR[src[i : i + 2]], src[i : i + 2], col))
            i += 2
            continue
        if c in _ONE_CHAR:
            tokens.append(Token(_ONE_CHAR[c], c, col))
            i += 1
            continue
        if c == "=":
            raise CalcSyntaxError("expected '==' (single '=' is not an operator)", col)
        raise CalcSyntaxError(f"unexpected character '{c}'", col)
    tokens.append(Token("EOF", "", _byte_col(src, len(src))))
    return tokens


# ------------------------------------------------------------------
# AST
# ------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: object
    pos: int


@dataclass(frozen=True)
class NameRef:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class SuccCall:
    arg: object
    pos: int


@dataclass(frozen=True)
class LimitCall:
    family: limits.SeqFamily
    domain: limits.IndexDomain
    xtr: bool
    pos: int


@dataclass(frozen=True)
class DigitsCall:
    arg: object
    pos: int


@dataclass(frozen=True)
class DistCall:
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class PairCall:
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class EnumCall:
    spec: str
    arg: Optional[int]
    count: int
    pos: int


@dataclass(frozen=True)
class CmpStmt:
    op: str
    left: object
    right: object
    pos: int


_CALL_NAMES = ("S", "lim", "xlim", "digits", "dist", "pair", "enum")


class Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise CalcSyntaxError(f"expected {what}", tok.pos)
        return self.advance()

    def parse_stmt(self):
        left = self.parse_expr()
        tok = self.peek()
        if tok.kind == "CMP":
            self.advance()
            right = self.parse_expr()
            self.expect("EOF", "end of input after comparison")
            return CmpStmt(tok.text, left, right, tok.pos)
        self.expect("EOF", "an operator ('+', '-', '*', '/', '<', '>', '==', '~') or end of input")
        return left

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("PLUS", "MINUS"):
            tok = self.advance()
            rhs = self.parse_term()
            node = BinOp(tok.text, node, rhs, tok.pos)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().kind in ("STAR", "SLASH"):
            tok = self.advance()
            rhs = self.parse_factor()
            node = BinOp(tok.text, node, rhs, tok.pos)
        return node

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            return Lit(Fin(int(tok.text)), tok.pos)
        if tok.kind == "NSET":
            self.advance()
            return Lit(K, tok.pos)
        if tok.kind == "LPAREN":
            self.advance()
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind == "NAME":
            if self.tokens[self.k + 1].kind == "LPAREN":
                return self.parse_call()
            self.advance()
            return NameRef(tok.text, tok.pos)
        raise CalcSyntaxError(
            "expected a value: a number, a name, '|N|', '(', or a call "
            "(S, lim, xlim, digits, dist, pair, enum)",
            tok.pos,
        )

    def parse_call(self):
        name_tok = self.advance()
        name = name_tok.text
        if name not in _CALL_NAMES:
            raise CalcSyntaxError(
                f"unknown function '{name}' (expected one of: {', '.join(_CALL_NAMES)})",
                name_tok.pos,
            )
        self.expect("LPAREN", "'('")
        if name == "S":
            arg = self.parse_expr()
            self.expect("RPAREN", "')'")
            return SuccCall(arg, name_tok.pos)
        if name in ("lim", "xlim"):
            return self.parse_limit(name_tok)
        if name == "digits":
            arg = self.parse_expr()
            self.expect("RPAREN", "')'")
            return DigitsCall(arg, name_tok.pos)
        if name in ("dist", "pair"):
            a = self.parse_expr()
            self.expect("COMMA", "','")
            b = self.parse_expr()
            self.expect("RPAREN", "')'")
            cls = DistCall if name == "dist" else PairCall
            return cls(a, b, name_tok.pos)
        # enum(spec, count)
        spec_tok = self.expect("NAME", "an enumerator name")
        arg = None
        if self.peek().kind == "LPAREN":
            self.advance()
            arg_tok = self.expect("NUMBER", "a number argument")
            arg = int(arg_tok.text)
            self.expect("RPAREN", "')'")
        self.expect("COMMA", "','")
        count_tok = self.expect("NUMBER", "a row count")
        self.expect("RPAREN", "')'")
        return EnumCall(spec_tok.text, arg, int(count_tok.text), name_tok.pos)

    def parse_limit(self, name_tok: Token):
        var_tok = self.expect("NAME", "a sequence variable name")
        in_tok = self.expect("NAME", "'in'")
        if in_tok.text != "in":
            raise CalcSyntaxError("expected 'in'", in_tok.pos)
        dom_tok = self.expect("NAME", "an index domain (L, N, or M)")
        try:
            domain = limits.IndexDomain[dom_tok.text]
        except KeyError:
            raise CalcSyntaxError(
                f"unknown index domain '{dom_tok.text}' (expected L, N, or M)",
                dom_tok.pos,
            )
        self.expect("COMMA", "','")
        family = self.parse_seqbody(var_tok.text)
        self.expect("RPAREN", "')'")
        return LimitCall(family, domain, name_tok.text == "xlim", name_tok.pos)

    def parse_seqbody(self, var: str) -> limits.SeqFamily:
        base = self.parse_seqatom(var)
        shift = 0
        while self.peek().kind == "PLUS":
            self.advance()
            num = self.expect("NUMBER", "a finite shift")
            shift += int(num.text)
        return limits.Affine(base, shift) if shift else base

    def parse_seqatom(self, var: str) -> limits.SeqFamily:
        tok = self.expect("NAME", f"a sequence in '{var}' (ones({var}), pow2({var}), or {var})")
        if tok.text in ("ones", "pow2"):
            self.expect("LPAREN", "'('")
            v = self.expect("NAME", f"the sequence variable '{var}'")
            if v.text != var:
                raise CalcSyntaxError(f"unknown sequence variable '{v.text}'", v.pos)
            self.expect("RPAREN", "')'")
            return limits.ONES_RUN if tok.text == "ones" else limits.POW2
        if tok.text == var:
            return limits.IDENTITY
        raise CalcSyntaxError(
            f"unknown sequence '{tok.text}' (expected ones({var}), pow2({var}), or {var})",
            tok.pos,
        )


# ------------------------------------------------------------------
# Outcomes and evaluation
# ------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: MNumber


@dataclass(frozen=True)
class Card:
    value: CardValue


@dataclass(frozen=True)
class Cmp:
    value: order.Comparison


@dataclass(frozen=True)
class Dist:
    value: order.Distance


@dataclass(frozen=True)
class Lim:
    value: limits.LimitResult


@dataclass(frozen=True)
class Digits:
    value: arith.DigitForm


@dataclass(frozen=True)
class Table:
    rows: tuple


EvalOutcome = Union[Number, Card, Cmp, Dist, Lim, Digits, Table]

_ELEMENT_OPS = {"+": arith.add, "-": arith.sub, "*": arith.mul, "/": arith.div}
_CARD_OPS = {
    "+": cardinal.card_add,
    "-": cardinal.card_sub,
    "*": cardinal.card_mul,
    "/": cardinal.card_div,
}

ENUM_BOUND = 100_000


class BadEnumSpec(InfnatError):
    pass


def enum_rows(spec: str, arg: Optional[int], count: int) -> list:
    """Rows (name, position) of a named enumerator's prefix."""
    if count < 0 or count > ENUM_BOUND:
        raise BadEnumSpec(f"row count must be between 0 and {ENUM_BOUND}")
    if spec in ("union_fin", "diff"):
        if arg is None or arg < 1:
            raise BadEnumSpec(f"enumerator '{spec}' needs a positive argument, e.g. {spec}(3)")
        fn = bijections.union_interleave_fin if spec == "union_fin" else bijections.diff_interleave
        return [(bijections.token_name(fn(arg, i)), i) for i in range(count)]
    if arg is not None:
        raise BadEnumSpec(f"enumerator '{spec}' takes no argument")
    if spec == "union_kk":
        return [(bijections.token_name(bijections.union_interleave_kk(i)), i) for i in range(count)]
    if spec == "pairs":
        rows = []
        for m in range(count):
            p = bijections.pair_unindex(m)
            rows.append((f"({p.i},{p.j})", m))
        return rows
    raise BadEnumSpec(
        f"unknown enumerator '{spec}' (expected union_fin(n), diff(n), union_kk, or pairs)"
    )


def _is_elem(v) -> bool:
    return isinstance(v, Fin) or arith.is_infinite(v)


def _card_image(v) -> CardValue:
    if isinstance(v, Fin):
        return FinCard(v.n)
    return K  # infinite element


def _wrap(pos: int, fn, *args):
    try:
        return fn(*args)
    except (CalcSyntaxError, CalcEvalError):
        raise
    except InfnatError as e:
        raise CalcEvalError(str(e), pos)


def _eval_operand(node):
    """Evaluate to an element or cardinal value for use in arithmetic."""
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, NameRef):
        return _wrap(node.pos, parse_value, node.name)
    if isinstance(node, BinOp):
        a = _eval_operand(node.left)
        b = _eval_operand(node.right)
        if _is_elem(a) and _is_elem(b):
            return _wrap(node.pos, _ELEMENT_OPS[node.op], a, b)
        ca = _card_image(a) if _is_elem(a) else a
        cb = _card_image(b) if _is_elem(b) else b
        return _wrap(node.pos, _CARD_OPS[node.op], ca, cb)
    if isinstance(node, SuccCall):
        v = _eval_operand(node.arg)
        if not _is_elem(v):
            raise CalcEvalError(
                "successor applies to elements, not cardinal values", node.pos
            )
        return arith.succ(v)
    if isinstance(node, LimitCall):
        res = _eval_limit_node(node)
        if isinstance(res, limits.LimitValue):
            return res.value
        if isinstance(res, limits.LimitCardK):
            return K
        raise CalcEvalError(
            "this limit has no numeric value to use in arithmetic", node.pos
        )
    if isinstance(node, PairCall):
        return _eval_pair(node)
    if isinstance(node, (DigitsCall, DistCall, EnumCall)):
        raise CalcEvalError(
            "this result cannot be used as an arithmetic operand", node.pos
        )
    raise CalcEvalError("cannot evaluate this expression", getattr(node, "pos", 1))


def _require_element(node, what: str) -> MNumber:
    v = _eval_operand(node)
    if _is_elem(v):
        return v
    raise CalcEvalError(f"{what} needs an element, not a cardinal value", node.pos)


def _eval_limit_node(node: LimitCall) -> limits.LimitResult:
    fn = limits.eval_xtr_limit if node.xtr else limits.eval_limit
    return _wrap(node.pos, fn, node.family, node.domain)


def _eval_pair(node: PairCall) -> Fin:
    a = _require_element(node.left, "pair")
    b = _require_element(node.right, "pair")
    if not (isinstance(a, Fin) and isinstance(b, Fin) and a.n >= 1 and b.n >= 1):
        raise CalcEvalError("pair takes two finite indices starting at 1", node.pos)
    return Fin(bijections.pair_index(bijections.PairIndex(a.n, b.n)))


def eval_stmt(node) -> EvalOutcome:
    if isinstance(node, CmpStmt):
        a = _require_element(node.left, "comparison")
        b = _require_element(node.right, "comparison")
        if node.op == "~":
            return Cmp(order.cardinal_compare(a, b))
        return Cmp(order.structural_compare(a, b))
    if isinstance(node, LimitCall):
        return Lim(_eval_limit_node(node))
    if isinstance(node, DigitsCall):
        x = _require_element(node.arg, "digits")
        return Digits(_wrap(node.pos, arith.to_digits, x))
    if isinstance(node, DistCall):
        a = _require_element(node.left, "dist")
        b = _require_element(node.right, "dist")
        return Dist(order.distance(a, b))
    if isinstance(node, EnumCall):
        rows = _wrap(node.pos, enum_rows, node.spec, node.arg, node.count)
        return Table(tuple(rows))
    v = _eval_operand(node)
    if _is_elem(v):
        return Number(v)
    return Card(v)


def evaluate(src: str) -> EvalOutcome:
    """Parse and evaluate one statement; raises positioned errors."""
    return eval_stmt(Parser(src).parse_stmt())


# ------------------------------------------------------------------
# Formatting
# ------------------------------------------------------------------


def _limit_text(res: limits.LimitResult) -> str:
    if isinstance(res, limits.LimitValue):
        return canonical_name(res.value)
    if isinstance(res, limits.LimitCardK):
        return "K"
    if isinstance(res, limits.NoLimit):
        return "no-limit"
    return "apeiron"


def format_outcome(
    o: EvalOutcome,
    mode: str = "text",
    *,
    ascii_symbols: bool = False,
    digits_width: int = 16,
) -> str:
    if mode == "text":
        if isinstance(o, Number):
            return canonical_name(o.value)
        if isinstance(o, Card):
            return card_name(o.value, ascii_symbols)
        if isinstance(o, Cmp):
            return o.value.value
        if isinstance(o, Dist):
            return str(o.value.d) if isinstance(o.value, order.FiniteDist) else "infinite"
        if isinstance(o, Lim):
            return _limit_text(o.value)
        if isinstance(o, Digits):
            return arith.render_digits(o.value, digits_width, ascii_symbols)
        return "\n".join(f"{name}\t{idx}" for name, idx in o.rows)
    if mode != "json":
        raise ValueError(f"unknown format mode '{mode}'")
    return json.dumps(
        _json_record(o, ascii_symbols=ascii_symbols, digits_width=digits_width),
        separators=(",", ":"),
    )


def _json_record(o: EvalOutcome, *, ascii_symbols: bool, digits_width: int) -> dict:
    if isinstance(o, Number):
        x = o.value
        rec = {"kind": "number", "value": canonical_name(x)}
        if isinstance(x, Fin):
            rec.update(variant="fin", n=x.n)
        elif arith.is_infinite(x) and hasattr(x, "index"):
            rec.update(variant="landmark", index=x.index, offset=x.offset)
        else:
            rec.update(variant="w", offset=x.offset)
        return rec
    if isinstance(o, Card):
        v = o.value
        return {"kind": "card", "value": v.n if isinstance(v, FinCard) else card_name(v, True)}
    if isinstance(o, Cmp):
        return {"kind": "comparison", "value": o.value.value}
    if isinstance(o, Dist):
        d = o.value
        return {
            "kind": "distance",
            "value": d.d if isinstance(d, order.FiniteDist) else "infinite",
        }
    if isinstance(o, Lim):
        return {"kind": "limit", "value": _limit_text(o.value)}
    if isinstance(o, Digits):
        d = o.value
        return {
            "kind": "digits",
            "value": arith.render_digits(d, digits_width, ascii_symbols),
            "support": "finite" if isinstance(d, arith.FiniteSupport) else "cofinite",
            "positions": sorted(d.positions),
        }
    return {"kind": "table", "rows": [[name, idx] for name, idx in o.rows]}


# ------------------------------------------------------------------
# Entry points
# ------------------------------------------------------------------


class _ArgParser(argparse.ArgumentParser):
    # the flag contract reserves exit code 64 for bad flags
    def error(self, message):
        self.exit(64, f"{self.prog}: error: {message}\n")


_ENUM_FLAG_RE = re.compile(r"^([a-z_0-9]+)(?:\((\d+)\))?$")


def build_arg_parser() -> _ArgParser:
    p = _ArgParser(prog="infnat", description="exact calculator for finite and infinite naturals")
    p.add_argument("--eval", metavar="STMT", help="evaluate one statement and exit")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--dump-enum",
        metavar="NAME",
        help="print an enumerator prefix: union_fin(n), diff(n), union_kk, pairs",
    )
    p.add_argument("--count", type=int, default=10, help="rows for --dump-enum (default 10)")
    p.add_argument(
        "--digits-width",
        type=int,
        default=16,
        metavar="M",
        help="digits shown for patterns with an infinite run of ones (default 16)",
    )
    p.add_argument("--ascii", action="store_true", help="spell kappa and the digit marker in ASCII")
    return p


def _print_outcome(o: EvalOutcome, args) -> None:
    print(
        format_outcome(
            o, args.format, ascii_symbols=args.ascii, digits_width=args.digits_width
        )
    )


def repl(args) -> int:
    """Read statements line by line; ':quit' or end of input exits cleanly."""
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            sys.stdout.write("> ")
            sys.stdout.flush()
        try:
            line = sys.stdin.readline()
        except OSError:
            return 1
        if line == "":
            return 0
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return 0
        try:
            outcome = evaluate(line)
        except CalcSyntaxError as e:
            print(f"syntax error at column {e.column}: {e}", file=sys.stderr)
            continue
        except CalcEvalError as e:
            print(f"error at column {e.column}: {e}", file=sys.stderr)
            continue
        _print_outcome(outcome, args)


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    if args.digits_width < 1:
        parser.error("--digits-width must be at least 1")
    if args.count < 0:
        parser.error("--count must be nonnegative")
    if args.dump_enum is not None:
        m = _ENUM_FLAG_RE.match(args.dump_enum)
        if m is None:
            parser.error(f"bad --dump-enum value '{args.dump_enum}'")
        spec, arg = m.group(1), m.group(2)
        try:
            rows = enum_rows(spec, int(arg) if arg is not None else None, args.count)
        except BadEnumSpec as e:
            parser.error(str(e))
        _print_outcome(Table(tuple(rows)), args)
        return 0
    if args.eval is not None:
        try:
            outcome = evaluate(args.eval)
        except CalcSyntaxError as e:
            print(f"syntax error at column {e.column}: {e}", file=sys.stderr)
            return 2
        except CalcEvalError as e:
            print(f"error at column {e.column}: {e}", file=sys.stderr)
            return 1
        _print_outcome(outcome, args)
        return 0
    return repl(args)


def run() -> None:
    raise SystemExit(main())
