"""Extended ligature programs: rewriting, the pair function f, and loop checks.

A program maps an ordered letter pair ``(left, right)`` to an operation and
an inserted letter.  Rewriting walks a cursor over the gaps of a word; at
each gap the rule for the surrounding pair (if any) edits the buffer and
says where the cursor goes next.

``f(left, right)`` is the letter just left of the cursor at the moment it
first passes the material that came from ``right``.  Each operation either
names that letter directly or defers to ``f`` of another pair; one kind
(``|=:|``) defers twice.  ``f`` is well defined exactly when no rewrite
loops forever, so evaluating it with depth-first search and in-progress
marks decides loop freedom, visiting each pair once.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Mapping


class LigOp(enum.Enum):
    NONE = ""
    MERGE = "=:"
    KEEP_RIGHT = "=:|"
    KEEP_RIGHT_ADV = "=:|>"
    KEEP_LEFT = "|=:"
    KEEP_LEFT_ADV = "|=:>"
    KEEP_BOTH = "|=:|"
    KEEP_BOTH_ADV1 = "|=:|>"
    KEEP_BOTH_ADV2 = "|=:|>>"


OPCODES = {op.value: op for op in LigOp if op is not LigOp.NONE}

# op -> (kept left?, kept right?, cursor advance in gaps)
_EFFECT = {
    LigOp.MERGE: (False, False, 0),
    LigOp.KEEP_RIGHT: (False, True, 0),
    LigOp.KEEP_RIGHT_ADV: (False, True, 1),
    LigOp.KEEP_LEFT: (True, False, 0),
    LigOp.KEEP_LEFT_ADV: (True, False, 1),
    LigOp.KEEP_BOTH: (True, True, 0),
    LigOp.KEEP_BOTH_ADV1: (True, True, 1),
    LigOp.KEEP_BOTH_ADV2: (True, True, 2),
}

Pair = tuple[str, str]


class LigatureParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class StepLimitExceeded(RuntimeError):
    def __init__(self, pair: Pair, steps: int, buffer: str):
        super().__init__(
            f"no termination after {steps} steps; focus on {pair[0]!r} {pair[1]!r}"
        )
        self.pair = pair
        self.steps = steps
        self.buffer = buffer


@dataclass(frozen=True)
class Rule:
    op: LigOp
    inserted: str


@dataclass(frozen=True)
class LigProgram:
    rules: Mapping[Pair, Rule] = field(default_factory=dict)

    def get(self, left: str, right: str) -> Rule | None:
        return self.rules.get((left, right))

    def alphabet(self) -> set[str]:
        letters = set()
        for (a, b), rule in self.rules.items():
            letters.update((a, b, rule.inserted))
        return letters

    def __len__(self):
        return len(self.rules)


def parse_letter(text: str) -> str:
    if len(text) == 1:
        return text
    if text.startswith("#") and text[1:].isdigit() and text[1:].isascii():
        code = int(text[1:])
        if code <= 0x10FFFF:
            return chr(code)
    raise ValueError(f"malformed letter {text!r}")


def format_letter(letter: str) -> str:
    if letter.isprintable() and not letter.isspace() and letter not in "%#":
        return letter
    return f"#{ord(letter)}"


def parse_program(text: str) -> LigProgram:
    """One rule per line: ``<left> <right> <opcode> <inserted>``."""
    rules: dict[Pair, Rule] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split("%", 1)[0].split()
        if not fields:
            continue
        if fields[0].lower() in ("kern", "krn") or (
            len(fields) > 2 and fields[2].lower() in ("kern", "krn")
        ):
            raise LigatureParseError("kern entries are not supported", lineno)
        if len(fields) != 4:
            raise LigatureParseError(f"expected 4 fields, got {len(fields)}", lineno)
        try:
            left, right, inserted = (parse_letter(fields[i]) for i in (0, 1, 3))
        except ValueError as exc:
            raise LigatureParseError(str(exc), lineno) from None
        op = OPCODES.get(fields[2])
        if op is None:
            raise LigatureParseError(f"unknown opcode {fields[2]!r}", lineno)
        if (left, right) in rules:
            raise LigatureParseError(f"duplicate pair {left!r} {right!r}", lineno)
        rules[left, right] = Rule(op, inserted)
    return LigProgram(rules)


def format_program(program: LigProgram) -> str:
    return "".join(
        f"{format_letter(a)} {format_letter(b)} {rule.op.value} {format_letter(rule.inserted)}\n"
        for (a, b), rule in program.rules.items()
    )


@dataclass(frozen=True)
class TraceStep:
    pair: Pair
    op: LigOp
    buffer: str
    focus: int


@dataclass(frozen=True)
class Rewrite:
    word: str
    steps: int
    trace: tuple[TraceStep, ...]


def default_step_limit(word: str, program: LigProgram) -> int:
    alphabet = program.alphabet() | set(word)
    return max(1, 4 * (len(word) + len(program)) * max(1, len(alphabet)))


def simulate(
    word: str, program: LigProgram, step_limit: int | None = None, trace: bool = True
) -> Rewrite:
    """Rewrite ``word`` left to right; raise StepLimitExceeded on a runaway."""
    if step_limit is None:
        step_limit = default_step_limit(word, program)
    if step_limit < 1:
        raise ValueError("step_limit must be at least 1")
    buf = list(word)
    focus = 1
    steps = 0
    log = []
    while focus < len(buf):
        pair = (buf[focus - 1], buf[focus])
        if steps >= step_limit:
            raise StepLimitExceeded(pair, steps, "".join(buf))
        steps += 1
        rule = program.rules.get(pair)
        if rule is None:
            op = LigOp.NONE
            focus += 1
        else:
            op = rule.op
            keep_left, keep_right, advance = _EFFECT[op]
            if keep_left and keep_right:
                buf.insert(focus, rule.inserted)
            elif keep_left:
                buf[focus] = rule.inserted
            elif keep_right:
                buf[focus - 1] = rule.inserted
            else:
                buf[focus - 1 : focus + 1] = [rule.inserted]
            focus += advance
        if trace:
            log.append(TraceStep(pair, op, "".join(buf), focus))
    return Rewrite("".join(buf), steps, tuple(log))


@dataclass(frozen=True)
class Undefined:
    """f has no value: its evaluation runs into ``cycle``."""

    cycle: tuple[Pair, ...]

    def __bool__(self):
        return False


def _dependencies(pair: Pair, rule: Rule | None):
    """What f(pair) is: ('letter', x), ('f', p) or ('ff', p, right)."""
    left, right = pair
    if rule is None:
        return ("letter", right)
    op, lam = rule.op, rule.inserted
    if op is LigOp.MERGE or op is LigOp.KEEP_LEFT_ADV:
        return ("letter", lam)
    if op is LigOp.KEEP_RIGHT_ADV or op is LigOp.KEEP_BOTH_ADV2:
        return ("letter", right)
    if op is LigOp.KEEP_RIGHT or op is LigOp.KEEP_BOTH_ADV1:
        return ("f", (lam, right))
    if op is LigOp.KEEP_LEFT:
        return ("f", (left, lam))
    return ("ff", (left, lam), right)


class FEvaluator:
    """Memoized evaluation of f over one program.

    Depth-first with an explicit stack.  A pair is *in progress* while on the
    stack; reaching it again means a loop.  Every pair on the stack at that
    moment depends on the loop and is recorded as undefined.  ``fresh``
    counts evaluations started for pairs not yet in the memo.
    """

    def __init__(self, program: LigProgram):
        self.program = program
        self.memo: dict[Pair, str | Undefined] = {}
        self.cycles: list[tuple[Pair, ...]] = []
        self.fresh = 0

    def __call__(self, left: str, right: str) -> str | Undefined:
        return self.evaluate((left, right))

    def evaluate(self, pair: Pair) -> str | Undefined:
        memo = self.memo
        if pair in memo:
            return memo[pair]
        # frame: [pair, spec, stage]
        stack: list[list] = []
        on_stack: dict[Pair, int] = {}

        def push(p):
            self.fresh += 1
            on_stack[p] = len(stack)
            stack.append([p, _dependencies(p, self.program.rules.get(p)), 0])

        def fail(undefined):
            for frame in stack:
                memo[frame[0]] = undefined
            stack.clear()
            on_stack.clear()
            return undefined

        push(pair)
        result = None
        while stack:
            frame = stack[-1]
            p, spec, stage = frame
            if result is None:
                if spec[0] == "letter":
                    result = spec[1]
                    need = None
                else:
                    need = spec[1]
            elif spec[0] == "ff" and stage == 0:
                frame[2] = 1
                need = (result, spec[2])
                result = None
            else:
                need = None

            if need is not None:
                if need in memo:
                    result = memo[need]
                    if isinstance(result, Undefined):
                        return fail(result)
                    continue
                if need in on_stack:
                    cycle = tuple(f[0] for f in stack[on_stack[need] :])
                    self.cycles.append(cycle)
                    return fail(Undefined(cycle))
                push(need)
                continue

            memo[p] = result
            stack.pop()
            del on_stack[p]
        return result


@dataclass(frozen=True)
class LoopReport:
    cycles: tuple[tuple[Pair, ...], ...]
    fresh_evaluations: int
    pairs_seen: int

    @property
    def ok(self) -> bool:
        return not self.cycles

    @property
    def status(self) -> str:
        return "OK" if self.ok else "CYCLE"

    def to_json(self) -> str:
        doc = {
            "status": self.status,
            "cycles": [[list(pair) for pair in cycle] for cycle in self.cycles],
        }
        return json.dumps(doc, ensure_ascii=False)


def _run_all(program: LigProgram) -> FEvaluator:
    evaluator = FEvaluator(program)
    for pair in program.rules:
        evaluator.evaluate(pair)
    return evaluator


def f_eval(left: str, right: str, program: LigProgram) -> str | Undefined:
    return FEvaluator(program)(left, right)


def check_loops(program: LigProgram) -> LoopReport:
    """Decide whether any word can make the program rewrite forever."""
    evaluator = _run_all(program)
    return LoopReport(tuple(evaluator.cycles), evaluator.fresh, len(evaluator.memo))


UNDEF = "UNDEF"


def f_table(program: LigProgram) -> dict[Pair, str | Undefined]:
    """f for every pair the loop check evaluated, in evaluation order."""
    return dict(_run_all(program).memo)


def f_table_json(table: Mapping[Pair, str | Undefined]) -> str:
    doc = {
        a + b: (UNDEF if isinstance(v, Undefined) else v)
        for (a, b), v in sorted(table.items())
    }
    return json.dumps(doc, ensure_ascii=False)
