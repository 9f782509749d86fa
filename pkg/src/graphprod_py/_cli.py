"""Command-line interface: ``graphprod <command> GRAPH [...]``.

Every referenced file is parsed into a ``CommandRequest`` before any
computation runs. Exit codes: 0 on success (UNKNOWN verdicts included),
2 on malformed input, 3 on a failed precondition.
"""

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from graphprod_py import _bnsr, _homology, _parse, _quotient
from graphprod_py._types import errors
from graphprod_py._types.graph import SimplicialGraph, flag_complex, join_factors
from graphprod_py._types.records import (
    FullnessBudget,
    Normality,
    SearchBudget,
    TietzeBudget,
)
from graphprod_py._types.word import (
    Word,
    abelianize,
    equal,
    is_conjugate,
    normal_form,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

_SEARCH = SearchBudget()
_FULLNESS = FullnessBudget()
_TIETZE = TietzeBudget()

_WORD_ARGS = {
    "nf": ("WORD",),
    "eq": ("U", "V"),
    "conj": ("U", "V"),
    "abel": ("WORD",),
    "member": ("WORD",),
    "central": ("H",),
}


@dataclass(slots=True, frozen=True)
class CommandRequest:
    """A fully parsed invocation."""

    command: str
    graph: SimplicialGraph
    words: tuple[Word, ...] = ()
    gens: _quotient.NormalSubgroupGens | None = None
    character: _bnsr.Character | None = None
    n: int = 1
    dead: frozenset[str] | None = None
    verify_normality: bool = False
    search: SearchBudget = field(default_factory=SearchBudget)
    fullness: FullnessBudget = field(default_factory=FullnessBudget)
    tietze: TietzeBudget = field(default_factory=TietzeBudget)
    as_json: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandRequest":
        graph = _parse.read_graph(args.graph)
        words = tuple(_parse.parse_word(graph, w) for w in getattr(args, "words", ()))
        gens = None
        if getattr(args, "gens", None) is not None:
            gens = _quotient.NormalSubgroupGens.of(
                graph, _parse.read_words(graph, args.gens)
            )
        character = None
        if getattr(args, "chi_file", None) is not None:
            character = _parse.read_character(graph, args.chi_file)
        elif getattr(args, "chi", None) is not None:
            character = _parse.parse_character(graph, args.chi)
        dead = None
        if getattr(args, "dead", None) is not None:
            dead = frozenset(filter(None, (v.strip() for v in args.dead.split(","))))
            for v in dead:
                if v not in graph:
                    raise errors.ParseError("unknown vertex in --dead", token=v)
        return cls(
            command=args.command,
            graph=graph,
            words=words,
            gens=gens,
            character=character,
            n=getattr(args, "n", 1),
            dead=dead,
            verify_normality=getattr(args, "verify_normality", False),
            search=SearchBudget(args.budget_depth, args.budget_slack, args.budget_states),
            fullness=FullnessBudget(args.fullness_budget),
            tietze=TietzeBudget(steps=args.tietze_steps),
            as_json=args.json,
        )

    def require_gens(self) -> _quotient.NormalSubgroupGens:
        if self.gens is None:
            raise errors.PreconditionError(f"{self.command} needs --gens")
        return self.gens

    def require_character(self) -> _bnsr.Character:
        if self.character is None:
            raise errors.PreconditionError(f"{self.command} needs --chi or --chi-file")
        return self.character


Report = tuple[list[str], dict[str, Any]]
"""Text lines and the JSON payload of one command."""


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _budget(budget: SearchBudget | FullnessBudget | TietzeBudget) -> str:
    return " ".join(f"{k}={v}" for k, v in budget.to_dict().items())


def _group(rank: int, torsion: Sequence[int]) -> str:
    parts = []
    if rank:
        parts.append("Z" if rank == 1 else f"Z^{rank}")
    parts.extend(f"Z/{t}" for t in torsion)
    return " + ".join(parts) if parts else "0"


def _decompose(req: CommandRequest) -> Report:
    g = req.graph
    d = join_factors(g)
    factors = " ".join(g.render_subset(f) for f in d.factors)
    central = g.render_subset(d.central) if d.central else "(none)"
    lines = [f"factors: {factors}; central: {central}", f"kind: {g.kind.value}"]
    payload = {
        "factors": [list(g.ordered(f)) for f in d.factors],
        "central": list(g.ordered(d.central)),
        "kind": g.kind.value,
    }
    return lines, payload


def _nf(req: CommandRequest) -> Report:
    nf = str(normal_form(req.words[0]))
    return [nf], {"normal_form": nf}


def _eq(req: CommandRequest) -> Report:
    result = equal(*req.words)
    return [f"equal: {_yes(result)}"], {"equal": result}


def _conj(req: CommandRequest) -> Report:
    result = is_conjugate(*req.words)
    return [f"conjugate: {_yes(result)}"], {"conjugate": result}


def _abel(req: CommandRequest) -> Report:
    g = req.graph
    image = dict(zip(g.vertices, abelianize(req.words[0])))
    text = ",".join(f"{v}={x}" for v, x in image.items())
    return [f"abelianization: {text}"], {"abelianization": image}


def _sigma1(req: CommandRequest) -> Report:
    chi = req.require_character()
    inside = _bnsr.sigma1_contains(chi)
    dead = req.graph.render_subset(chi.dead)
    lines = [f"character: {chi}", f"dead: {dead}", f"sigma1: {_yes(inside)}"]
    payload = {
        "character": chi.to_dict(),
        "dead": list(req.graph.ordered(chi.dead)),
        "sigma1": inside,
    }
    return lines, payload


def _fintype(req: CommandRequest) -> Report:
    n = req.n
    if req.gens is not None and req.character is not None:
        raise errors.PreconditionError("fintype takes --gens or a character, not both")
    if req.gens is not None:
        N = req.gens
        if req.verify_normality:
            check = _quotient.verify_normality(N, req.search)
            N = N.with_normality(check.status, check.witness)
        result = _quotient.finiteness_of_N(N, n, req.fullness, req.tietze)
        lines = [
            f"normality: {N.normality.value}",
            f"FP_{n}: {result.fp.value}",
            f"F_{n}: {result.f.value}",
            f"conditional: {_yes(result.conditional)}",
            f"note: {result.note}",
        ]
        payload = result.to_dict() | {"normality": N.normality.value}
    else:
        chi = req.require_character()
        verdict = _bnsr.kernel_finiteness(chi, n, req.tietze)
        lines = [
            f"character: {chi}",
            f"FP_{n}: {verdict.fp.value}",
            f"F_{n}: {verdict.f.value}",
            f"dead_sets: {verdict.dead_sets}",
        ]
        if verdict.witness is not None:
            lines.append(f"witness: {req.graph.render_subset(verdict.witness)}")
        payload = verdict.to_dict() | {"character": chi.to_dict()}
    lines.append(f"tietze_budget: {_budget(req.tietze)}")
    payload["budgets"] = {"tietze": req.tietze.to_dict(), "fullness": req.fullness.to_dict()}
    return lines, payload


def _quotient_report(req: CommandRequest) -> Report:
    N = req.require_gens()
    if req.verify_normality:
        check = _quotient.verify_normality(N, req.search)
        N = N.with_normality(check.status, check.witness)
    report = _quotient.quotient_report(N, req.fullness)
    g = req.graph
    d = report.decomposition
    lines = [
        f"normality: {report.normality.value}",
        f"factors: {' '.join(g.render_subset(f) for f in d.factors)}",
        f"central: {g.render_subset(d.central) if d.central else '(none)'}",
    ]
    for entry in report.fullness:
        lines.append(f"fullness {g.render_subset(entry.factor)}: {entry.status.value}")
    lines += [
        f"character: {report.character}",
        f"rank: {report.rank}",
        f"torsion: {' '.join(map(str, report.torsion)) or '(none)'}",
        f"abelianized_quotient: {_group(report.rank, report.torsion)}",
    ]
    if report.split_form is not None:
        exact = "exact" if report.split_form.exact else "upper bound"
        lines.append(f"split_form: {report.split_form.rendered} ({exact})")
    lines += [f"guarantee: {text}" for text in report.guarantees]
    lines += [f"central_hypothesis: {text}" for text in report.central_hypothesis]
    if N.witness is not None:
        lines.append(f"normality_witness: {N.witness}")
    lines.append(f"fullness_budget: {_budget(req.fullness)}")
    payload = report.to_dict()
    if req.verify_normality:
        lines.append(f"search_budget: {_budget(req.search)}")
        payload["budgets"]["search"] = req.search.to_dict()
    return lines, payload


def _member(req: CommandRequest) -> Report:
    N = req.require_gens()
    result = _quotient.membership(N, req.words[0], req.search)
    lines = [f"membership: {result.verdict.value}"]
    if result.product is not None:
        spelled = " ".join(
            f"n{i + 1}" if sign > 0 else f"n{i + 1}^-1" for i, sign in result.product
        )
        lines.append(f"certificate: {spelled or '1'}")
    if result.image is not None:
        lines.append(f"image: {','.join(map(str, result.image))}")
    lines.append(f"search_budget: {_budget(req.search)}")
    return lines, result.to_dict() | {"budget": req.search.to_dict()}


def _verification(
    name: str, req: CommandRequest, result: _quotient.VerificationResult
) -> Report:
    lines = [f"{name}: {result.status.value}", f"checks: {result.checks}"]
    if result.witness is not None:
        lines.append(f"witness: {result.witness}")
    lines.append(f"search_budget: {_budget(req.search)}")
    payload = {
        name: result.status.value,
        "checks": result.checks,
        "unknown": result.unknown,
        "witness": str(result.witness) if result.witness is not None else None,
        "budget": req.search.to_dict(),
    }
    return lines, payload


def _normality(req: CommandRequest) -> Report:
    return _verification(
        "normality", req, _quotient.verify_normality(req.require_gens(), req.search)
    )


def _coabelian(req: CommandRequest) -> Report:
    N = req.require_gens()
    result = _quotient.verify_abelian_quotient(N, req.search)
    lines, payload = _verification("coabelian", req, result)
    if result.status is Normality.VERIFIED:
        q = _quotient.induced_character(N)
        lines.insert(1, f"quotient: {_group(q.rank, q.torsion)} (if N is normal)")
        payload["quotient"] = _group(q.rank, q.torsion)
    return lines, payload


def _central(req: CommandRequest) -> Report:
    result = _quotient.verify_central(req.require_gens(), req.words[0], req.search)
    lines = [f"centrality: {result.status.value}"]
    if result.witness is not None:
        lines.append(f"witness: {result.witness}")
    lines.append(f"search_budget: {_budget(req.search)}")
    payload = {
        "centrality": result.status.value,
        "witness": str(result.witness) if result.witness is not None else None,
        "budget": req.search.to_dict(),
    }
    return lines, payload


def _homology_report(req: CommandRequest) -> Report:
    if req.dead is None:
        K = flag_complex(req.graph)
    else:
        K = _bnsr.living_subcomplex(req.graph, req.dead)
    profile = _homology.reduced_homology(K, max(K.dimension, 0))
    simply = _homology.is_simply_connected(K, req.tietze)
    lines = str(profile).splitlines()
    lines += [
        f"dimension: {K.dimension}",
        f"connected: {_yes(_homology.is_connected(K))}",
        f"simply_connected: {simply.value}",
        f"tietze_budget: {_budget(req.tietze)}",
    ]
    payload = profile.to_dict() | {
        "dimension": K.dimension,
        "connected": _homology.is_connected(K),
        "simply_connected": simply.value,
        "budget": req.tietze.to_dict(),
    }
    return lines, payload


_COMMANDS: dict[str, tuple[Callable[[CommandRequest], Report], str]] = {
    "decompose": (_decompose, "Join factors and central vertices."),
    "nf": (_nf, "Normal form of a word."),
    "eq": (_eq, "Whether two words are equal."),
    "conj": (_conj, "Whether two words are conjugate."),
    "abel": (_abel, "Abelianization of a word."),
    "sigma1": (_sigma1, "Whether a rank-1 character lies in Sigma^1."),
    "fintype": (_fintype, "FP_n / F_n of ker chi, or of N with --gens."),
    "quotient": (_quotient_report, "Fullness, character and shape of G/N."),
    "member": (_member, "Three-valued membership of a word in N."),
    "normality": (_normality, "Certify or refute normality of N."),
    "central": (_central, "Whether hN is central in G/N."),
    "coabelian": (_coabelian, "Whether N contains the commutator subgroup."),
    "homology": (_homology_report, "Reduced homology of the (living) flag complex."),
}

_USES_GENS = {"fintype", "quotient", "member", "normality", "central", "coabelian"}
_USES_CHI = {"sigma1", "fintype"}


def run(request: CommandRequest) -> tuple[int, str]:
    """Execute a parsed request; returns the exit code and report text."""
    handler, _ = _COMMANDS[request.command]
    lines, payload = handler(request)
    if request.as_json:
        return EXIT_OK, json.dumps(payload, indent=2, sort_keys=True)
    return EXIT_OK, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="Graph file.")
    common.add_argument("--json", action="store_true", help="Emit JSON.")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--budget-depth", type=int, default=_SEARCH.depth)
    common.add_argument("--budget-slack", type=int, default=_SEARCH.slack)
    common.add_argument("--budget-states", type=int, default=_SEARCH.max_states)
    common.add_argument(
        "--fullness-budget", type=int, default=_FULLNESS.extra_length
    )
    common.add_argument("--tietze-steps", type=int, default=_TIETZE.steps)

    parser = argparse.ArgumentParser(
        prog="graphprod",
        description="Graph products of cyclic groups: words, quotients, finiteness.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in _COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_)
        if name in _WORD_ARGS:
            metavars = _WORD_ARGS[name]
            sub.add_argument("words", nargs=len(metavars), metavar=metavars)
        if name in _USES_GENS:
            sub.add_argument("--gens", help="Generator file of N, one word per line.")
        if name in _USES_CHI:
            chi = sub.add_mutually_exclusive_group()
            chi.add_argument("--chi", help="Rank-1 character, e.g. a=1,b=0.")
            chi.add_argument("--chi-file", help="Rank-r character file.")
        if name == "fintype":
            sub.add_argument("-n", type=int, default=1)
        if name in ("fintype", "quotient"):
            sub.add_argument(
                "--verify-normality",
                action="store_true",
                help="Certify normality by search instead of asserting it.",
            )
        if name == "homology":
            sub.add_argument("--dead", help="Comma-separated dead vertices.")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = ("WARNING", "INFO", "DEBUG")[min(verbosity, 2)]
    logger.remove()
    logger.add(sys.stderr, level=level)
    logger.enable("graphprod_py")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        request = CommandRequest.from_args(args)
        code, text = run(request)
    except errors.ParseError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except errors.PreconditionError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(text)
    return code
