"""JSON and text renderings of synthesis reports and verdicts.

Words are lists of letter names so multi-character names stay unambiguous.
"""

from __future__ import annotations

from .d0l import D0LSystem
from .polynomial import Member, MembershipVerdict
from .synthesizer import SynthesisReport


def verdict_to_json(verdict: MembershipVerdict) -> dict:
    if isinstance(verdict, Member):
        return {
            "member": True,
            "shift_k": verdict.shift_k,
            "difference_values_at_k": list(verdict.difference_values_at_k),
            "prefix_values": list(verdict.prefix_values),
        }
    return {"member": False, "witness_n": verdict.witness_n, "reason": verdict.reason.value}


def verdict_to_text(verdict: MembershipVerdict) -> str:
    if isinstance(verdict, Member):
        return (
            f"Member: shift_k = {verdict.shift_k}, "
            f"differences at k = {list(verdict.difference_values_at_k)}, "
            f"F(0..k-1) = {list(verdict.prefix_values)}"
        )
    return f"NotMember: witness n = {verdict.witness_n}, reason {verdict.reason.value}"


def system_to_json(S: D0LSystem) -> dict:
    return {
        "alphabet": list(S.names),
        "axiom": list(S.spell(S.axiom)),
        "rules": {name: list(S.rule(name)) for name in S.names},
    }


def system_from_json(data: dict) -> D0LSystem:
    return D0LSystem.from_names(data["alphabet"], data["rules"], data["axiom"])


def report_to_json(report: SynthesisReport) -> dict:
    return {
        "polynomial": str(report.input),
        "degree": report.degree,
        "shift_k": report.shift_k,
        "difference_values": list(report.difference_values),
        **system_to_json(report.system),
    }


def _word_text(names) -> str:
    return " ".join(names) if names else "ε"


def report_to_text(report: SynthesisReport) -> str:
    S = report.system
    lines = [
        f"polynomial: {report.input}",
        f"degree: {report.degree}",
        f"shift_k: {report.shift_k}",
        f"difference_values: {' '.join(map(str, report.difference_values))}",
        f"alphabet: {' '.join(S.names)}",
        f"axiom: {_word_text(S.spell(S.axiom))}",
        "rules:",
    ]
    lines += [f"{name} -> {_word_text(S.rule(name))}" for name in S.names]
    return "\n".join(lines)
