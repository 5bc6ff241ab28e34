"""Role-map sidecar files: one ``index role`` line per vertex."""
from __future__ import annotations


def dump_roles(roles: list[str]) -> str:
    for r in roles:
        if not r or any(ch.isspace() for ch in r):
            raise ValueError(f"role {r!r} must be a non-empty token without whitespace")
    return "".join(f"{i} {r}\n" for i, r in enumerate(roles))


def load_roles(text: str) -> list[str]:
    out: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        idx, _, role = line.partition(" ")
        if not idx.isdigit() or int(idx) != len(out) or not role.strip():
            raise ValueError(f"line {lineno}: expected '{len(out)} <role>'")
        out.append(role.strip())
    return out
