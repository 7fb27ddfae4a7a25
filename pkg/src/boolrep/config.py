"""Enumeration caps.

Every brute-force routine takes an explicit bound and raises
:class:`~boolrep.errors.CapExceeded` instead of running unbounded. Defaults
can be overridden with the ``BOOLREP_CAP`` environment variable, either a
bare integer (sets ``congruences``) or ``name=value`` pairs separated by
commas, e.g. ``BOOLREP_CAP="congruences=12,jprime=8"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "BOOLREP_CAP"


@dataclass(frozen=True)
class Caps:
    # |M| for congruence enumeration (Bell-number growth)
    congruences: int = 10
    # |M| for submodule enumeration
    submodules: int = 64
    # |sji(M)| for decomposition enumeration
    decompositions: int = 20
    # |S| for the semigroup-congruence oracle
    jprime: int = 7
    # number of endomorphisms in a span closure
    span: int = 1 << 16
    # |B| for the free module on the L-classes of a J-class
    free_rank: int = 12
    # number of candidate maps examined by homomorphism search
    homomorphisms: int = 1 << 20
    # sections enumerated by the min-character oracle
    sections: int = 100_000

    def with_overrides(self, spec: str | None) -> "Caps":
        if not spec:
            return self
        spec = spec.strip()
        if spec.isdigit():
            return replace(self, congruences=int(spec))
        known = {f.name for f in fields(self)}
        updates = {}
        for part in spec.split(","):
            name, _, value = part.partition("=")
            name = name.strip()
            if name not in known or not value.strip().isdigit():
                raise ValueError(f"bad cap override {part!r}")
            updates[name] = int(value)
        return replace(self, **updates)


def default_caps() -> Caps:
    return Caps().with_overrides(os.environ.get(ENV_VAR))
