"""Operad structure on Latin operations: substitution composition,
symmetric-group actions on argument slots, the unit, and a
machine-checkable axiom verifier.

Action convention: (sigma . f)(x_1..x_d) = f(x_{sigma(1)}, .., x_{sigma(d)}),
a left action for the composition (sigma tau)(k) = sigma(tau(k)).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import LatinOp, RawOp, ValidationError, encode, is_latin


@dataclass(frozen=True)
class SlotPermutation:
    """A bijection of the argument slots {1..d}, in one-line notation."""

    d: int
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if self.d < 1 or len(self.perm) != self.d or sorted(self.perm) != list(
            range(1, self.d + 1)
        ):
            raise ValidationError(
                f"{self.perm} is not a permutation of 1..{self.d}"
            )

    @classmethod
    def identity(cls, d: int) -> "SlotPermutation":
        return cls(d, tuple(range(1, d + 1)))

    def __call__(self, k: int) -> int:
        return self.perm[k - 1]

    def compose(self, other: "SlotPermutation") -> "SlotPermutation":
        """self after other: (self.compose(other))(k) = self(other(k))."""
        if self.d != other.d:
            raise ValidationError("degree mismatch in permutation composition")
        return SlotPermutation(self.d, tuple(self(other(k)) for k in range(1, self.d + 1)))

    def inverse(self) -> "SlotPermutation":
        inv = [0] * self.d
        for k in range(1, self.d + 1):
            inv[self(k) - 1] = k
        return SlotPermutation(self.d, tuple(inv))


def unit(n: int) -> LatinOp:
    """The identity map, the degree-1 operad unit."""
    return LatinOp(n, 1, tuple(range(n)))


def _compose_table(n, d, ftab, e, gtab, i):
    """Raw table of f composed with g substituted into slot i (1-based)."""
    npre = n ** (i - 1)
    ne = n ** e
    nsuf = n ** (d - i)
    out = [0] * (npre * ne * nsuf)
    for a in range(npre):
        abase = a * n
        for b in range(ne):
            frow = (abase + gtab[b]) * nsuf
            obase = (a * ne + b) * nsuf
            out[obase:obase + nsuf] = ftab[frow:frow + nsuf]
    return tuple(out)


def compose_at(f: LatinOp, g: LatinOp, i: int) -> LatinOp:
    """The substitution composition f o_i g, of degree d + e - 1."""
    if f.n != g.n:
        raise ValidationError(f"carrier mismatch: {f.n} != {g.n}")
    if not 1 <= i <= f.d:
        raise ValidationError(f"slot {i} out of range 1..{f.d}")
    table = _compose_table(f.n, f.d, f.table, g.d, g.table, i)
    return LatinOp(f.n, f.d + g.d - 1, table)


def _act_table(perm, n, d, table):
    out = [0] * len(table)
    for idx, args in enumerate(itertools.product(range(n), repeat=d)):
        out[idx] = table[encode((args[perm[k] - 1] for k in range(d)), n)]
    return tuple(out)


def act(sigma: SlotPermutation, f: LatinOp) -> LatinOp:
    """(sigma . f)(x_1..x_d) = f(x_{sigma(1)}, .., x_{sigma(d)})."""
    if sigma.d != f.d:
        raise ValidationError(f"degree mismatch: {sigma.d} != {f.d}")
    return LatinOp(f.n, f.d, _act_table(sigma.perm, f.n, f.d, f.table))


def compose_perm_at(sigma: SlotPermutation, tau: SlotPermutation, i: int) -> SlotPermutation:
    """Substitution composition of slot permutations (associative operad).

    The letter i of sigma expands to the run i..i+e-1, permuted within
    the run by tau; letters above i shift up by e-1.
    """
    d, e = sigma.d, tau.d
    if not 1 <= i <= d:
        raise ValidationError(f"slot {i} out of range 1..{d}")
    j0 = sigma.perm.index(i) + 1

    def relabel(v):
        return v if v < i else v + e - 1

    out = []
    for k in range(1, d + e):
        if k < j0:
            out.append(relabel(sigma(k)))
        elif k < j0 + e:
            out.append(i - 1 + tau(k - j0 + 1))
        else:
            out.append(relabel(sigma(k - e + 1)))
    return SlotPermutation(d + e - 1, tuple(out))


def block_permutation(sigma: SlotPermutation, i: int, e: int) -> SlotPermutation:
    """sigma with its letter i replaced by a block of e letters moved as a unit."""
    if e < 1:
        raise ValidationError(f"block degree must be >= 1, got {e}")
    return compose_perm_at(sigma, SlotPermutation.identity(e), i)


def embed_permutation(tau: SlotPermutation, i: int, d: int) -> SlotPermutation:
    """tau acting on the slot block i..i+e-1 inside degree d+e-1, fixing the rest."""
    return compose_perm_at(SlotPermutation.identity(d), tau, i)


@dataclass
class AxiomResult:
    axiom: str
    checks: int = 0
    passed: bool = True
    witness: str | None = None

    def fail(self, witness: str) -> None:
        if self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class OperadReport:
    n: int
    max_degree: int
    exhaustive: dict = field(default_factory=dict)
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self):
        for r in self.results:
            status = "pass" if r.passed else "fail"
            line = f"{r.axiom}: {status} ({r.checks} checks)"
            if r.witness:
                line += f" witness: {r.witness}"
            yield line


def _pools(n, max_degree, sample_budget, seed):
    from .enumeration import enumerate_all, random_latin

    pools = {}
    exhaustive = {}
    for deg in range(1, max_degree + 1):
        ops = []
        full = True
        for op in enumerate_all(n, deg):
            ops.append(op)
            if len(ops) > sample_budget:
                full = False
                break
        if not full:
            ops = [random_latin(n, deg, seed + 7919 * k) for k in range(sample_budget)]
        pools[deg] = ops
        exhaustive[deg] = full
    return pools, exhaustive


def verify_operad_axioms(
    n: int, max_degree: int, sample_budget: int = 200, seed: int = 0
) -> OperadReport:
    """Check the operad axioms on Latin operations over order n.

    Per degree up to max_degree the operand pool is exhaustive when the
    number of Latin operations fits in sample_budget, and a sampled set
    of that size otherwise.  Axioms checked: closure of o_i, sequential
    and parallel associativity, unit laws, and slot-permutation
    equivariance (outer and inner).  Failures are reported with a
    witness, not raised.
    """
    pools, exhaustive = _pools(n, max_degree, sample_budget, seed)
    report = OperadReport(n=n, max_degree=max_degree, exhaustive=exhaustive)
    allops = [op for deg in sorted(pools) for op in pools[deg]]

    closure = AxiomResult("closure")
    for f in allops:
        for g in allops:
            for i in range(1, f.d + 1):
                closure.checks += 1
                tab = _compose_table(n, f.d, f.table, g.d, g.table, i)
                if not is_latin(RawOp(n, f.d + g.d - 1, tab)):
                    closure.fail(f"f={f.table} g={g.table} i={i}")
    report.results.append(closure)

    seq = AxiomResult("sequential-associativity")
    par = AxiomResult("parallel-associativity")
    for f in allops:
        for g in allops:
            for h in allops:
                d, e, e2 = f.d, g.d, h.d
                for i in range(1, d + 1):
                    fg = _compose_table(n, d, f.table, e, g.table, i)
                    # (f o_i g) o_{i-1+j} h == f o_i (g o_j h)
                    for j in range(1, e + 1):
                        seq.checks += 1
                        lhs = _compose_table(n, d + e - 1, fg, e2, h.table, i - 1 + j)
                        gh = _compose_table(n, e, g.table, e2, h.table, j)
                        rhs = _compose_table(n, d, f.table, e + e2 - 1, gh, i)
                        if lhs != rhs:
                            seq.fail(
                                f"f={f.table} g={g.table} h={h.table} i={i} j={j}"
                            )
                    # (f o_i g) o_{k+e-1} h == (f o_k h) o_i g for i < k <= d
                    for k in range(i + 1, d + 1):
                        par.checks += 1
                        lhs = _compose_table(n, d + e - 1, fg, e2, h.table, k + e - 1)
                        fh = _compose_table(n, d, f.table, e2, h.table, k)
                        rhs = _compose_table(n, d + e2 - 1, fh, e, g.table, i)
                        if lhs != rhs:
                            par.fail(
                                f"f={f.table} g={g.table} h={h.table} i={i} k={k}"
                            )
    report.results.append(seq)
    report.results.append(par)

    unit_ax = AxiomResult("unit")
    e_tab = tuple(range(n))
    for f in allops:
        for i in range(1, f.d + 1):
            unit_ax.checks += 1
            if _compose_table(n, f.d, f.table, 1, e_tab, i) != f.table:
                unit_ax.fail(f"f={f.table} i={i} (right unit)")
        unit_ax.checks += 1
        if _compose_table(n, 1, e_tab, f.d, f.table, 1) != f.table:
            unit_ax.fail(f"f={f.table} (left unit)")
    report.results.append(unit_ax)

    equi = AxiomResult("equivariance")
    for f in allops:
        d = f.d
        sigmas = [SlotPermutation(d, p) for p in itertools.permutations(range(1, d + 1))]
        for g in allops:
            e = g.d
            taus = [SlotPermutation(e, p) for p in itertools.permutations(range(1, e + 1))]
            for sigma in sigmas:
                sf = _act_table(sigma.perm, n, d, f.table)
                inv = sigma.inverse()
                for k in range(1, d + 1):
                    # outer: act(sigma,f) o_k g == act(block(sigma,k,e), f o_{sigma^-1(k)} g)
                    equi.checks += 1
                    lhs = _compose_table(n, d, sf, e, g.table, k)
                    base = _compose_table(n, d, f.table, e, g.table, inv(k))
                    pi = block_permutation(sigma, k, e)
                    if lhs != _act_table(pi.perm, n, d + e - 1, base):
                        equi.fail(f"outer f={f.table} g={g.table} sigma={sigma.perm} k={k}")
            for tau in taus:
                tg = _act_table(tau.perm, n, e, g.table)
                for i in range(1, d + 1):
                    # inner: f o_i act(tau,g) == act(embed(tau,i,d), f o_i g)
                    equi.checks += 1
                    lhs = _compose_table(n, d, f.table, e, tg, i)
                    base = _compose_table(n, d, f.table, e, g.table, i)
                    pi = embed_permutation(tau, i, d)
                    if lhs != _act_table(pi.perm, n, d + e - 1, base):
                        equi.fail(f"inner f={f.table} g={g.table} tau={tau.perm} i={i}")
    report.results.append(equi)
    return report
