"""Exhaustive model checking of generator claims on the group Z/9 x Z/3.

An action of the dihedral pair (sigma of order 3, tau of order 2) on the
abelian group G = Z/9 x Z/3 is a pair of endomorphisms.  The harness
enumerates every pair satisfying a configurable constraint set, then
evaluates each structural claim (ambiguous subgroup, eigencomponents,
principal genus, generator statements) exactly in every surviving model.
Claims are reported with witnesses, never asserted: the point of the
harness is to see which constraints force which conclusions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple


@dataclass(frozen=True, order=True)
class Elem93:
    """An element (x mod 9, y mod 3) of Z/9 x Z/3, written additively."""

    x: int
    y: int

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % 9)
        object.__setattr__(self, "y", self.y % 3)

    def __add__(self, other: "Elem93") -> "Elem93":
        return Elem93(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "Elem93":
        return Elem93(-self.x, -self.y)

    def scale(self, k: int) -> "Elem93":
        return Elem93(k * self.x, k * self.y)

    def order(self) -> int:
        for n in (1, 3, 9):
            if (self.x * n) % 9 == 0 and (self.y * n) % 3 == 0:
                return n
        raise AssertionError


ZERO93 = Elem93(0, 0)
E1 = Elem93(1, 0)
E2 = Elem93(0, 1)
ALL_ELEMS: Tuple[Elem93, ...] = tuple(Elem93(x, y) for x in range(9) for y in range(3))


def span(gens: Iterable[Elem93]) -> FrozenSet[Elem93]:
    out = {ZERO93}
    frontier = [ZERO93]
    gl = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gl:
                s = g + h
                if s not in out:
                    out.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(out)


@dataclass(frozen=True, order=True)
class Endo93:
    """Endomorphism of Z/9 x Z/3 given by generator images.

    Well-definedness requires 3 * image(e2) = 0, i.e. the x-component of
    e2_img lies in {0, 3, 6}.
    """

    e1_img: Elem93
    e2_img: Elem93

    def __post_init__(self):
        if self.e2_img.x % 3 != 0:
            raise ValueError("image of e2 must be killed by 3")

    def apply(self, g: Elem93) -> Elem93:
        return self.e1_img.scale(g.x) + self.e2_img.scale(g.y)

    def compose(self, other: "Endo93") -> "Endo93":
        return Endo93(self.apply(other.e1_img), self.apply(other.e2_img))

    def is_automorphism(self) -> bool:
        return len({self.apply(g) for g in ALL_ELEMS}) == 27


IDENTITY93 = Endo93(E1, E2)


def all_endos() -> List[Endo93]:
    out = []
    for e1 in ALL_ELEMS:
        for e2 in ALL_ELEMS:
            if e2.x % 3 == 0:
                out.append(Endo93(e1, e2))
    return out


@dataclass(frozen=True)
class ModelConstraints:
    """Toggleable consistency constraints; the default set enables all."""

    sigma_cubed_identity: bool = True
    tau_squared_identity: bool = True
    automorphisms: bool = True
    dihedral_relation: bool = True  # tau sigma tau = sigma^2
    norm_annihilates: bool = True  # 1 + sigma + sigma^2 = 0
    ambiguous_order_3: bool = True  # |ker(sigma - 1)| = 3
    cplus_cyclic_9: bool = True
    cminus_order_3: bool = True
    csigma_in_cplus: bool = True
    csigma_meets_cminus_trivially: bool = True


@dataclass(frozen=True)
class GaloisModel:
    sigma: Endo93
    tau: Endo93
    cplus: FrozenSet[Elem93]  # ker(tau - 1)
    cminus: FrozenSet[Elem93]  # ker(tau + 1)
    csigma: FrozenSet[Elem93]  # ker(sigma - 1)
    genus: FrozenSet[Elem93]  # im(1 - sigma)
    s_invariant: int

    def encoding(self) -> Tuple[int, ...]:
        return (
            self.sigma.e1_img.x, self.sigma.e1_img.y,
            self.sigma.e2_img.x, self.sigma.e2_img.y,
            self.tau.e1_img.x, self.tau.e1_img.y,
            self.tau.e2_img.x, self.tau.e2_img.y,
        )


def _one_minus(phi: Endo93) -> Endo93:
    return Endo93(E1 + (-phi.e1_img), E2 + (-phi.e2_img))


def _image(phi: Endo93) -> FrozenSet[Elem93]:
    return frozenset(phi.apply(g) for g in ALL_ELEMS)


def _s_invariant(sigma: Endo93, csigma: FrozenSet[Elem93]) -> int:
    """Largest s with ker(sigma-1) contained in im((1-sigma)^(s-1))."""
    one_minus = _one_minus(sigma)
    power = IDENTITY93
    s = 0
    while True:
        if not csigma <= _image(power):
            return s
        s += 1
        power = one_minus.compose(power)
        if s > 27:  # images stabilize long before this
            raise AssertionError("s-invariant did not terminate")


def _derive(sigma: Endo93, tau: Endo93) -> GaloisModel:
    cplus = frozenset(g for g in ALL_ELEMS if tau.apply(g) == g)
    cminus = frozenset(g for g in ALL_ELEMS if tau.apply(g) == -g)
    csigma = frozenset(g for g in ALL_ELEMS if sigma.apply(g) == g)
    genus = _image(_one_minus(sigma))
    return GaloisModel(sigma, tau, cplus, cminus, csigma, genus,
                       _s_invariant(sigma, csigma))


def _is_cyclic(sub: FrozenSet[Elem93]) -> bool:
    n = len(sub)
    return any(g.order() == n for g in sub)


def verify_model(m: GaloisModel, c: ModelConstraints) -> bool:
    """Element-by-element re-check of every toggled constraint.

    Deliberately independent of the shortcuts used during enumeration.
    """
    s, t = m.sigma, m.tau
    if c.sigma_cubed_identity:
        for g in ALL_ELEMS:
            if s.apply(s.apply(s.apply(g))) != g:
                return False
    if c.tau_squared_identity:
        for g in ALL_ELEMS:
            if t.apply(t.apply(g)) != g:
                return False
    if c.automorphisms and not (s.is_automorphism() and t.is_automorphism()):
        return False
    if c.dihedral_relation:
        for g in ALL_ELEMS:
            if t.apply(s.apply(t.apply(g))) != s.apply(s.apply(g)):
                return False
    if c.norm_annihilates:
        for g in ALL_ELEMS:
            if g + s.apply(g) + s.apply(s.apply(g)) != ZERO93:
                return False
    if c.ambiguous_order_3 and len(m.csigma) != 3:
        return False
    if c.cplus_cyclic_9 and not (len(m.cplus) == 9 and _is_cyclic(m.cplus)):
        return False
    if c.cminus_order_3 and len(m.cminus) != 3:
        return False
    if c.csigma_in_cplus and not m.csigma <= m.cplus:
        return False
    if c.csigma_meets_cminus_trivially and m.csigma & m.cminus != {ZERO93}:
        return False
    return True


def enumerate_models(constraints: Optional[ModelConstraints] = None) -> List[GaloisModel]:
    """All consistent (sigma, tau) pairs, sorted by canonical encoding."""
    c = constraints if constraints is not None else ModelConstraints()
    endos = all_endos()

    def sigma_ok(s: Endo93) -> bool:
        if c.sigma_cubed_identity and s.compose(s).compose(s) != IDENTITY93:
            return False
        if c.automorphisms and not s.is_automorphism():
            return False
        if c.norm_annihilates:
            s2 = s.compose(s)
            for g in (E1, E2):  # additive identities extend from generators
                if g + s.apply(g) + s2.apply(g) != ZERO93:
                    return False
        if c.ambiguous_order_3:
            if sum(1 for g in ALL_ELEMS if s.apply(g) == g) != 3:
                return False
        return True

    def tau_ok(t: Endo93) -> bool:
        if c.tau_squared_identity and t.compose(t) != IDENTITY93:
            return False
        if c.automorphisms and not t.is_automorphism():
            return False
        if c.cplus_cyclic_9:
            fix = frozenset(g for g in ALL_ELEMS if t.apply(g) == g)
            if not (len(fix) == 9 and _is_cyclic(fix)):
                return False
        if c.cminus_order_3:
            if sum(1 for g in ALL_ELEMS if t.apply(g) == -g) != 3:
                return False
        return True

    sigmas = [s for s in endos if sigma_ok(s)]
    taus = [t for t in endos if tau_ok(t)]
    out = []
    for s in sigmas:
        s2 = s.compose(s)
        for t in taus:
            if c.dihedral_relation and t.compose(s).compose(t) != s2:
                continue
            m = _derive(s, t)
            if c.csigma_in_cplus and not m.csigma <= m.cplus:
                continue
            if c.csigma_meets_cminus_trivially and m.csigma & m.cminus != {ZERO93}:
                continue
            # double-entry: the independent checker must agree
            if not verify_model(m, c):
                raise AssertionError("enumeration filter and verifier disagree")
            out.append(m)
    out.sort(key=GaloisModel.encoding)
    return out


EXPLICIT_MODEL_ENCODING = (1, 2, 3, 1, 1, 0, 3, 2)


def explicit_model() -> GaloisModel:
    """The arithmetic model: G realized as classes with sigma acting like
    multiplication by a primitive cube root of unity and tau like complex
    conjugation."""
    sigma = Endo93(Elem93(1, 2), Elem93(3, 1))
    tau = Endo93(Elem93(1, 0), Elem93(3, 2))
    return _derive(sigma, tau)


def _order9_generators(cplus: FrozenSet[Elem93]) -> List[Elem93]:
    return sorted(g for g in cplus if g.order() == 9)


def check_prop_claims(m: GaloisModel) -> Dict[str, bool]:
    """Exact evaluation of the ambiguous-subgroup / genus claims.

    Claim (iv) is printed with exponent sigma-1 in the source statement
    but used as 1-sigma in its proof, and its generator A is pinned
    arithmetically rather than group-theoretically; all four readings
    (each exponent, universally or existentially quantified over A) are
    evaluated separately.
    """
    sigma = m.sigma
    one_minus = _one_minus(sigma)
    gens9 = _order9_generators(m.cplus)
    cminus_gens = [g for g in m.cminus if g != ZERO93]

    claims: Dict[str, bool] = {}
    claims["i_csigma_in_cplus"] = m.csigma <= m.cplus
    claims["ii_csigma_is_cube_of_any_cplus_generator"] = bool(gens9) and all(
        span([a.scale(3)]) == m.csigma for a in gens9
    )
    claims["iii_csigma_from_any_cminus_generator"] = bool(cminus_gens) and all(
        span([one_minus.apply(b)]) == m.csigma for b in cminus_gens
    )

    def minus_one_reading(a: Elem93) -> Elem93:
        return sigma.apply(a.scale(2)) + (-a.scale(2))

    def one_minus_reading(a: Elem93) -> Elem93:
        return one_minus.apply(a.scale(2))

    for label, f in (("sigma_minus_1", minus_one_reading), ("1_minus_sigma", one_minus_reading)):
        hits = [span([f(a)]) == m.cminus for a in gens9]
        claims[f"iv_{label}_forall_A"] = bool(hits) and all(hits)
        claims[f"iv_{label}_exists_A"] = any(hits)

    prod = span(list(m.csigma) + list(m.cminus))
    claims["v_genus_is_csigma_times_cminus_type_3_3"] = (
        m.genus == prod
        and len(m.genus) == 9
        and all(g.scale(3) == ZERO93 for g in m.genus)
    )
    claims["vi_s_equals_3"] = m.s_invariant == 3
    return claims


@dataclass(frozen=True, order=True)
class Frame:
    """A tau-fixed order-9 class X with its sigma-orbit Y, W; X+Y+W = 0."""

    X: Elem93
    Y: Elem93
    W: Elem93


def enumerate_frames(m: GaloisModel) -> List[Frame]:
    out = []
    for x in sorted(ALL_ELEMS):
        if x.order() != 9 or m.tau.apply(x) != x:
            continue
        y = m.sigma.apply(x)
        w = m.sigma.apply(y)
        # forced by 1 + sigma + sigma^2 = 0, but verified rather than assumed
        if x + y + w != ZERO93:
            continue
        out.append(Frame(x, y, w))
    return out


def check_theorem_claims(m: GaloisModel, f: Frame) -> Dict[str, bool]:
    """The main generator claims and their corollary companions, in a frame."""
    x, y, w = f.X, f.Y, f.W
    xy2 = x + y.scale(2)
    whole = frozenset(ALL_ELEMS)
    c3 = {
        "a_X_generates_cplus": x.order() == 9 and span([x]) == m.cplus,
        "b_XY2_order_3_in_cminus": xy2.order() == 3 and xy2 in m.cminus,
        "c_X_and_XY2_generate_group": span([x, xy2]) == whole,
        "cor5_Y_and_YW2_generate_group": span([y, y + w.scale(2)]) == whole,
        "cor6_csigma_is_cubes": (
            span([x.scale(3)]) == m.csigma
            and span([y.scale(3)]) == m.csigma
            and span([w.scale(3)]) == m.csigma
        ),
        "cor7_genus_from_X3_and_XY2": span([x.scale(3), xy2]) == m.genus,
    }
    return c3


@dataclass(frozen=True)
class ClaimStatus:
    status: str  # "holds-universally" | "holds-in-some" | "fails-universally"
    holding: int
    failing: int
    witness_holds: Optional[Tuple[int, ...]]
    witness_fails: Optional[Tuple[int, ...]]


@dataclass(frozen=True)
class ClaimReport:
    constraints: ModelConstraints
    model_count: int
    frame_counts: Tuple[int, ...]
    prop_claims: Dict[str, ClaimStatus]
    theorem_claims: Dict[str, ClaimStatus]
    explicit_model_present: bool


def _status(results: List[Tuple[bool, Tuple[int, ...]]]) -> ClaimStatus:
    holding = sum(1 for ok, _ in results if ok)
    failing = len(results) - holding
    wh = next((enc for ok, enc in results if ok), None)
    wf = next((enc for ok, enc in results if not ok), None)
    if failing == 0 and holding > 0:
        status = "holds-universally"
    elif holding == 0:
        status = "fails-universally"
    else:
        status = "holds-in-some"
    return ClaimStatus(status, holding, failing, wh, wf)


def full_report(constraints: Optional[ModelConstraints] = None) -> ClaimReport:
    c = constraints if constraints is not None else ModelConstraints()
    models = enumerate_models(c)
    prop_results: Dict[str, List[Tuple[bool, Tuple[int, ...]]]] = {}
    thm_results: Dict[str, List[Tuple[bool, Tuple[int, ...]]]] = {}
    frame_counts = []
    explicit_present = False
    for m in models:
        enc = m.encoding()
        if enc == EXPLICIT_MODEL_ENCODING:
            explicit_present = True
        for name, ok in check_prop_claims(m).items():
            prop_results.setdefault(name, []).append((ok, enc))
        frames = enumerate_frames(m)
        frame_counts.append(len(frames))
        for f in frames:
            fenc = enc + (f.X.x, f.X.y)
            for name, ok in check_theorem_claims(m, f).items():
                thm_results.setdefault(name, []).append((ok, fenc))
    return ClaimReport(
        constraints=c,
        model_count=len(models),
        frame_counts=tuple(frame_counts),
        prop_claims={k: _status(v) for k, v in sorted(prop_results.items())},
        theorem_claims={k: _status(v) for k, v in sorted(thm_results.items())},
        explicit_model_present=explicit_present,
    )
