"""Named verification suites, shared by ``cofin check`` and the acceptance tests.

Each suite returns a report ``{"suite", "status", "seconds", "checks": [...]}``
where every check is ``{"name", "status", "count"?, "detail"?}``.  Checks
compare the symbolic decision procedures against independent evidence:
brute-force enumeration, membership tests, pointwise evaluation, or
explicit witnesses.
"""

from __future__ import annotations

import random
import time
from typing import Callable

from cofin import filt, finoracle as fo, omega
from cofin.corpus import filter_member, random_filter, random_ideal
from cofin.emonoid import (
    DOUBLING, EMap, FinallyInjective, atomic_complete, compose,
    compose_all, factor_sigma, idempotent, monotone_part, monotonize,
    retraction, sigma, split_L,
)
from cofin.sampling import (
    random_emap, random_finite_set, random_frag_map,
    random_infinite, random_upset,
)
from cofin.upset import (
    EVENS, NATURALS, ODDS, UpSet, classify, complement, select,
    split_alternate, stabilization_window, subset,
)

DEFAULT_SEED = 20240601


class Suite:
    """Collects named checks and renders them as a report."""

    def __init__(self, name: str):
        self.name = name
        self.checks: list[dict] = []
        self.started = time.perf_counter()

    def record(self, name: str, ok: bool, count: int | None = None,
               detail: str | None = None) -> bool:
        rec = {"name": name, "status": "pass" if ok else "fail"}
        if count is not None:
            rec["count"] = count
        if detail is not None:
            rec["detail"] = detail
        self.checks.append(rec)
        return ok

    def tally(self, name: str, cases, test: Callable) -> bool:
        """Run ``test`` on every case; record the first failure, if any."""
        n = 0
        for case in cases:
            n += 1
            if not test(case):
                return self.record(name, False, n, f"failed on {case!r}")
        return self.record(name, True, n)

    def report(self) -> dict:
        ok = all(c["status"] == "pass" for c in self.checks)
        return {"suite": self.name, "status": "pass" if ok else "fail",
                "seconds": round(time.perf_counter() - self.started, 3),
                "checks": self.checks}


def _window_points(*sets: UpSet) -> range:
    return range(stabilization_window(*sets))


# -- criterion 1 ------------------------------------------------------------


def clu1(n: int) -> dict:
    s = Suite(f"clu1 {n}")
    for rec in fo.clu1_check(fo.FinUniverse(n)):
        s.record(rec["item"], rec["status"] == "pass", detail=rec.get("counterexample"))
    return s.report()


def finite_universe(sizes=(1, 2, 3, 4)) -> dict:
    s = Suite("finite")
    for n in sizes:
        u = fo.FinUniverse(n)
        filters = fo.all_filters(u)
        s.record(f"n={n} filter count 2^n", len(filters) == 2 ** n, len(filters))
        principal = {fo.up(u, a) for a in u.masks()}
        s.record(f"n={n} every filter principal", set(filters) == principal)
        pairs = [(f, g) for f in filters for g in filters]
        s.tally(f"n={n} heyting formula = brute force", pairs,
                lambda fg: fo.heyting_formula(*fg) == fo.heyting_bruteforce(*fg))
        for rec in fo.clu1_check(u):
            s.record(f"n={n} {rec['item']}", rec["status"] == "pass",
                     detail=rec.get("counterexample"))
    u3 = fo.FinUniverse(3)
    s.record("interior of nonempty sets is {X} (n=3)",
             fo.interior(fo.meets(u3, u3.full)) == fo.up(u3, u3.full))
    return s.report()


# -- criterion 2 ------------------------------------------------------------


def acont(corpus_size: int = 210, seed: int = DEFAULT_SEED, queries: int = 100) -> dict:
    rng = random.Random(seed)
    s = Suite(f"acont {corpus_size}")
    per_kind = max(50, corpus_size // 3)
    corpus = [random_upset(rng, kind) for kind in ("finite", "cofinite", "split")
              for _ in range(per_kind)]
    while len(corpus) < corpus_size:
        corpus.append(random_upset(rng))
    kinds = [classify(a).kind for a in corpus]
    s.record("corpus composition", len(corpus) >= 200
             and all(kinds.count(k) >= 50 for k in ("finite", "cofinite", "split")),
             len(corpus))
    s.tally("finite iff content empty", corpus,
            lambda a: omega.content(a).is_empty == a.is_finite)

    def decide(a: UpSet) -> bool:
        ideal = omega.content(a)
        d = omega.is_dense(ideal)
        if d.dense != a.is_cofinite:
            return False
        if not d.dense:
            w = d.witness
            return (omega.action(w, ideal).is_empty and (w.image & a).is_finite
                    and not omega.member(w, ideal) if not ideal.is_empty else True)
        for _ in range(queries):
            u = random_emap(rng)
            if not omega.member(compose(u, d.response(u)), ideal):
                return False
        return True

    s.tally("cofinite iff content dense (with evidence)", corpus, decide)
    return s.report()


# -- criterion 3 ------------------------------------------------------------


def ldn(seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    s = Suite("ldn")

    def splits(u: EMap) -> bool:
        v, w = split_L(u)
        if not (v.in_L and w.in_L and compose(v, w) == u):
            return False
        return all(v(w(k)) == u(k) for k in _window_points(u.image, v.image, w.image))

    s.tally("L is idempotent: u = v∘w with v, w in L",
            [random_emap(rng, "L") for _ in range(200)], splits)

    probes = [random_emap(rng) for _ in range(100)]

    def action_is_L(u: EMap) -> bool:
        act = omega.action(u, omega.L_IDEAL)
        return act == omega.L_IDEAL and all(
            omega.member(p, act) == p.in_L == compose(u, p).in_L for p in probes)

    s.tally("<u in L> = L for u in F (100 probes)",
            [random_emap(rng, "F") for _ in range(50)], action_is_L)

    d = omega.is_dense(omega.L_IDEAL)
    s.record("L is dense", d.dense)
    s.tally("densify responses land in L",
            [random_emap(rng) for _ in range(200)],
            lambda q: compose(q, d.response(q)).in_L)
    return s.report()


# -- criterion 4 ------------------------------------------------------------


def sigma_example(seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    s = Suite("sigma")
    sig = omega.principal_of(sigma())
    s.tally("(σ) = {u : u(0) != 0}", [random_emap(rng) for _ in range(100)],
            lambda u: omega.member(u, sig) == (u(0) != 0))
    s.record("¬¬(σ) = E", omega.double_negate(sig) == omega.WHOLE)
    s.record("L ⊆ ¬¬(σ)", omega.subideal(omega.L_IDEAL, omega.double_negate(sig)))
    w = omega.separating_witness(omega.L_IDEAL, sig)
    s.record("L ⊄ (σ), witness u(2k..)",
             not omega.subideal(omega.L_IDEAL, sig) and w == DOUBLING
             and omega.member(w, omega.L_IDEAL) and not omega.member(w, sig),
             detail=str(w))
    return s.report()


# -- criterion 5 ------------------------------------------------------------


def extcof(seed: int = DEFAULT_SEED, count: int = 200) -> dict:
    rng = random.Random(seed)
    s = Suite("extcof")
    ideals = [random_ideal(rng) for _ in range(count)]
    dense = sum(omega.is_dense(i).dense for i in ideals)
    s.tally("dense implies extended", ideals,
            lambda i: not omega.is_dense(i).dense or omega.is_extended(i))
    s.record("corpus mixes dense and non-dense", 0 < dense < count,
             detail=f"{dense} dense of {count}")
    alm = omega.almost(EVENS)
    d = omega.is_dense(alm)
    s.record("Alm(2k..) is extended", omega.is_extended(alm)
             and omega.extent(alm) == NATURALS)
    s.record("Alm(2k..) is not dense (witness u(2k+1..))",
             not d.dense and d.witness == EMap(ODDS)
             and omega.action(d.witness, alm).is_empty)
    return s.report()


# -- criterion 6 ------------------------------------------------------------


def fdn(seed: int = DEFAULT_SEED, count: int = 100, samples: int = 50) -> dict:
    rng = random.Random(seed)
    s = Suite("fdn")
    reports = [omega.fdn_check(random_ideal(rng), rng, samples) for _ in range(count)]
    s.tally("fdn conditions agree with density", reports, lambda r: r["agrees"])
    s.record("sampled both verdicts",
             any(r["dense"] for r in reports) and not all(r["dense"] for r in reports))
    return s.report()


# -- criterion 7 ------------------------------------------------------------


def _filter_rules(s: Suite, rng: random.Random, n: int) -> None:
    cases = [(random_filter(rng), random_filter(rng)) for _ in range(n)]

    def meet_ok(fg):
        f, g = fg
        m = filt.meet(f, g)
        ws = [filter_member(rng, f), filter_member(rng, g), random_upset(rng)]
        return all(filt.member(w, m) == (filt.member(w, f) and filt.member(w, g)) for w in ws)

    def join_ok(fg):
        f, g = fg
        for w in (filter_member(rng, f) & filter_member(rng, g),
                  filter_member(rng, f), random_upset(rng)):
            pair = filt.join_witness(w, f, g)
            if pair is not None:
                a, b = pair
                if not (filt.member(a, f) and filt.member(b, g) and subset(a & b, w)):
                    return False
                continue
            z = filt.join_obstruction(w, f, g)
            if not (z & w).is_empty or z.is_empty:
                return False
            if z.is_finite:
                x = UpSet.cofinite(z)
                if filt.member(x, f) or filt.member(x, g):
                    return False
            else:
                for y in (z, *split_alternate(z)):
                    if filt.member(complement(y), f) or filt.member(complement(y), g):
                        return False
        return True

    def sub_ok(fg):
        f, g = fg
        w = filt.subfilter_witness(f, g)
        if w is None:
            return all(filt.member(filter_member(rng, f), g) for _ in range(8))
        return filt.member(w, f) and not filt.member(w, g)

    def impl_ok(fg):
        f, g = fg
        for b in (random_upset(rng), filter_member(rng, g), complement(f.P)):
            u = filt.implication_counterexample(b, f, g)
            if u is None:
                if not all(filt.member(b | filter_member(rng, f), g) for _ in range(6)):
                    return False
            elif not (filt.member(u, f) and not filt.member(b | u, g)):
                return False
        return True

    s.tally("filter meet rule", cases, meet_ok)
    s.tally("filter join rule (witness/obstruction)", cases, join_ok)
    s.tally("filter inclusion rule (witness)", cases, sub_ok)
    s.tally("filter implication rule (counterexample)", cases, impl_ok)


def _ideal_probes(rng: random.Random, ideal: omega.Ideal, k: int = 8) -> list[EMap]:
    if ideal.is_empty:
        return []
    tops = []
    for kind, a in ideal.generators:
        tops.append(EMap(a))
        if kind == "Alm":
            tops.append(EMap(a | random_finite_set(rng)))
    return tops + [omega.sample_member(ideal, rng) for _ in range(k)]


def _ideal_rules(s: Suite, rng: random.Random, n: int) -> None:
    cases = [(random_ideal(rng), random_ideal(rng)) for _ in range(n)]

    def sub_ok(ij):
        i, j = ij
        w = omega.separating_witness(i, j)
        if w is None:
            return all(omega.member(p, j) for p in _ideal_probes(rng, i))
        return omega.member(w, i) and not omega.member(w, j)

    def neg_ok(ij):
        i, _ = ij
        neg = omega.negate(i)
        for u in [random_emap(rng) for _ in range(3)] + _ideal_probes(rng, neg, 3):
            if omega.member(u, neg):
                # no part of u lands in i: its image meets every support finitely
                if i.has_L or any((u.image & a).is_infinite for _, a in i.generators):
                    return False
                if any(omega.member(compose(u, random_emap(rng)), i) for _ in range(3)):
                    return False
            else:
                # a response v with u ∘ v in i
                v = DOUBLING if i.has_L else next(
                    (EMap(u.preimage(a)) for _, a in i.generators
                     if (u.image & a).is_infinite), None)
                if v is None or not omega.member(compose(u, v), i):
                    return False
        return True

    def meets_ok(ij):
        i, j = ij
        w = omega.meet_witness(i, j)
        if w is not None:
            return omega.member(w, i) and omega.member(w, j)
        return (not any(omega.member(p, j) for p in _ideal_probes(rng, i))
                and not any(omega.member(p, i) for p in _ideal_probes(rng, j)))

    s.tally("ideal inclusion rule (separating witness)", cases, sub_ok)
    s.tally("ideal negation rule (images / responses)", cases, neg_ok)
    s.tally("ideal intersection rule (common member)", cases, meets_ok)


def _bridge(s: Suite) -> None:
    """Embed subsets of X = {0..n-1} as A ∪ N≥n and compare with brute force."""
    total = 0
    for n in range(1, 5):
        u = fo.FinUniverse(n)
        tail = UpSet.at_least(n)

        def emb(mask: int) -> UpSet:
            return UpSet.finite(i for i in range(n) if mask >> i & 1) | tail

        for a in u.masks():
            fa, ua = filt.u_filter(emb(a)), fo.up(u, a)
            neg_fin = fo.negation(ua)
            for b in u.masks():
                gb, ub = filt.u_filter(emb(b)), fo.up(u, b)
                imp = fo.heyting_bruteforce(ua, ub)
                m, j = filt.meet(fa, gb), filt.join(fa, gb)
                for c in u.masks():
                    total += 1
                    ok = (filt.implication_member(emb(c), fa, gb) == (c in imp)
                          and filt.member(emb(c), m) == (c in (ua & ub))
                          and filt.member(emb(c), j) == (c in fo.generated_filter(u, [a, b]))
                          and filt.member(emb(c), filt.neg(fa)) == (c in neg_fin))
                    if not ok:
                        s.record("finite-universe bridge", False, total,
                                 f"n={n} A={u.fmt(a)} B={u.fmt(b)} C={u.fmt(c)}")
                        return
    s.record("finite-universe bridge", True, total)


def rules(seed: int = DEFAULT_SEED, count: int = 500) -> dict:
    rng = random.Random(seed)
    s = Suite("rules")
    _filter_rules(s, rng, count)
    _ideal_rules(s, rng, count)
    _bridge(s)
    return s.report()


# -- criterion 8 ------------------------------------------------------------


def monoid(seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    s = Suite("monoid")
    triples = [tuple(random_emap(rng) for _ in range(3)) for _ in range(200)]
    s.tally("compose is associative", triples,
            lambda t: compose(compose(t[0], t[1]), t[2]) == compose(t[0], compose(t[1], t[2])))

    def factors(k: UpSet) -> bool:
        sk = sigma(k)
        if compose_all(factor_sigma(k)) != sk:
            return False
        fs = factor_sigma(k)

        def pointwise(n):
            for f in reversed(fs):
                n = f(n)
            return n
        return all(pointwise(n) == sk(n) for n in range(4 * (len(fs) + 4)))

    s.tally("sigma_K = sigma_{k_r} ∘ ... ∘ sigma_{k_1}",
            [random_finite_set(rng, below=12, max_size=6) for _ in range(50)], factors)

    sets = [random_infinite(rng) for _ in range(100)]

    def retracts(a: UpSet) -> bool:
        p, e = retraction(a), idempotent(a)
        ks = _window_points(a)
        return (all(p(select(a, k)) == k for k in ks)
                and all(e(e(n)) == e(n) for n in ks)
                and all(len(p.fiber(b)) > 0 and max(p.fiber(b)) <= select(a, b) for b in ks))

    s.tally("p_A ∘ u_A = id, e ∘ e = e, finite fibres", sets, retracts)

    def monotone(f: FinallyInjective) -> bool:
        b = monotonize(f)
        g = monotone_part(f)
        ks = range(stabilization_window(b, f.tail.image) + len(f.table) + f.offset)
        vals = [f(select(b, k)) for k in ks]
        return (b.is_infinite and all(x < y for x, y in zip(vals, vals[1:]))
                and all(g(k) == v for k, v in zip(ks, vals)))

    s.tally("f ∘ u_B is increasing for the record set B",
            [random_frag_map(rng) for _ in range(100)], monotone)

    def completes(uv) -> bool:
        u, v = uv
        h, k = atomic_complete(u, v)
        lhs, rhs = compose(u, h), compose(v, k)
        return (lhs == rhs and lhs.image == u.image & v.image
                and all(u(h(n)) == v(k(n)) for n in _window_points(u.image, v.image)))

    s.tally("F is atomic: u ∘ h = v ∘ k",
            [(random_emap(rng, "F"), random_emap(rng, "F")) for _ in range(100)], completes)
    return s.report()


SUITES: dict[str, Callable[..., dict]] = {
    "finite": finite_universe,
    "acont": acont,
    "ldn": ldn,
    "sigma": sigma_example,
    "extcof": extcof,
    "fdn": fdn,
    "rules": rules,
    "monoid": monoid,
}

SEEDED = {"acont", "ldn", "sigma", "extcof", "fdn", "rules", "monoid"}


def run(name: str, arg: int | None = None, seed: int = DEFAULT_SEED) -> list[dict]:
    """Run a suite by name; ``all`` runs every acceptance suite in order."""
    if name == "all":
        return [r for key in SUITES for r in run(key, seed=seed)]
    if name == "clu1":
        return [clu1(arg if arg is not None else 3)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from clu1, all, {', '.join(SUITES)}")
    kwargs = {"seed": seed} if name in SEEDED else {}
    if arg is not None:
        if name == "acont":
            kwargs["corpus_size"] = arg
        elif name in ("extcof", "fdn", "rules"):
            kwargs["count"] = arg
        else:
            raise ValueError(f"suite {name!r} takes no argument")
    return [SUITES[name](**kwargs)]
