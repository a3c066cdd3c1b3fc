import random
from typing import Callable, Dict, Iterator, Optional

import numpy as np

from ..analysis import (
    check_interlacing,
    classify_small_radius,
    digraph_from_partition,
    eta_bounds_check,
    odd_cycle_digon_parity,
    odd_cycle_digon_parity_brute,
    radius_certificate,
    radius_inequalities,
    symmetric_sufficient_conditions,
    tournament_bound_check,
)
from ..closed_forms import closed_form_matches, closed_form_spectrum, transitive_tournament_char_poly
from ..codec import encode
from ..digraphs import converse, delete_vertex, is_weakly_connected, random_digraph, underlying_graph
from ..enumeration import generate_nonisomorphic, verify_classification
from ..errors import InadmissiblePartitionError, InvariantViolation
from ..event import Event, EventType
from ..families import family, necklace
from ..hermitian import (
    all_ones_eigenvector,
    hermitian_char_poly,
    hermitian_matrix,
    matrix_power,
    spectrum,
    walk_weight_sum,
)
from ..models.census import SuiteReport
from ..models.digraph import Digraph, PairState, iter_pairs
from ..models.spectral import CharPoly
from ..models.structures import Phase, QuaternaryPartition, RadiusKind
from ..sachs import sachs_coefficients, trace_identities
from ..switching import digon_cut_replace, four_way_by_rules, four_way_switch, local_reversal

# randomized instances per suite when the caller does not say otherwise
DEFAULT_TRIALS = {"switching": 1000, "sachs": 500}
SACHS_RANDOM_ORDERS = (6, 7, 8)


class VerifyTools:
    """
    Verification suites over the exhaustive set of digraphs of one order.

    Every check result is published as a CHECK_PASSED / CHECK_FAILED event;
    the facade's tracer turns them into the returned SuiteReport.
    """

    SUITES = (
        "interlacing",
        "radius",
        "symmetric",
        "small-radius",
        "closed-forms",
        "sachs",
        "switching",
        "classification",
        "traces",
    )

    def __init__(self, hd):
        """
        Args:
            hd: HermDig instance whose settings and event bus are used
        """
        self.hd = hd
        self._suite = ""
        self._n = 0

    def run(self, suite: str, n: int, trials: Optional[int] = None, seed: int = 0) -> SuiteReport:
        """
        Run one suite and return its report.

        Args:
            suite: One of VerifyTools.SUITES
            n: Order of the exhaustive sweep (the parameter bound for closed-forms,
               the largest random order for switching)
            trials: Randomized instances, for the suites that use them
            seed: Seed for the randomized instances

        Returns:
            The SuiteReport built from the published events
        """
        runners: Dict[str, Callable[..., None]] = {
            "interlacing": self._interlacing,
            "radius": self._radius,
            "symmetric": self._symmetric,
            "small-radius": self._small_radius,
            "closed-forms": self._closed_forms,
            "sachs": self._sachs,
            "switching": self._switching,
            "classification": self._classification,
            "traces": self._traces,
        }
        if suite not in runners:
            raise ValueError(f"unknown suite {suite!r}; known: {', '.join(self.SUITES)}")
        if trials is None:
            trials = DEFAULT_TRIALS.get(suite, 0)
        self._suite, self._n = suite, n
        self.hd.emit(Event(type=EventType.SUITE_START, suite=suite, n=n))
        runners[suite](n, trials, random.Random(seed))
        self.hd.emit(Event(type=EventType.SUITE_END, suite=suite, n=n))
        return self.hd.tracer.report(suite)

    # ─── Helpers ───────────────────────────────────────────────────

    def _digraphs(self, n: int) -> Iterator[Digraph]:
        s = self.hd.settings
        return generate_nonisomorphic(n, jobs=s.jobs, progress=s.progress, large=s.large)

    def _record(self, check: str, ok: bool, X: Optional[Digraph] = None, **detail):
        self.hd.emit(Event(
            type=EventType.CHECK_PASSED if ok else EventType.CHECK_FAILED,
            suite=self._suite,
            check=check,
            n=self._n,
            hd6=encode(X) if X is not None else None,
            detail=detail,
        ))

    def _guarded(self, check: str, X: Digraph, fn: Callable[[], bool]):
        """Record fn() as the outcome; an InvariantViolation counts as a failure."""
        try:
            ok = fn()
        except InvariantViolation as e:
            self._record(check, False, X, error=str(e))
            return
        self._record(check, ok, X)

    @property
    def _tol(self) -> float:
        return self.hd.settings.tolerance

    # ─── Suites ────────────────────────────────────────────────────

    def _interlacing(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            parent = spectrum(X, self._tol)
            for v in range(X.n):
                child = spectrum(delete_vertex(X, v), self._tol)
                ok = check_interlacing(parent, child)
                self._record("interlacing", ok, X, vertex=v, parent=parent.values(), child=child.values())
            eta = eta_bounds_check(X)
            self._record("eta-bounds", eta.ok, X, **vars(eta))

    def _radius(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            if X.edge_count:
                r = radius_inequalities(X, self._tol)
                self._record("radius-inequalities", r.ok, X, rho=r.rho, lambda1=r.lambda1,
                             rho_underlying=r.rho_underlying, delta=r.delta)
            if X.n and is_weakly_connected(X):
                self._guarded("radius-certificate", X, lambda: self._certificate_round_trip(X))
            if X.n > 1 and X.is_oriented and X.edge_count == X.n * (X.n - 1) // 2:
                b = tournament_bound_check(X, self._tol)
                self._record("tournament-bound", b.ok, X, lambda1=b.lambda1, bound=b.bound)

    def _certificate_round_trip(self, X: Digraph) -> bool:
        cert = radius_certificate(X, self._tol)
        if cert.kind == RadiusKind.NO_EQUALITY:
            return True
        return digraph_from_partition(underlying_graph(X), cert.partition, cert.kind) == X

    def _symmetric(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            self._guarded("sufficient-conditions", X, lambda: symmetric_sufficient_conditions(X) is not None)
            fast, brute = odd_cycle_digon_parity(X), odd_cycle_digon_parity_brute(X)
            self._record("odd-cycle-parity", fast == brute, X, basis=fast, listed=brute)

    def _small_radius(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            self._guarded("small-radius", X, lambda: classify_small_radius(X) is not None)

    def _closed_forms(self, n: int, trials: int, rng: random.Random):
        for name in ("D", "Ctilde", "Ctilde_prime", "Ctilde_dprime", "C"):
            for k in range(3, n + 1):
                cf = closed_form_spectrum(name, k)
                self._record(f"closed-form-{name}", closed_form_matches(cf, self._tol), family(name, k))
        for k in range(1, n + 1):
            T = family("T", k)
            self._record("transitive-tournament", hermitian_char_poly(T) == transitive_tournament_char_poly(k), T)
        for a in range(1, min(n, 10) + 1):
            for b in range(1, min(n, 10) + 1):
                cf = closed_form_spectrum("X_ab", a, b)
                self._record("closed-form-X_ab", closed_form_matches(cf, self._tol), family("X_ab", a, b))
        for k in range(3, min(n, 20) + 1):
            N = necklace(k)
            M = hermitian_matrix(N)
            cube = matrix_power(M, 3)
            ok = np.array_equal(cube.real, 4 * M.real) and np.array_equal(cube.imag, 4 * M.imag)
            self._record("necklace-cube", ok, N)
            self._record("closed-form-Necklace", closed_form_matches(closed_form_spectrum("Necklace", k), self._tol), N)

    def _sachs(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            self._check_sachs(X)
        for _ in range(trials):
            self._check_sachs(random_digraph(rng.choice(SACHS_RANDOM_ORDERS), rng))

    def _check_sachs(self, X: Digraph):
        coeffs = sachs_coefficients(X)
        cp = hermitian_char_poly(X)
        self._record("sachs-coefficients", CharPoly(coeffs) == cp, X, sachs=list(coeffs), charpoly=list(cp.coeffs))

    def _switching(self, n: int, trials: int, rng: random.Random):
        top = max(n, 2)
        for _ in range(trials):
            order = rng.randint(2, top)
            X = random_digraph(order, rng)
            S = [v for v in range(order) if rng.random() < 0.5]
            self._check_switch("converse", X, converse(X))

            inside = set(S)
            cut = [(i, j) for i, j in iter_pairs(order) if (i in inside) != (j in inside)]
            Y = X.with_states({p: PairState.FWD for p in cut if X.state(*p) == PairState.DIGON})
            self._check_switch("local-reversal", Y, local_reversal(Y, S))

            Z = X.with_states({p: PairState.DIGON for p in cut})
            self._check_switch("digon-cut", Z, digon_cut_replace(Z, S))

            P = QuaternaryPartition(tuple(rng.choice(list(Phase)) for _ in range(order)))
            W = X
            while True:
                try:
                    switched = four_way_switch(W, P)
                    break
                except InadmissiblePartitionError as e:
                    W = W.with_states({e.pair: PairState.NONE})
            self._check_switch("four-way", W, switched, partition=str(P))
            self._record("four-way-rules", four_way_by_rules(W, P) == switched, W, partition=str(P))

    def _check_switch(self, check: str, before: Digraph, after: Digraph, **detail):
        a, b = hermitian_char_poly(before), hermitian_char_poly(after)
        self._record(check, a == b, before, before=str(a), after=str(b), output=encode(after), **detail)

    def _classification(self, n: int, trials: int, rng: random.Random):
        report = verify_classification(n)
        for check, ok in report.checks.items():
            detail = report.details.get(check)
            self._record(check, ok, **({"found": detail} if detail is not None else {}))

    def _traces(self, n: int, trials: int, rng: random.Random):
        for X in self._digraphs(n):
            t = trace_identities(X)
            self._record("trace-identities", t.ok, X, tr1=t.tr1, tr2=t.tr2, tr3=t.tr3, triangles=t.census.as_tuple())
            self._guarded("all-ones", X, lambda: all_ones_eigenvector(X) is not None)
            M = hermitian_matrix(X)
            powers = {k: matrix_power(M, k) for k in range(1, 4)}
            ok = all(
                powers[k].entry(0, v) == walk_weight_sum(X, k, 0, v)
                for k in powers
                for v in range(X.n)
            )
            self._record("walk-weights", ok, X)
