"""Deep-hole verdicts for generalized projective Reed-Solomon codes.

A received word is a deep hole when its exact error distance attains the
covering radius q - l + 1 - k. Four routes produce a verdict:

* ``oracle``: compare the exact error distance against the covering radius;
* ``mds_extension``: stack the word under the generator matrix and demand
  every (k+1)-column minor be nonsingular;
* ``thm14``: closed form for words whose interpolant has degree exactly k;
  such a word is a deep hole iff no k-subset of D sums to zero;
* ``thm15``: closed form for the family lam*(x - a_j)^(q-2) + nu*x^(k-1)
  + (degree <= k-2); such a word is a deep hole iff
  C(q-2, k-1) * a_j^(q-1-k) * prod_{y in I} (y - a_j) + 1 is nonzero for
  every k-subset I of D. When the characteristic divides k the binomial
  term vanishes and the verdict is always yes.

The closed-form criteria hard-require their hypotheses (odd characteristic
included) and raise HypothesisError outside them; the oracles run anywhere.
Failed criteria always carry a witness subset, enumerated in lexicographic
order of canonical encodings so reruns agree byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .galois import FieldElement, FiniteField, lucas_binom
from .polynomial import Polynomial, expand_shifted_power
from .matrix import first_singular_column_subset
from .codes import DEFAULT_MESSAGE_BUDGET, GprsCode, ReceivedWord

CRITERION_METHODS = ("thm14", "thm15")


class HypothesisError(ValueError):
    """Criterion invoked outside the parameter range it is proved for."""


@dataclass(frozen=True)
class DeepHoleVerdict:
    """Outcome of one deep-hole check.

    ``witness`` is a sorted tuple of canonical element encodings (a zero-sum
    or product-criterion subset I of D) for the closed-form methods, and a
    tuple of 0-based column indices (n = the projective column) for the
    mds_extension method. Criterion verdicts carry a witness exactly when
    they are negative.
    """

    is_deep_hole: bool
    method: str
    witness: tuple[int, ...] | None = None
    distance: int | None = None

    def to_record(self, parameters: dict | None = None) -> dict:
        record = {"is_deep_hole": self.is_deep_hole, "method": self.method}
        if self.witness is not None:
            record["witness"] = list(self.witness)
        if self.distance is not None:
            record["distance"] = self.distance
        if parameters:
            record["parameters"] = dict(parameters)
        return record


@dataclass(frozen=True)
class WordFamilySpec:
    """Parameters of one structured received word.

    kind "deg_k": lam * x^k + nu * x^(k-1) + low(x).
    kind "shifted_qminus2": lam * (x - a_j)^(q-2) + nu * x^(k-1) + low(x),
    with a_j one of the code's excluded points.
    ``low`` must have degree <= k - 2 (None means zero).
    """

    kind: str
    lam: FieldElement
    nu: FieldElement
    a_j: FieldElement | None = None
    low: Polynomial | None = None


def build_family_word(code: GprsCode, spec: WordFamilySpec) -> ReceivedWord:
    f = code.field
    if spec.lam.field != f or spec.nu.field != f:
        raise ValueError("family parameters from a different field")
    if spec.lam.is_zero:
        raise ValueError("family scale lam must be nonzero")
    low = spec.low if spec.low is not None else Polynomial.zero(f)
    if low.field != f:
        raise ValueError("low-order part over a different field")
    if not low.degree <= code.k - 2:
        raise ValueError(f"low-order part degree {low.degree} exceeds k - 2")
    if spec.kind == "deg_k":
        head = Polynomial.x_power(f, code.k, spec.lam)
    elif spec.kind == "shifted_qminus2":
        if spec.a_j is None:
            raise ValueError("shifted family needs the excluded point a_j")
        if spec.a_j not in code.excluded:
            raise ValueError("a_j must be one of the code's excluded points")
        head = expand_shifted_power(f, spec.a_j, f.q - 2) * spec.lam
    else:
        raise ValueError(f"unknown family kind {spec.kind!r}")
    u = head + Polynomial.x_power(f, code.k - 1, spec.nu) + low
    return code.word_from_poly(u)


def is_deep_hole_oracle(
    code: GprsCode,
    word: ReceivedWord,
    method: str = "agreement",
    budget: int = DEFAULT_MESSAGE_BUDGET,
) -> DeepHoleVerdict:
    """Ground truth: the word's exact error distance equals the covering radius.

    Codewords are never deep holes; they come back with distance 0.
    """
    if code.is_codeword(word):
        return DeepHoleVerdict(False, "oracle", distance=0)
    d = code.error_distance(word, method=method, budget=budget)
    rho = code.covering_radius("formula")
    return DeepHoleVerdict(d == rho, "oracle", distance=d)


def is_deep_hole_mds_extension(code: GprsCode, word: ReceivedWord) -> DeepHoleVerdict:
    """Stack the word as row k+1 under the generator and scan (k+1)-minors.

    The word is a deep hole iff the stacked matrix still generates an MDS
    code, i.e. every (k+1)-column minor is nonsingular. A codeword makes
    every minor singular, so codewords come back negative here too.
    """
    rows = [list(r) for r in code.generator.row_encodings()]
    rows.append(list(word.encs))
    witness = first_singular_column_subset(code.field, rows, code.k + 1)
    return DeepHoleVerdict(witness is None, "mds_extension", witness)


def _require_odd(field: FiniteField):
    if not field.has_odd_characteristic:
        raise HypothesisError(
            "closed-form criteria are stated for odd characteristic only; "
            "use the oracle for p = 2"
        )


def thm14_criterion(code: GprsCode) -> DeepHoleVerdict:
    """Subset-sum criterion for words of interpolant degree exactly k.

    Every such word of the code is a deep hole iff no k-subset of D sums
    to zero. Requires q >= 5 and 2 <= k <= min(q-3, q-l-1).
    """
    f = code.field
    _require_odd(f)
    if f.q < 5:
        raise HypothesisError("thm14 requires q >= 5")
    bound = min(f.q - 3, f.q - code.l - 1)
    if not 2 <= code.k <= bound:
        raise HypothesisError(f"thm14 requires 2 <= k <= {bound}, got k = {code.k}")
    for subset in combinations(code.evaluation_encodings(), code.k):
        acc = 0
        for e in subset:
            acc = f.add_enc(acc, e)
        if acc == 0:
            return DeepHoleVerdict(False, "thm14", tuple(subset))
    return DeepHoleVerdict(True, "thm14")


def thm15_criterion(code: GprsCode, a_j) -> DeepHoleVerdict:
    """Product criterion for the shifted-power word family at excluded a_j.

    Every family word is a deep hole iff
    C(q-2, k-1) * a_j^(q-1-k) * prod_{y in I}(y - a_j) + 1 != 0 for all
    k-subsets I of D. If p divides k the binomial vanishes mod p and the
    verdict is immediately positive.
    """
    f = code.field
    _require_odd(f)
    if f.q < 4:
        raise HypothesisError("thm15 requires q >= 4")
    if not 2 <= code.k <= f.q - code.l - 1:
        raise HypothesisError(f"thm15 requires 2 <= k <= {f.q - code.l - 1}")
    if not isinstance(a_j, FieldElement):
        a_j = f.element(int(a_j))
    if a_j not in code.excluded:
        raise ValueError("a_j must be one of the code's excluded points")
    if code.k % f.p == 0:
        return DeepHoleVerdict(True, "thm15")
    aj = a_j.encoding
    binom = lucas_binom(f.q - 2, code.k - 1, f.p)
    const = f.mul_enc(binom, f.pow_enc(aj, f.q - 1 - code.k)) if binom else 0
    if const == 0:
        # the product term vanishes identically, the sum is always 1
        return DeepHoleVerdict(True, "thm15")
    for subset in combinations(code.evaluation_encodings(), code.k):
        prod = const
        for e in subset:
            prod = f.mul_enc(prod, f.sub_enc(e, aj))
        if f.add_enc(prod, 1) == 0:
            return DeepHoleVerdict(False, "thm15", tuple(subset))
    return DeepHoleVerdict(True, "thm15")


def zero_sum_subset(field: FiniteField, k: int) -> tuple[FieldElement, ...]:
    """A size-k subset of the nonzero elements summing to zero, constructively.

    Even k: pair each element with its negative in canonical-order scan and
    take k/2 pairs. Odd k: start from a zero-sum triple (1, 2, -3 when the
    characteristic is at least 7; a scan-built triple z', z'', -(z'+z'') for
    p in {3, 5}) and fill up with pairs disjoint from it.
    """
    _require_odd_plain(field)
    if not 2 <= k <= field.q - 3:
        raise ValueError(f"subset size k = {k} outside 2..{field.q - 3}")
    pairs = []
    seen = set()
    for enc in range(1, field.q):
        if enc in seen:
            continue
        partner = field.neg_enc(enc)
        seen.add(enc)
        seen.add(partner)
        pairs.append((enc, partner))
    if k % 2 == 0:
        chosen = [e for pair in pairs[: k // 2] for e in pair]
        return _as_sorted_elements(field, chosen)
    triple = _zero_sum_triple(field)
    blocked = set(triple) | {field.neg_enc(e) for e in triple}
    chosen = list(triple)
    needed = (k - 3) // 2
    for pair in pairs:
        if needed == 0:
            break
        if pair[0] in blocked or pair[1] in blocked:
            continue
        chosen.extend(pair)
        needed -= 1
    if needed:
        raise AssertionError("pair supply exhausted; k range check is wrong")
    return _as_sorted_elements(field, chosen)


def _require_odd_plain(field: FiniteField):
    if not field.has_odd_characteristic:
        raise ValueError("zero-sum construction requires odd characteristic")


def _as_sorted_elements(field, encs):
    acc = 0
    for e in encs:
        acc = field.add_enc(acc, e)
    if acc != 0 or len(set(encs)) != len(encs):
        raise AssertionError("constructed subset failed its own invariant")
    return tuple(field.element(e) for e in sorted(encs))


def _zero_sum_triple(field: FiniteField) -> tuple[int, int, int]:
    p = field.p
    if p >= 7:
        return 1, 2, field.neg_enc(3)
    z1 = 1
    if p == 3:
        blocked = {z1, field.neg_enc(z1)}
    else:
        two = field.add_enc(z1, z1)
        blocked = {z1, field.neg_enc(z1), two, field.neg_enc(two)}
    z2 = next(e for e in range(1, field.q) if e not in blocked)
    z3 = field.neg_enc(field.add_enc(z1, z2))
    return z1, z2, z3


def vp_binomial(q: int, t: int) -> int:
    """p-adic valuation of C(q-2, t-1) for q an odd prime power.

    Equals v_p(t); the test suite pins this against big-integer binomials.
    """
    from .galois import prime_power_decomposition

    p, _ = prime_power_decomposition(q)
    if p == 2:
        raise ValueError("valuation identity requires odd characteristic")
    if not 2 <= t <= q - 1:
        raise ValueError(f"t = {t} outside 2..{q - 1}")
    v = 0
    while t % p == 0:
        t //= p
        v += 1
    return v


def binom_mod_p(m: int, r: int, field: FiniteField) -> FieldElement:
    """C(m, r) reduced into the prime subfield via base-p digit products."""
    if r < 0 or r > m:
        raise ValueError(f"binomial C({m}, {r}) outside 0 <= r <= m")
    return field.element(lucas_binom(m, r, field.p))


def word_in_degree_k_family(code: GprsCode, word: ReceivedWord) -> bool:
    """Is the word (u(D), c_{k-1}(u)) for some u of degree exactly k?"""
    h = code.interpolant(word)
    return h.degree == code.k and h.coefficient(code.k - 1).encoding == word.encs[-1]


def word_in_shifted_family(code: GprsCode, word: ReceivedWord, a_j) -> bool:
    """Is the word lam*(x-a_j)^(q-2) + nu*x^(k-1) + low for some lam != 0?"""
    f = code.field
    if not isinstance(a_j, FieldElement):
        a_j = f.element(int(a_j))
    if a_j not in code.excluded:
        raise ValueError("a_j must be one of the code's excluded points")
    base = code.word_from_poly(expand_shifted_power(f, a_j, f.q - 2))
    n = code.n
    for lam in range(1, f.q):
        residual = [
            f.sub_enc(word.encs[i], f.mul_enc(lam, base.encs[i])) for i in range(n)
        ]
        h = code.interpolant(code.word(residual + [0]))
        if not h.degree <= code.k - 1:
            continue
        expected_last = f.add_enc(
            f.mul_enc(lam, base.encs[-1]), h.coefficient(code.k - 1).encoding
        )
        if expected_last == word.encs[-1]:
            return True
    return False


def validate_verdict(
    code: GprsCode,
    verdict: DeepHoleVerdict,
    a_j: FieldElement | None = None,
    word: ReceivedWord | None = None,
) -> bool:
    """Re-check a verdict's witness against its defining equation."""
    f = code.field
    if verdict.witness is None:
        return True
    if verdict.method == "thm14":
        return _valid_zero_sum_witness(code, verdict.witness)
    if verdict.method == "thm15":
        if a_j is None:
            raise ValueError("thm15 witness validation needs a_j")
        if not isinstance(a_j, FieldElement):
            a_j = f.element(int(a_j))
        subset = verdict.witness
        if len(subset) != code.k or len(set(subset)) != code.k:
            return False
        d_set = set(code.evaluation_encodings())
        if any(e not in d_set for e in subset):
            return False
        binom = lucas_binom(f.q - 2, code.k - 1, f.p)
        acc = f.mul_enc(binom, f.pow_enc(a_j.encoding, f.q - 1 - code.k))
        for e in subset:
            acc = f.mul_enc(acc, f.sub_enc(e, a_j.encoding))
        return f.add_enc(acc, 1) == 0
    if verdict.method == "mds_extension":
        if word is None:
            raise ValueError("mds_extension witness validation needs the word")
        from .matrix import det_enc

        rows = [list(r) for r in code.generator.row_encodings()]
        rows.append(list(word.encs))
        cols = verdict.witness
        if len(cols) != code.k + 1:
            return False
        sub = [[row[j] for j in cols] for row in rows]
        return det_enc(f, sub) == 0
    raise ValueError(f"no witness semantics for method {verdict.method!r}")


def _valid_zero_sum_witness(code: GprsCode, witness) -> bool:
    f = code.field
    if len(witness) != code.k or len(set(witness)) != code.k:
        return False
    d_set = set(code.evaluation_encodings())
    if any(e not in d_set for e in witness):
        return False
    acc = 0
    for e in witness:
        acc = f.add_enc(acc, e)
    return acc == 0
