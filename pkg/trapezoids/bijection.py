"""
The block-moving bijection between (ell, n, 2) Magog and Gog trapezoids.

``magog_to_gog`` and ``gog_to_magog`` are mutually inverse. Both split into
three cases, and a Magog trapezoid and its image always fall in the same
case (with the same k in the first one):

* first case: the Magog side has a bug (smallest bug k), the Gog side has
  pivot k <= n-2;
* second case: no bug and m[2,n-1] < m[2,n]  /  pivot n-1 and g[1,n] < g[2,n-1];
* third case: no bug and m[2,n-1] = m[2,n]   /  pivot n-1 and g[1,n] = g[2,n-1].

Index ranges whose bounds cross are empty (k = 1 has no leading block,
k = n-2 leaves a single trailing row-1 cell).
"""
from dataclasses import dataclass
from trapezoids.core import GogTrapezoid, MagogTrapezoid, Trapezoid, validate_gog, validate_magog
from trapezoids.exceptions import InvalidTrapezoidError


@dataclass(frozen=True)
class CaseTag:
    number: int
    k: int | None = None

    @classmethod
    def first(cls, k: int) -> 'CaseTag':
        return cls(1, k)

    @classmethod
    def second(cls) -> 'CaseTag':
        return cls(2)

    @classmethod
    def third(cls) -> 'CaseTag':
        return cls(3)

    def __str__(self) -> str:
        if self.number == 1:
            return f'Case1({self.k})'
        return f'Case{self.number}'


def _check(trapezoid: Trapezoid, validator) -> None:
    report = validator(trapezoid)
    if not report.is_valid:
        raise InvalidTrapezoidError(report)


def find_smallest_bug(magog: MagogTrapezoid, check: bool = True) -> int | None:
    """The least j in 1..n-2 with m[1,j+1] > m[2,j] + 1, or None."""
    if check:
        _check(magog, validate_magog)
    m1, m2 = magog.row1, magog.row2
    for j in range(1, magog.n - 1):
        if m1[j] > m2[j - 1] + 1:
            return j
    return None


def classify_magog(magog: MagogTrapezoid, check: bool = True) -> CaseTag:
    bug = find_smallest_bug(magog, check=check)
    if bug is not None:
        return CaseTag.first(bug)
    n = magog.n
    if magog.row2[n - 2] < magog.row2[n - 1]:
        return CaseTag.second()
    return CaseTag.third()


def compute_pivot(gog: GogTrapezoid, check: bool = True) -> int:
    """k = max{j in 1..n-1 : j = 1 or g[2,j-1] <= g[1,j+1] + 1}.

    j = 1 is admissible without condition. For ell = 0 the maximum is always
    reached at some j >= 2 (g[2,1] = 2); for ell >= 1 the set {2..n-1} may be
    empty, and k = 1 is then what undoes a Magog trapezoid whose smallest bug
    is 1.
    """
    if check:
        _check(gog, validate_gog)
    g1, g2 = gog.row1, gog.row2
    for j in range(gog.n - 1, 1, -1):
        if g2[j - 2] <= g1[j] + 1:
            return j
    return 1


def classify_gog(gog: GogTrapezoid, check: bool = True) -> CaseTag:
    k = compute_pivot(gog, check=check)
    n = gog.n
    if k <= n - 2:
        return CaseTag.first(k)
    # g[1,n] <= g[2,n-1] always holds, so the remaining cases are < and =.
    if gog.row1[n - 1] < gog.row2[n - 2]:
        return CaseTag.second()
    return CaseTag.third()


def magog_to_gog(magog: MagogTrapezoid, check: bool = True) -> GogTrapezoid:
    if check:
        _check(magog, validate_magog)
    n = magog.n
    # 1-based views
    m1 = (None,) + magog.row1
    m2 = (None,) + magog.row2
    g1 = [0] * (n + 1)
    g2 = [0] * n
    tag = classify_magog(magog, check=False)

    if tag.number == 1:
        k = tag.k
        for j in range(1, k):
            g2[j] = m2[j] + 1
        for j in range(k, n):
            g2[j] = m2[j + 1]
        for j in range(1, k + 1):
            g1[j] = m1[j]
        g1[k + 1] = m2[k]
        for j in range(k + 2, n + 1):
            g1[j] = m1[j - 1] - 2
    elif tag.number == 2:
        for j in range(1, n - 1):
            g2[j] = m2[j] + 1
        g2[n - 1] = m2[n]
        for j in range(1, n):
            g1[j] = m1[j]
        g1[n] = m2[n - 1]
    else:
        for j in range(1, n):
            g2[j] = m2[j] + 1
        for j in range(1, n):
            g1[j] = m1[j]
        g1[n] = m2[n] + 1

    return GogTrapezoid(magog.params, tuple(g1[1:]), tuple(g2[1:]))


def gog_to_magog(gog: GogTrapezoid, check: bool = True) -> MagogTrapezoid:
    if check:
        _check(gog, validate_gog)
    n = gog.n
    g1 = (None,) + gog.row1
    g2 = (None,) + gog.row2
    m1 = [0] * n
    m2 = [0] * (n + 1)
    tag = classify_gog(gog, check=False)

    if tag.number == 1:
        k = tag.k
        for j in range(1, k):
            m2[j] = g2[j] - 1
        m2[k] = g1[k + 1]
        for j in range(k + 1, n + 1):
            m2[j] = g2[j - 1]
        for j in range(1, k + 1):
            m1[j] = g1[j]
        for j in range(k + 1, n):
            m1[j] = g1[j + 1] + 2
    elif tag.number == 2:
        for j in range(1, n - 1):
            m2[j] = g2[j] - 1
        m2[n - 1] = g1[n]
        m2[n] = g2[n - 1]
        for j in range(1, n):
            m1[j] = g1[j]
    else:
        for j in range(1, n):
            m2[j] = g2[j] - 1
        m2[n] = g1[n] - 1
        for j in range(1, n):
            m1[j] = g1[j]

    return MagogTrapezoid(gog.params, tuple(m1[1:]), tuple(m2[1:]))


def classify(trapezoid: Trapezoid, check: bool = True) -> CaseTag:
    if isinstance(trapezoid, MagogTrapezoid):
        return classify_magog(trapezoid, check=check)
    return classify_gog(trapezoid, check=check)


def apply(trapezoid: Trapezoid, check: bool = True) -> Trapezoid:
    """Send a trapezoid of either kind to its partner of the other kind."""
    if isinstance(trapezoid, MagogTrapezoid):
        return magog_to_gog(trapezoid, check=check)
    return gog_to_magog(trapezoid, check=check)
