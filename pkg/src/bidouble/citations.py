"""Citation vocabulary for verdict traces and reports.

Every verdict, trace step, and report line this engine emits is tagged with
the statement label of the classification result that justifies it (for
example ``"Lemma 4.2"`` for the Picard-rank-one elimination).  The labels
below are the complete vocabulary; the CLI test suite asserts that no output
ever carries a label outside this registry.
"""

DEF_ULRICH = "Def. 2.1"          # Ulrich bundle: H^i(E(-jH)) = 0 for j = 1,2
DEF_COMPLEXITY = "Def. 2.2"      # Ulrich complexity: minimal Ulrich rank
PROP_NUMERICAL = "Prop. 2.3"     # the two Chern-class equalities
DEF_SPECIAL = "Def. 2.4"         # special Ulrich: rank 2, c1 = 3H + K
COR_SPECIAL = "Cor. 2.5"         # special Ulrich iff c1 = 3H+K, c2 target, h^0 conditions
THM_CB = "Thm. 2.6"              # rank-2 bundle from Cayley-Bacharach data
DEF_BIDOUBLE = "Def. 2.7"        # branch degrees share one parity
PROP_INVARIANTS = "Prop. 2.8"    # K^2, chi, q of a bidouble plane
REM_CONNECTED = "Remark after Prop. 2.8"   # at most one empty branch divisor
LEM_INTERMEDIATE = "Lemma 3.1"   # rho(Y2) = rho(Y3) = 1 forces rho(S) = rho(Y1)
REM_NORM = "Remark after Lemma 3.1"        # NS(S)/pullback has order <= 2
LEM_RESOLUTION = "Lemma 3.2"     # rho(resolution) = 1 + n1*n2 for n1+n2 >= 6
COR_PICARD = "Cor. 3.3"          # rho(S) = 1 iff all three intermediate rho = 1
PROP_PAIRS = "Prop. 3.4"         # intermediate rho > 1 exactly on four pairs
THM_PICARD = "Thm. 1.1"          # the four branch-degree families with rho > 1
LEM_ODD_RANK = "Lemma 4.1"       # odd covers carry no odd-rank Ulrich bundle
LEM_RHO_ONE = "Lemma 4.2"        # Ulrich line bundle forces rho > 1
COR_NO_LINE = "Cor. 4.3"         # line-bundle-free families
PROP_QUADRIC = "Prop. 4.4"       # (0,2,2n), n >= 3: discriminant obstruction
THM_LINE_RANGE = "Thm. 4.5"      # surviving families for Ulrich line bundles
PROP_LOW_DEGREE = "Prop. 4.6"    # explicit line bundles for (0,2,2) and (0,2,4)
REM_OPEN = "Remark 4.7"          # (2,2,2) and (0,4,4): existence left open
THM_RANK_TWO = "Thm. 5.1"        # special rank-two construction, (0,2,2) excluded
THM_COMPLEXITY = "Thm. 1.2"      # complexity: exact 2, bounds on T1, exact 1 on T2

# Registry order doubles as the canonical ordering for citation lists.
ORDERED_LABELS = (
    THM_PICARD,
    THM_COMPLEXITY,
    DEF_ULRICH,
    DEF_COMPLEXITY,
    PROP_NUMERICAL,
    DEF_SPECIAL,
    COR_SPECIAL,
    THM_CB,
    DEF_BIDOUBLE,
    PROP_INVARIANTS,
    REM_CONNECTED,
    LEM_INTERMEDIATE,
    REM_NORM,
    LEM_RESOLUTION,
    COR_PICARD,
    PROP_PAIRS,
    LEM_ODD_RANK,
    LEM_RHO_ONE,
    COR_NO_LINE,
    PROP_QUADRIC,
    THM_LINE_RANGE,
    PROP_LOW_DEGREE,
    REM_OPEN,
    THM_RANK_TWO,
)

ALL_LABELS = frozenset(ORDERED_LABELS)

_RANK = {label: i for i, label in enumerate(ORDERED_LABELS)}


def canonical_order(labels):
    """Deduplicate and sort citation labels into registry order."""
    return tuple(sorted(set(labels), key=_RANK.__getitem__))

