"""Coxeter systems and group elements in the canonical reflection representation.

A system is built from a Coxeter matrix.  Generators act on V = span(alpha_s)
by sigma_s(v) = v - 2*(alpha_s, v)*alpha_s with the bilinear form
(alpha_s, alpha_t) = -cos(pi/m_st) (value -1 for an unbounded label).  The
representation is faithful, so the matrix of an element is the source of
truth; elements store the ShortLex-least reduced word, recovered from the
matrix by the descent recursion: the smallest s with l(s*w) < l(w) is the
smallest s whose column s of the matrix of w^{-1} is a negative root.
"""

from __future__ import annotations

from .errors import (DimensionMismatch, GroupNotFinite, InvalidMatrix,
                     MixedSystems, UnknownGenerator)
from .scalar import INFINITY, FieldContext, FieldScalar, build_field, cos_pi_over, validate_matrix

_DEFAULT_LABELS = "abcdefghijklmnopqrstuvwxyz"

_NORMALIZE_STEP_CAP = 100000


def _first_sign(column) -> int:
    """Sign of the first nonzero coordinate; 0 for the zero vector.

    For root vectors the coordinate signs all agree, so this decides
    positivity with as few exact sign computations as possible.
    """
    for c in column:
        s = c.sign()
        if s:
            return s
    return 0


class CoxeterSystem:
    """A Coxeter matrix together with its field, bilinear form and generator
    matrices.  Identity semantics: elements belong to the system instance
    that created them, and operations never mix systems."""

    def __init__(self, matrix, labels=None):
        self.matrix = validate_matrix(matrix)
        self.rank = len(self.matrix)
        if labels is None:
            labels = _DEFAULT_LABELS[:self.rank]
        labels = tuple(str(l) for l in labels)
        if len(labels) != self.rank:
            raise InvalidMatrix("label count does not match the rank")
        if len(set(labels)) != self.rank or any(not l or l.split() != [l] for l in labels):
            raise InvalidMatrix("labels must be distinct nonempty tokens")
        self.labels = labels
        self._index = {l: i for i, l in enumerate(labels)}
        self.field: FieldContext = build_field(self.matrix)
        n = self.rank
        form = []
        for i in range(n):
            row = []
            for j in range(n):
                m = self.matrix[i][j]
                c = cos_pi_over(self.field, m)
                row.append(-c)
            form.append(tuple(row))
        self.form = tuple(form)
        self._gen_matrices = tuple(self._build_generator_matrix(s) for s in range(n))
        self._identity_matrix = tuple(
            tuple(self.field.one if i == j else self.field.zero for j in range(n))
            for i in range(n))
        self._check_representation()
        self._intern: dict = {}
        self.identity = self._element(())
        self._bfs_layers: list[list[GroupElement]] = [[self.identity]]
        self._bfs_closed = False

    # -- construction checks -------------------------------------------------

    def _build_generator_matrix(self, s: int):
        n, B = self.rank, self.form
        cols = []
        for j in range(n):
            col = [self.field.one if i == j else self.field.zero for i in range(n)]
            col[s] = col[s] - 2 * B[s][j]
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def _matmul(self, X, Y):
        n = self.rank
        return tuple(
            tuple(sum((X[i][k] * Y[k][j] for k in range(n)), self.field.zero)
                  for j in range(n))
            for i in range(n))

    def _check_representation(self) -> None:
        """Exact checks at build time: every generator matrix is an involution
        and preserves the bilinear form."""
        n, B = self.rank, self.form
        for s, M in enumerate(self._gen_matrices):
            assert self._matmul(M, M) == self._identity_matrix, \
                f"generator {self.labels[s]} is not an involution"
            MT = tuple(tuple(M[i][j] for i in range(n)) for j in range(n))
            assert self._matmul(MT, self._matmul(B, M)) == B, \
                f"generator {self.labels[s]} does not preserve the form"

    # -- fast generator actions ----------------------------------------------

    def _apply_gen_vec(self, s: int, vec):
        """sigma_s applied to a vector in simple-root coordinates."""
        B = self.form[s]
        pairing = sum((b * v for b, v in zip(B, vec)), self.field.zero)
        out = list(vec)
        out[s] = out[s] - 2 * pairing
        return tuple(out)

    def _apply_gen_dual(self, s: int, coords):
        """The dual action of sigma_s on a point given by its pairings with
        the simple roots: f_t -> f_t - 2*B[s][t]*f_s."""
        B = self.form[s]
        fs2 = coords[s] + coords[s]
        return tuple(c - b * fs2 for c, b in zip(coords, B))

    def _gen_mul_left(self, s: int, M):
        """M_s * M: replaces row s by row_s - 2 * sum_k B[s][k] * row_k."""
        n, B = self.rank, self.form[s]
        new_row = []
        for j in range(n):
            acc = M[s][j]
            for k in range(n):
                if B[k]:
                    acc = acc - 2 * B[k] * M[k][j]
            # the k == s term above subtracted 2*B[s][s]*M[s][j] = 2*M[s][j]
            new_row.append(acc)
        rows = list(M)
        rows[s] = tuple(new_row)
        return tuple(rows)

    def _gen_mul_right(self, M, s: int):
        """M * M_s: column update X[i][j] -= 2*B[s][j]*X[i][s]."""
        B = self.form[s]
        out = []
        for row in M:
            xis2 = row[s] + row[s]
            out.append(tuple(x - b * xis2 for x, b in zip(row, B)))
        return tuple(out)

    def compose_matrix(self, letters):
        """Matrix of the product of the listed generators, in word order."""
        M = self._identity_matrix
        for s in letters:
            M = self._gen_mul_right(M, s)
        return M

    # -- words and elements ----------------------------------------------------

    def generator(self, i: int) -> "GroupElement":
        if not 0 <= i < self.rank:
            raise UnknownGenerator(f"generator index {i} out of range")
        return self._element((i,))

    @property
    def generators(self) -> tuple["GroupElement", ...]:
        return tuple(self.generator(i) for i in range(self.rank))

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Whitespace-separated generator labels; the empty string (or 'e',
        when 'e' is not itself a label) denotes the identity."""
        text = text.strip()
        if not text or (text == "e" and "e" not in self._index):
            return ()
        letters = []
        for tok in text.split():
            if tok not in self._index:
                raise UnknownGenerator(f"unknown generator label {tok!r}")
            letters.append(self._index[tok])
        return tuple(letters)

    def format_word(self, letters) -> str:
        if not letters:
            return "e"
        return " ".join(self.labels[s] for s in letters)

    def check_letters(self, letters) -> tuple[int, ...]:
        letters = tuple(letters)
        for s in letters:
            if not (isinstance(s, int) and 0 <= s < self.rank):
                raise UnknownGenerator(f"generator index {s!r} out of range")
        return letters

    def _element(self, reduced_word: tuple[int, ...]) -> "GroupElement":
        el = self._intern.get(reduced_word)
        if el is None:
            el = GroupElement(self, reduced_word)
            self._intern[reduced_word] = el
        return el

    def _word_from_inverse_matrix(self, N, step_cap=_NORMALIZE_STEP_CAP):
        """Greedy descent recursion.  N is the matrix of w^{-1}; emits the
        ShortLex-least reduced word of w, or None if the walk does not reach
        the identity within the cap (which cannot happen for group matrices).
        """
        n = self.rank
        word = []
        for _ in range(step_cap):
            descent = None
            for s in range(n):
                sign = _first_sign(tuple(N[i][s] for i in range(n)))
                if sign < 0:
                    descent = s
                    break
            if descent is None:
                if N == self._identity_matrix:
                    return tuple(word)
                return None
            word.append(descent)
            N = self._gen_mul_right(N, descent)
        return None

    def normalize(self, letters) -> "GroupElement":
        """Canonical element for an arbitrary word over the generators."""
        letters = self.check_letters(letters)
        el = self._intern.get(letters)
        if el is not None:
            return el
        # matrix of the inverse word: compose generator matrices left to right
        N = self._identity_matrix
        for s in letters:
            N = self._gen_mul_left(s, N)
        word = self._word_from_inverse_matrix(N)
        assert word is not None, "descent recursion failed on a group matrix"
        return self._element(word)

    def element(self, text: str) -> "GroupElement":
        """Canonical element for a word given as a string of labels."""
        return self.normalize(self.parse_word(text))

    # -- enumeration ------------------------------------------------------------

    def elements_up_to(self, length: int) -> tuple[list[list["GroupElement"]], bool]:
        """BFS layers of elements by length, up to the given length.  Returns
        (layers, closed); closed means the whole group was enumerated.  Layers
        are sorted by word, so the enumeration order is deterministic.

        Canonical words are closed under prefixes (dropping the last letter of
        a length-lex least reduced word leaves a length-lex least reduced
        word), so extending the frontier in word order by ascending
        non-descent letters reaches every new element through its canonical
        word first; duplicates are recognized by exact matrix equality.
        """
        layers = self._bfs_layers
        while not self._bfs_closed and len(layers) <= length:
            frontier = layers[-1]
            new = []
            seen = set()
            for g in frontier:
                M = g.matrix
                for s in range(self.rank):
                    if s in g.right_descents:
                        continue
                    Mh = self._gen_mul_right(M, s)
                    if Mh in seen:
                        continue
                    seen.add(Mh)
                    h = self._element(g.word + (s,))
                    if h._matrix is None:
                        h._matrix = Mh
                    new.append(h)
            if not new:
                self._bfs_closed = True
                break
            layers.append(new)
        return layers[:length + 1], self._bfs_closed and len(layers) <= length + 1

    def count_elements(self, cap: int) -> tuple[int, bool]:
        """Group order by matrix-only breadth-first closure, without building
        elements (so unbounded groups cost no word storage).  Returns
        (count, closed); when the count passes the cap the walk stops with
        closed = False."""
        frontier = [self._identity_matrix]
        count = 1
        while frontier:
            seen = set()
            for M in frontier:
                for s in range(self.rank):
                    if _first_sign(tuple(row[s] for row in M)) < 0:
                        continue
                    Mh = self._gen_mul_right(M, s)
                    seen.add(Mh)
            count += len(seen)
            if count > cap:
                return count, False
            frontier = list(seen)
        return count, True

    def enumerate_elements(self, cap: int) -> list["GroupElement"]:
        """All elements of a finite group, in (length, word) order.  Raises
        GroupNotFinite if more than cap elements appear."""
        horizon = len(self._bfs_layers) - 1
        while True:
            layers, closed = self.elements_up_to(horizon)
            count = sum(len(layer) for layer in layers)
            if self._bfs_closed:
                return [g for layer in self._bfs_layers for g in layer]
            if count > cap:
                raise GroupNotFinite(f"more than {cap} elements enumerated")
            horizon += 1

    # -- misc ---------------------------------------------------------------------

    def pairing(self, coords, vec) -> FieldScalar:
        """<f, v> for a dual point given by coordinates f_s = <f, alpha_s>."""
        if len(coords) != self.rank or len(vec) != self.rank:
            raise DimensionMismatch("coordinate length does not match the rank")
        return sum((c * v for c, v in zip(coords, vec)), self.field.zero)

    def form_value(self, u, v) -> FieldScalar:
        """Bilinear form (u, v) on simple-root coordinates."""
        if len(u) != self.rank or len(v) != self.rank:
            raise DimensionMismatch("coordinate length does not match the rank")
        total = self.field.zero
        for i, ui in enumerate(u):
            if ui:
                row = self.form[i]
                total = total + ui * sum((b * vj for b, vj in zip(row, v)),
                                         self.field.zero)
        return total

    def basis_vector(self, s: int):
        return tuple(self.field.one if i == s else self.field.zero
                     for i in range(self.rank))

    def label_set(self, gens) -> frozenset[int]:
        """Generator subset from an iterable of indices or labels."""
        out = set()
        for g in gens:
            if isinstance(g, str):
                if g not in self._index:
                    raise UnknownGenerator(f"unknown generator label {g!r}")
                out.add(self._index[g])
            elif isinstance(g, int) and 0 <= g < self.rank:
                out.add(g)
            else:
                raise UnknownGenerator(f"generator {g!r} out of range")
        return frozenset(out)

    def format_gens(self, gens) -> str:
        return "{" + ", ".join(self.labels[s] for s in sorted(gens)) + "}"

    def __repr__(self):
        entries = ", ".join(self.labels)
        return f"CoxeterSystem(rank={self.rank}, labels=[{entries}])"


class GroupElement:
    """A group element in canonical form: the ShortLex-least reduced word.

    Instances are interned per system, so equal elements are the same object;
    matrices and descent sets are cached on first use.
    """

    __slots__ = ("system", "word", "_matrix", "_inv_matrix", "_dual_matrix",
                 "_left_descents", "_right_descents", "_hash")

    def __init__(self, system: CoxeterSystem, word: tuple[int, ...]):
        self.system = system
        self.word = word
        self._matrix = None
        self._inv_matrix = None
        self._dual_matrix = None
        self._left_descents = None
        self._right_descents = None
        self._hash = hash((id(system), word))

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def matrix(self):
        if self._matrix is None:
            self._matrix = self.system.compose_matrix(self.word)
        return self._matrix

    @property
    def inverse_matrix(self):
        if self._inv_matrix is None:
            self._inv_matrix = self.system.compose_matrix(tuple(reversed(self.word)))
        return self._inv_matrix

    @property
    def dual_matrix(self):
        """Matrix of the dual action on pairing coordinates: the transpose of
        the matrix of the inverse."""
        if self._dual_matrix is None:
            n = self.system.rank
            Minv = self.inverse_matrix
            self._dual_matrix = tuple(tuple(Minv[j][i] for j in range(n))
                                      for i in range(n))
        return self._dual_matrix

    def _check_same_system(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError("expected a group element")
        if other.system is not self.system:
            raise MixedSystems("elements belong to different systems")

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_same_system(other)
        return self.system.normalize(self.word + other.word)

    def inverse(self) -> "GroupElement":
        return self.system.normalize(tuple(reversed(self.word)))

    @property
    def left_descents(self) -> frozenset[int]:
        """Generators s with l(s*w) < l(w): columns of the inverse matrix that
        are negative roots."""
        if self._left_descents is None:
            n = self.system.rank
            N = self.inverse_matrix
            self._left_descents = frozenset(
                s for s in range(n)
                if _first_sign(tuple(N[i][s] for i in range(n))) < 0)
        return self._left_descents

    @property
    def right_descents(self) -> frozenset[int]:
        """Generators t with l(w*t) < l(w): columns of the matrix that are
        negative roots."""
        if self._right_descents is None:
            n = self.system.rank
            M = self.matrix
            self._right_descents = frozenset(
                t for t in range(n)
                if _first_sign(tuple(M[i][t] for i in range(n))) < 0)
        return self._right_descents

    def act(self, vec):
        """Image of a vector in simple-root coordinates under this element."""
        sys = self.system
        if len(vec) != sys.rank:
            raise DimensionMismatch("vector length does not match the rank")
        out = tuple(vec)
        for s in reversed(self.word):
            out = sys._apply_gen_vec(s, out)
        return out

    def act_dual_coords(self, coords):
        """Dual action on pairing coordinates: <w f, alpha_t> = <f, w^{-1} alpha_t>."""
        sys = self.system
        if len(coords) != sys.rank:
            raise DimensionMismatch("coordinate length does not match the rank")
        out = tuple(coords)
        for s in reversed(self.word):
            out = sys._apply_gen_dual(s, out)
        return out

    def fixes_dual_coords(self, coords) -> bool:
        """Whether the dual action fixes the point, decided coordinate by
        coordinate with early exit."""
        D = self.dual_matrix
        zero = self.system.field.zero
        for t, row in enumerate(D):
            acc = zero
            for d, c in zip(row, coords):
                acc = acc + d * c
            if acc != coords[t]:
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, GroupElement):
            return self.system is other.system and self.word == other.word
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.system.format_word(self.word)

    def __repr__(self):
        return f"<{self}>"


def build_system(matrix, labels=None) -> CoxeterSystem:
    """Build a Coxeter system from a matrix and optional generator labels."""
    return CoxeterSystem(matrix, labels)


def mult(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inv(a: GroupElement) -> GroupElement:
    return a.inverse()


def length(a: GroupElement) -> int:
    return a.length


def normalize(system: CoxeterSystem, letters) -> GroupElement:
    return system.normalize(letters)


def act(w: GroupElement, vec):
    return w.act(vec)


def order_of_product(system: CoxeterSystem, s: int, t: int, cap: int = 64):
    """Multiplicative order of sigma_s * sigma_t by exact matrix powering.

    For a finite label the order must come out equal to m_st; for an
    unbounded label the powers are checked not to close up within the cap
    and INFINITY is returned.
    """
    letters = system.check_letters((s, t))
    m = system.matrix[letters[0]][letters[1]]
    M = system.compose_matrix(letters)
    P = M
    bound = cap if m == INFINITY else m
    for k in range(1, bound + 1):
        if P == system._identity_matrix:
            assert m != INFINITY and k == m, \
                "product order disagrees with the Coxeter matrix"
            return k
        P = system._matmul(P, M)
    assert m == INFINITY, "product order disagrees with the Coxeter matrix"
    return INFINITY


# ---------------------------------------------------------------------------
# group files


def parse_group_file(text: str) -> CoxeterSystem:
    """Parse the plain-text group format:

        rank 3
        labels a b c
        1 3 2
        3 1 3
        2 3 1

    Matrix entries are positive integers or ``inf``.  Blank lines and lines
    starting with '#' are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise InvalidMatrix("group file needs a rank line and a labels line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "rank" or not head[1].isdigit() or int(head[1]) < 1:
        raise InvalidMatrix(f"bad rank line {lines[0]!r}")
    n = int(head[1])
    lab = lines[1].split()
    if not lab or lab[0] != "labels" or len(lab) != n + 1:
        raise InvalidMatrix(f"bad labels line {lines[1]!r}")
    labels = lab[1:]
    if len(lines) != 2 + n:
        raise InvalidMatrix(f"expected {n} matrix rows, found {len(lines) - 2}")
    matrix = []
    for ln in lines[2:]:
        row = []
        for tok in ln.split():
            if tok == "inf":
                row.append(INFINITY)
            elif tok.isdigit():
                row.append(int(tok))
            else:
                raise InvalidMatrix(f"bad matrix entry {tok!r}")
        matrix.append(row)
    return CoxeterSystem(matrix, labels)


def serialize_group(system: CoxeterSystem) -> str:
    lines = [f"rank {system.rank}", "labels " + " ".join(system.labels)]
    for row in system.matrix:
        lines.append(" ".join("inf" if e == INFINITY else str(e) for e in row))
    return "\n".join(lines) + "\n"


def load_group_file(path) -> CoxeterSystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_file(fh.read())
