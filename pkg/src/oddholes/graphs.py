"""Immutable simple graphs with bitset adjacency, plus graph6 I/O.

Vertices are always 0..n-1.  Adjacency is stored as one Python int bitmask
per vertex, which makes the induced-ness and neighborhood tests that
dominate every detector cheap set operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "label")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), label: str = ""):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj = tuple(masks)
        self.label = label

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                out.append((u, v))
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_in(self, v: int, vertex_mask: int) -> int:
        """Neighbors of v inside vertex_mask, as a mask."""
        return self.adj[v] & vertex_mask

    def relabel(self, label: str) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = self.adj
        g.label = label
        return g

    def without_edges(self, removed: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        drop = [0] * self.n
        for u, v in removed:
            if not self.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge")
            drop[u] |= 1 << v
            drop[v] |= 1 << u
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = tuple(a & ~d for a, d in zip(self.adj, drop))
        g.label = label or self.label
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph n={self.n} m={self.m}{tag}>"

    # -- connectivity --------------------------------------------------

    def component_mask(self, start: int, allowed: int | None = None) -> int:
        """Mask of the component containing start, restricted to allowed."""
        if allowed is None:
            allowed = self.full_mask
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v] & allowed
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self, allowed: int | None = None) -> bool:
        if allowed is None:
            allowed = self.full_mask
        if allowed == 0:
            return True
        start = (allowed & -allowed).bit_length() - 1
        return self.component_mask(start, allowed) == allowed


def from_edges(n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    return Graph(n, edges, label)


# -- derived operations ------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[s] with vertices re-indexed 0..|s|-1.

    Returns (subgraph, old_ids) where old_ids[new] = old; certificates must
    always be reported in original ids, so the map is part of the result.
    """
    old_ids = tuple(sorted(set(s)))
    for v in old_ids:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(old_ids)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph(len(old_ids), edges, label=g.label), old_ids


def neighbors_of_set(g: Graph, h: Iterable[int]) -> set[int]:
    """N(h): vertices outside h with at least one neighbor in h."""
    hm = mask_of(h)
    if hm & ~g.full_mask:
        raise ValueError("vertex out of range")
    out = 0
    for v in bits(hm):
        out |= g.adj[v]
    return set(bits(out & ~hm))


def closed_neighborhood(g: Graph, h: Iterable[int]) -> set[int]:
    hm = mask_of(h)
    return set(bits(hm)) | neighbors_of_set(g, bits(hm))


def path_flaw(g: Graph, vs: Sequence[int]) -> str | None:
    """Reason vs is not an induced path of g, or None if it is one."""
    if len(vs) == 0:
        return "empty"
    if len(set(vs)) != len(vs):
        return "repeated vertex"
    for v in vs:
        if not 0 <= v < g.n:
            return "vertex out of range"
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            return f"missing edge ({a},{b})"
    for i in range(len(vs)):
        for j in range(i + 2, len(vs)):
            if g.has_edge(vs[i], vs[j]):
                return f"chord ({vs[i]},{vs[j]})"
    return None


def is_induced_path(g: Graph, vs: Sequence[int]) -> bool:
    return path_flaw(g, vs) is None


def is_path(g: Graph, vs: Sequence[int]) -> bool:
    if len(vs) == 0 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


# -- path / cycle / hole values ---------------------------------------


@dataclass(frozen=True)
class Path:
    """A path as an ordered vertex sequence; length is the edge count."""

    vertices: tuple[int, ...]
    induced: bool

    def __len__(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


def make_path(g: Graph, vs: Sequence[int]) -> Path:
    if not is_path(g, vs):
        raise ValueError(f"not a path of g: {list(vs)}")
    return Path(tuple(vs), induced=is_induced_path(g, vs))


@dataclass(frozen=True)
class Cycle:
    """A cycle as a cyclic vertex sequence plus its host-graph chords."""

    vertices: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length >= 4."""

    cycle: Cycle

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.cycle.vertices

    @property
    def length(self) -> int:
        return self.cycle.length

    @property
    def odd(self) -> bool:
        return self.cycle.length % 2 == 1

    def __len__(self) -> int:
        return self.cycle.length


def canonical_cycle(vs: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex comes first, then the lesser neighbor."""
    vs = list(vs)
    k = len(vs)
    i = vs.index(min(vs))
    fwd = [vs[(i + j) % k] for j in range(k)]
    rev = [vs[(i - j) % k] for j in range(k)]
    return tuple(fwd if fwd[1] <= rev[1] else rev)


def make_cycle(g: Graph, vs: Sequence[int]) -> Cycle:
    vs = list(vs)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a cycle: {vs}")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"missing cycle edge ({a},{b})")
    k = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    chords = []
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            if g.has_edge(vs[i], vs[j]):
                chords.append((min(vs[i], vs[j]), max(vs[i], vs[j])))
    return Cycle(canonical_cycle(vs), tuple(sorted(set(chords))))


def make_hole(g: Graph, vs: Sequence[int]) -> Hole:
    c = make_cycle(g, vs)
    if c.length < 4:
        raise ValueError(f"hole must have length >= 4, got {c.length}")
    if c.chords:
        raise ValueError(f"cycle has chords {c.chords}, not a hole")
    return Hole(c)


def is_hole(g: Graph, vs: Sequence[int]) -> bool:
    try:
        make_hole(g, vs)
        return True
    except ValueError:
        return False


# -- graph6 ------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; .offset is the byte position of the flaw."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _g6_check_bytes(text: str, start: int) -> list[int]:
    vals = []
    for i, ch in enumerate(text):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", start + i)
        vals.append(o - 63)
    return vals


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (standard 6-bit upper-triangle encoding)."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 line", 0)
    vals = _g6_check_bytes(text, 0)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
        body_off = 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        body_off = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
        body_off = 8
    else:
        raise Graph6Error("malformed graph6 header", 1)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(
            f"truncated payload: need {need} data bytes, got {len(body)}",
            body_off + len(body),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after payload", body_off + need)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(idx, 6)
            if body[byte] >> (5 - bit) & 1:
                edges.append((i, j))
            idx += 1
    # padding bits must be zero for a canonical line; tolerate but verify range
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (minimal header, zero padding)."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        header = chr(126) + chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    bits_out = []
    for j in range(1, n):
        for i in range(j):
            bits_out.append(1 if g.has_edge(i, j) else 0)
    while len(bits_out) % 6:
        bits_out.append(0)
    chars = []
    for k in range(0, len(bits_out), 6):
        val = 0
        for b in bits_out[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return header + "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(from_graph6(line))
    return out


def to_dot(g: Graph, name: str = "G") -> str:
    """Best-effort DOT export for human inspection."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
