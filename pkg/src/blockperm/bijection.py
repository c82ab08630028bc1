"""The cycle-to-necklace map and its inverse.

The forward map writes a permutation as disjoint cycles and replaces every
element by the index of the block it belongs to, giving a compatible ornament
with the same cycle structure.  On block-ordered permutations the map is
injective, and its image is characterized by the three invertibility
conditions checked in :mod:`blockperm.ornament`.

The inverse recovers the relative order of any two vertices from their
*signed walks*: read colors along the cycle, flipping the sign after every
descending-colored vertex.  Vertices with equal signed walks form *packets*;
packets linked by the successor map form *orbits*; the set of orbits is the
*template* of the ornament.  Sorting vertices by signed walk fixes the
labeling, and matching each packet to its successor packet (monotonically for
ascending colors, antitonically for descending ones) fixes the permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import lcm

from .core import (
    BlockSpec,
    Permutation,
    classify,
    complement_applicable,
    cycle_decomposition,
    cycle_type,
)
from .ornament import (
    Necklace,
    Ornament,
    descending_counts,
    ensure_invertible,
    fundamental_period,
    is_aperiodic,
    is_compatible,
    necklace_multiplicities,
    necklace_sort_key,
)

__all__ = [
    "VertexRef",
    "SignedWalk",
    "Packet",
    "Orbit",
    "Template",
    "forward",
    "forward_with_labels",
    "signed_walk",
    "compare_vertices",
    "build_template",
    "orbit_cycle_structure",
    "inverse",
    "split_repeating",
    "merge_duplicates",
    "is_derangement_image",
    "pair_fixed_cycles",
    "complement_transfer",
]


@dataclass(frozen=True)
class VertexRef:
    """A vertex of an ornament: necklace index (counting multiplicity) and position."""

    necklace_index: int
    position: int


@dataclass(frozen=True)
class SignedWalk:
    """One full period of the signed color sequence read along a necklace.

    Term ``i`` is ``(-1)**r_i * w_i`` where ``w_i`` is the color seen at step
    ``i`` and ``r_i`` counts descending-colored vertices among steps
    ``0..i-1``.  The stored period is the necklace length when the necklace
    holds an even number of descending-colored vertices, twice that otherwise.
    """

    terms: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.terms)

    @property
    def color(self) -> int:
        return self.terms[0]

    def term(self, i: int) -> int:
        return self.terms[i % len(self.terms)]

    def primitive(self) -> tuple[int, ...]:
        """Shortest prefix whose repetition generates the whole periodic sequence."""
        q = len(self.terms)
        for p in range(1, q + 1):
            if q % p == 0 and self.terms[:p] * (q // p) == self.terms:
                return self.terms[:p]
        raise AssertionError("unreachable")


def signed_walk(v: VertexRef, o: Ornament, b: BlockSpec) -> SignedWalk:
    if not 0 <= v.necklace_index < len(o.necklaces):
        raise ValueError(f"necklace index {v.necklace_index} out of range")
    colors = o.necklaces[v.necklace_index].colors
    m = len(colors)
    if not 0 <= v.position < m:
        raise ValueError(f"position {v.position} out of range for length-{m} necklace")
    total_desc = sum(1 for c in colors if c in b.descending)
    q = m if total_desc % 2 == 0 else 2 * m
    terms = []
    sign = 1
    for step in range(q):
        c = colors[(v.position + step) % m]
        terms.append(sign * c)
        if c in b.descending:
            sign = -sign
    return SignedWalk(tuple(terms))


def _cmp_signed(a: SignedWalk, b: SignedWalk) -> int:
    # agreement through lcm(periods) terms forces equality of the periodic sequences
    qa, qb = a.period_length, b.period_length
    ta, tb = a.terms, b.terms
    for i in range(lcm(qa, qb)):
        x, y = ta[i % qa], tb[i % qb]
        if x != y:
            return -1 if x < y else 1
    return 0


def compare_vertices(u: VertexRef, v: VertexRef, o: Ornament, b: BlockSpec) -> int:
    """-1, 0, or 1 as the label of ``u`` must sort before, with, or after ``v``.

    Zero means the two vertices have identical signed walks (same packet).
    """
    return _cmp_signed(signed_walk(u, o, b), signed_walk(v, o, b))


@dataclass(frozen=True)
class Packet:
    """All vertices of an ornament sharing one signed walk."""

    vertices: tuple[VertexRef, ...]
    walk: SignedWalk

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def color(self) -> int:
        return self.walk.color


@dataclass(frozen=True)
class Orbit:
    """A cyclic sequence of packets closed under the successor-packet map."""

    packets: tuple[Packet, ...]

    @property
    def packet_count(self) -> int:
        return len(self.packets)

    @property
    def packet_size(self) -> int:
        return self.packets[0].size

    def descending_count(self, b: BlockSpec) -> int:
        return sum(1 for pkt in self.packets if pkt.color in b.descending)


@dataclass(frozen=True)
class Template:
    orbits: tuple[Orbit, ...]


def build_template(o: Ornament, b: BlockSpec) -> Template:
    """Group the vertices of ``o`` into packets, then packets into orbits."""
    if not is_compatible(o, b):
        raise ValueError("ornament is not compatible with the blocks")
    members: dict[tuple[int, ...], list[VertexRef]] = {}
    key_of: dict[VertexRef, tuple[int, ...]] = {}
    for ni, nk in enumerate(o.necklaces):
        for pos in range(nk.length):
            v = VertexRef(ni, pos)
            key = signed_walk(v, o, b).primitive()
            members.setdefault(key, []).append(v)
            key_of[v] = key
    packets = {key: Packet(tuple(vs), SignedWalk(key)) for key, vs in members.items()}
    successor: dict[tuple[int, ...], tuple[int, ...]] = {}
    for key, vs in members.items():
        v = vs[0]
        m = o.necklaces[v.necklace_index].length
        successor[key] = key_of[VertexRef(v.necklace_index, (v.position + 1) % m)]

    orbits = []
    placed: set[tuple[int, ...]] = set()
    for key in members:
        if key in placed:
            continue
        chain = [key]
        placed.add(key)
        nxt = successor[key]
        while nxt != key:
            chain.append(nxt)
            placed.add(nxt)
            nxt = successor[nxt]
        best = 0
        for i in range(1, len(chain)):
            if _cmp_signed(packets[chain[i]].walk, packets[chain[best]].walk) < 0:
                best = i
        chain = chain[best:] + chain[:best]
        orbit_packets = tuple(packets[ky] for ky in chain)
        sizes = {pkt.size for pkt in orbit_packets}
        assert len(sizes) == 1, "packet sizes must agree along an orbit"
        orbits.append(Orbit(orbit_packets))
    orbits.sort(key=cmp_to_key(lambda x, y: _cmp_signed(x.packets[0].walk, y.packets[0].walk)))
    return Template(tuple(orbits))


def orbit_cycle_structure(orbit: Orbit, b: BlockSpec) -> tuple[int, ...]:
    """Cycle lengths the orbit contributes to the unique block-ordered preimage.

    With ``x`` packets of size ``y`` and ``d`` descending-colored packets:
    ``d`` even gives ``y`` cycles of length ``x``; ``d`` odd gives cycles of
    length ``2x``, plus a single length-``x`` cycle when ``y`` is odd.
    """
    x, y = orbit.packet_count, orbit.packet_size
    if orbit.descending_count(b) % 2 == 0:
        return (x,) * y
    if y % 2 == 0:
        return (2 * x,) * (y // 2)
    return (2 * x,) * ((y - 1) // 2) + (x,)


def _min_rotation_index(t: tuple[int, ...]) -> int:
    best = 0
    for r in range(1, len(t)):
        if t[r:] + t[:r] < t[best:] + t[:best]:
            best = r
    return best


def forward_with_labels(
    p: Permutation, b: BlockSpec
) -> tuple[Ornament, tuple[tuple[int, ...], ...]]:
    """Forward map keeping, per necklace position, the original element it came from."""
    if p.n != b.n:
        raise ValueError(f"permutation size {p.n} does not match block total {b.n}")
    pairs = []
    for cyc in cycle_decomposition(p):
        colors = tuple(b.block_of(x) for x in cyc)
        r = _min_rotation_index(colors)
        pairs.append((colors[r:] + colors[:r], cyc[r:] + cyc[:r]))
    pairs.sort(key=lambda cl: (-len(cl[0]), cl[0], cl[1]))
    ornament = Ornament(tuple(Necklace(colors) for colors, _ in pairs))
    return ornament, tuple(labels for _, labels in pairs)


def forward(p: Permutation, b: BlockSpec) -> Ornament:
    """Replace every element of every cycle of ``p`` by the block it lies in."""
    return forward_with_labels(p, b)[0]


def inverse(o: Ornament, b: BlockSpec) -> Permutation:
    """The unique block-ordered permutation whose forward image is ``o``.

    Raises :class:`~blockperm.ornament.NotInvertible` (naming the violated
    condition) when no such permutation exists.
    """
    ensure_invertible(o, b)
    template = build_template(o, b)
    pairs: list[tuple[Packet, Packet]] = []
    for orbit in template.orbits:
        x = orbit.packet_count
        for i, pkt in enumerate(orbit.packets):
            pairs.append((pkt, orbit.packets[(i + 1) % x]))
    pairs.sort(key=cmp_to_key(lambda a, c: _cmp_signed(a[0].walk, c[0].walk)))
    labels: dict[Packet, range] = {}
    next_label = 1
    for pkt, _ in pairs:
        labels[pkt] = range(next_label, next_label + pkt.size)
        next_label += pkt.size
    images = [0] * b.n
    for pkt, succ in pairs:
        src, dst = labels[pkt], labels[succ]
        if pkt.color in b.descending:
            for j, lab in enumerate(src):
                images[lab - 1] = dst[pkt.size - 1 - j]
        else:
            for j, lab in enumerate(src):
                images[lab - 1] = dst[j]
    return Permutation(tuple(images))


def split_repeating(o: Ornament, b: BlockSpec) -> Ornament:
    """Replace every 2-repeating necklace by two copies of its fundamental period.

    On invertible ornaments this lands in the aperiodic ones; composed with
    the forward map it realizes the correspondence between block-ordered
    permutations and aperiodic ornaments.
    """
    ensure_invertible(o, b)
    out = []
    for nk in o.necklaces:
        info = fundamental_period(nk)
        if info.repeats == 1:
            out.append(nk)
        else:
            out.extend([Necklace(info.period)] * 2)
    return Ornament.of(out)


def merge_duplicates(o: Ornament, b: BlockSpec) -> Ornament:
    """Undo :func:`split_repeating`: pair up copies of odd-descending necklaces.

    Every distinct necklace with an odd number of descending-colored vertices
    and multiplicity ``c`` becomes ``c // 2`` doubled (2-repeating) necklaces,
    plus one single copy when ``c`` is odd.  The result is invertible.
    """
    if not is_aperiodic(o, b):
        raise ValueError("ornament is not aperiodic and compatible")
    out = []
    for nk, mult in necklace_multiplicities(o):
        if descending_counts(nk, b).total % 2 == 1:
            if mult % 2 == 1:
                out.append(nk)
            doubled = Necklace(nk.colors * 2)
            out.extend([doubled] * (mult // 2))
        else:
            out.extend([nk] * mult)
    return Ornament.of(out)


def is_derangement_image(o: Ornament, b: BlockSpec) -> bool:
    """True when the aperiodic ornament ``o`` corresponds to a derangement.

    Equivalent to: no 1-cycle of an ascending color, and an even number of
    1-cycles of each descending color.
    """
    if not is_aperiodic(o, b):
        raise ValueError("ornament is not aperiodic and compatible")
    for nk, mult in necklace_multiplicities(o):
        if nk.length != 1:
            continue
        color = nk.colors[0]
        if color not in b.descending or mult % 2 == 1:
            return False
    return True


def pair_fixed_cycles(o: Ornament, b: BlockSpec) -> Ornament:
    """Merge pairs of identical descending-colored 1-cycles into monochromatic 2-cycles."""
    if not is_derangement_image(o, b):
        raise ValueError("ornament does not correspond to a derangement")
    out = []
    for nk, mult in necklace_multiplicities(o):
        if nk.length == 1:
            color = nk.colors[0]
            out.extend([Necklace((color, color))] * (mult // 2))
        else:
            out.extend([nk] * mult)
    return Ornament.of(out)


def complement_transfer(p: Permutation, b: BlockSpec) -> Permutation:
    """Carry ``p`` to a block-ordered permutation for the complemented descending set.

    When the cycle type of ``p`` has all odd parts distinct and no part equal
    to 2 mod 4, the forward image is reused verbatim under the complemented
    blocks and the cycle type is preserved.  Otherwise ``p`` must be an
    involution: its aperiodic ornament is re-merged under the complemented
    blocks, which preserves being an involution (though 1-cycles and
    monochromatic 2-cycles may trade places).  Applying the map twice returns
    ``p``.
    """
    if not classify(p, b).is_block_ordered:
        raise ValueError("permutation is not block-ordered for these blocks")
    comp = b.complement()
    if complement_applicable(cycle_type(p)):
        return inverse(forward(p, b), comp)
    if p.is_involution():
        aperiodic = split_repeating(forward(p, b), b)
        return inverse(merge_duplicates(aperiodic, comp), comp)
    raise ValueError(
        "cycle type has repeated odd parts or a part equal to 2 mod 4, "
        "and the permutation is not an involution"
    )
