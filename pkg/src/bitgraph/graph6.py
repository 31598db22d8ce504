"""graph6 encoding and decoding for graphs with at most 16 nodes."""

from ..config import MAX_NODES
from ..models import Graph


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _column_pairs(n: int):
    # graph6 walks the upper triangle column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    bits = [(g.adj[i] >> j) & 1 for i, j in _column_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        chars.append(chr(63 + value))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode one header-less graph6 string.

    A single trailing newline is tolerated; anything else after the encoded
    graph is rejected.
    """
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise Graph6ParseError("Empty graph6 string", 0)

    first = ord(text[0])
    if first == 126:
        raise Graph6ParseError(f"Graphs with more than {MAX_NODES} nodes are not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6ParseError(f"Invalid size byte {text[0]!r}", 0)
    n = first - 63
    if n == 0:
        raise Graph6ParseError("Graphs need at least one node", 0)
    if n > MAX_NODES:
        raise Graph6ParseError(f"Graph has {n} nodes, limit is {MAX_NODES}", 0)

    pairs = list(_column_pairs(n))
    body_len = (len(pairs) + 5) // 6
    if len(text) < 1 + body_len:
        raise Graph6ParseError(f"Truncated graph6 body, expected {body_len} bytes", len(text))
    if len(text) > 1 + body_len:
        raise Graph6ParseError("Trailing data after graph6 body", 1 + body_len)

    bits = []
    for offset in range(1, 1 + body_len):
        value = ord(text[offset]) - 63
        if not 0 <= value < 64:
            raise Graph6ParseError(f"Invalid graph6 byte {text[offset]!r}", offset)
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[len(pairs):]):
        raise Graph6ParseError("Nonzero padding bits", body_len)

    edges = [pair for pair, bit in zip(pairs, bits) if bit]
    return Graph.from_edges(n, edges)
