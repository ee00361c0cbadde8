# -*- coding: utf-8 -*-
""" Webs: oriented planar trivalent graphs in a disk, stored as combinatorial maps.

Dart layout of a web with V vertices, domain word of length m and codomain word of length n:

* darts 3v, 3v+1, 3v+2 belong to vertex v, listed counterclockwise;
* darts 3V .. 3V+m-1 are the left boundary points, top to bottom (the domain);
* darts 3V+m .. 3V+m+n-1 are the right boundary points, top to bottom (the codomain).

``alpha`` pairs every dart with the other end of its edge. A + strand runs from left to right.
"""

from __future__ import absolute_import, division, unicode_literals

import logging
from collections import deque

from resources.lib.spider.exceptions import InvalidArgumentException, InvalidWebException, InvalidWordException, WordMismatchException
from resources.lib.spider.qring import LaurentPoly, qint

_LOGGER = logging.getLogger(__name__)

PLUS = 1
MINUS = -1

SOURCE = 'source'
SINK = 'sink'

_KIND_CHARS = {SOURCE: 'o', SINK: 'i'}
_CHAR_KINDS = {'o': SOURCE, 'i': SINK}

STRATEGY_SMALLEST = 'smallest'
STRATEGY_LEFTMOST = 'leftmost'
STRATEGIES = (STRATEGY_SMALLEST, STRATEGY_LEFTMOST)

EMPTY_KEY = '>;;;;0'


class Word(tuple):
    """ A sequence of orientations, + (1) or - (-1) """

    def __new__(cls, signs=()):
        if isinstance(signs, str):
            values = []
            for char in signs:
                if char == '+':
                    values.append(PLUS)
                elif char == '-':
                    values.append(MINUS)
                else:
                    raise InvalidWordException('Unexpected character %r in word %r' % (char, signs))
            signs = values
        signs = tuple(signs)
        for sign in signs:
            if sign not in (PLUS, MINUS):
                raise InvalidWordException('Unexpected sign %r' % (sign,))
        return super(Word, cls).__new__(cls, signs)

    def __getitem__(self, item):
        result = super(Word, self).__getitem__(item)
        if isinstance(item, slice):
            return Word(result)
        return result

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def dual(self):
        """ Reverse the word and flip every sign """
        return Word(-sign for sign in reversed(self))

    def weight(self):
        """ The pair (number of +, number of -) """
        return (sum(1 for sign in self if sign == PLUS), sum(1 for sign in self if sign == MINUS))

    def is_segregated(self):
        """ True when no - comes before a + """
        return all(not (first == MINUS and second == PLUS) for first, second in zip(self, self[1:]))

    def segregated(self):
        """ The word with the same weight and all + in front """
        plus, minus = self.weight()
        return Word((PLUS,) * plus + (MINUS,) * minus)

    def __str__(self):
        return ''.join('+' if sign == PLUS else '-' for sign in self)

    def __repr__(self):
        return 'Word(%r)' % str(self)


def weight_lower(lower, upper):
    """ Check whether wt(lower) < wt(upper) in the order generated by the simple roots (2,-1) and (-1,2).

    :type lower: Word
    :type upper: Word
    :rtype: bool
    """
    (low_a, low_b), (up_a, up_b) = lower.weight(), upper.weight()
    delta_a, delta_b = up_a - low_a, up_b - low_b
    first, second = 2 * delta_a + delta_b, delta_a + 2 * delta_b
    if first % 3 or second % 3:
        return False
    first, second = first // 3, second // 3
    return first >= 0 and second >= 0 and (first, second) != (0, 0)


class Web:
    """ An isotopy class of a web, as a boundary-anchored combinatorial map """

    def __init__(self, domain, codomain, kinds, alpha, loops=0, check=True):
        """
        :type domain: Word | str
        :type codomain: Word | str
        :type kinds: tuple[str]
        :type alpha: tuple[int]
        :type loops: int
        :type check: bool
        """
        self.domain = Word(domain)
        self.codomain = Word(codomain)
        self.kinds = tuple(kinds)
        self.alpha = tuple(alpha)
        self.loops = loops
        self._key = None
        if check:
            self.validate()

    @property
    def num_vertices(self):
        """ Number of trivalent vertices """
        return len(self.kinds)

    def left_dart(self, index):
        """ Dart of the left boundary point with the given index """
        return 3 * len(self.kinds) + index

    def right_dart(self, index):
        """ Dart of the right boundary point with the given index """
        return 3 * len(self.kinds) + len(self.domain) + index

    def is_boundary(self, dart):
        """ True for boundary darts """
        return dart >= 3 * len(self.kinds)

    def is_out(self, dart):
        """ True when the edge at this dart points away from it """
        first = 3 * len(self.kinds)
        if dart < first:
            return self.kinds[dart // 3] == SOURCE
        index = dart - first
        if index < len(self.domain):
            return self.domain[index] == PLUS
        return self.codomain[index - len(self.domain)] == MINUS

    def sigma(self, dart):
        """ Next dart counterclockwise around the vertex (or around the outside of the disk) """
        first = 3 * len(self.kinds)
        if dart < first:
            return 3 * (dart // 3) + (dart + 1) % 3
        cycle = self._boundary_cycle()
        return cycle[(cycle.index(dart) + 1) % len(cycle)]

    def _boundary_cycle(self):
        left = [self.left_dart(i) for i in range(len(self.domain))]
        right = [self.right_dart(j) for j in range(len(self.codomain))]
        return left[:1] + right + left[:0:-1]

    def validate(self):
        """ Check trivalence, orientations and planarity of the rotation system """
        num_darts = 3 * len(self.kinds) + len(self.domain) + len(self.codomain)
        if len(self.alpha) != num_darts:
            raise InvalidWebException('Expected %d darts, got %d' % (num_darts, len(self.alpha)))
        for kind in self.kinds:
            if kind not in (SOURCE, SINK):
                raise InvalidWebException('Unknown vertex kind %r' % kind)
        for dart, partner in enumerate(self.alpha):
            if not 0 <= partner < num_darts or partner == dart or self.alpha[partner] != dart:
                raise InvalidWebException('Dart %d is not properly paired' % dart)
            if self.is_out(dart) == self.is_out(partner):
                raise InvalidWebException('Edge %d-%d is not consistently oriented' % (dart, partner))
        if self.loops < 0:
            raise InvalidWebException('Negative number of loops')
        if not num_darts:
            return

        # Euler characteristic per connected component of the map on the sphere
        parent = list(range(num_darts))

        def find(item):
            while parent[item] != item:
                parent[item] = parent[parent[item]]
                item = parent[item]
            return item

        def union(first, second):
            parent[find(first)] = find(second)

        boundary = list(range(3 * len(self.kinds), num_darts))
        for dart in range(num_darts):
            union(dart, self.alpha[dart])
            if dart < 3 * len(self.kinds):
                union(dart, 3 * (dart // 3))
        for dart in boundary[1:]:
            union(dart, boundary[0])

        components = len({find(dart) for dart in range(num_darts)})
        vertices = len(self.kinds) + (1 if boundary else 0)
        edges = num_darts // 2
        faces = len(self._orbits())
        if vertices - edges + faces != 2 * components:
            raise InvalidWebException('Rotation system is not planar (V-E+F=%d, components=%d)' % (vertices - edges + faces, components))

    def _orbits(self):
        """ Orbits of sigma after alpha, each listed from its smallest dart """
        seen = set()
        orbits = []
        for start in range(len(self.alpha)):
            if start in seen:
                continue
            orbit = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                orbit.append(dart)
                dart = self.sigma(self.alpha[dart])
            orbits.append(tuple(orbit))
        return orbits

    def faces(self):
        """ Internal faces as (size, darts), followed by (0, ()) for every vertexless circle.

        A face is internal when it does not touch the boundary of the disk. Components without
        boundary points are looked at on the sphere, so all of their faces count.
        """
        result = [(len(orbit), orbit) for orbit in self._orbits() if not any(self.is_boundary(dart) for dart in orbit)]
        result.extend((0, ()) for _ in range(self.loops))
        return result

    def is_non_elliptic(self):
        """ True when there is no circle, digon or square face """
        return not any(size <= 4 for size, _ in self.faces())

    def key(self):
        """ The canonical encoding of the isotopy class """
        if self._key is None:
            self._key = _encode(self)
        return self._key

    @classmethod
    def from_key(cls, key):
        """ Rebuild a web from its canonical encoding """
        try:
            return _decode(key)
        except (ValueError, KeyError, IndexError) as exc:
            raise InvalidWebException('Malformed web encoding %r: %s' % (key, exc))

    def __eq__(self, other):
        if not isinstance(other, Web):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'Web(%r)' % self.key()


def _encode(web):
    """ Breadth-first traversal from the boundary; closed components use the least encoding over all start darts """
    first = 3 * len(web.kinds)
    left_count = len(web.domain)

    def traverse(labels, order, seeds):
        codes = []

        def code(dart):
            if dart >= first:
                index = dart - first
                return 'L%d' % index if index < left_count else 'R%d' % (index - left_count)
            vertex, slot = divmod(dart, 3)
            if vertex not in labels:
                labels[vertex] = (len(order), slot)
                order.append(vertex)
            label, entry = labels[vertex]
            return '%d.%d' % (label, (slot - entry) % 3)

        for dart in seeds:
            codes.append(code(web.alpha[dart]))
        records = []
        position = 0
        while position < len(order):
            vertex = order[position]
            _, entry = labels[vertex]
            parts = [code(web.alpha[3 * vertex + (entry + step) % 3]) for step in range(3)]
            records.append(_KIND_CHARS[web.kinds[vertex]] + ':' + ','.join(parts))
            position += 1
        return codes, records

    labels = {}
    order = []
    boundary_codes, records = traverse(labels, order, range(first, len(web.alpha)))

    closed = []
    remaining = [vertex for vertex in range(len(web.kinds)) if vertex not in labels]
    done = set()
    for vertex in remaining:
        if vertex in done:
            continue
        component = _component(web, vertex)
        done.update(component)
        best = None
        for start in sorted(component):
            for slot in range(3):
                local_labels = {start: (0, slot)}
                _, local_records = traverse(local_labels, [start], ())
                candidate = '/'.join(local_records)
                if best is None or candidate < best:
                    best = candidate
        closed.append(best)

    return '%s>%s;%s;%s;%s;%d' % (web.domain, web.codomain, ','.join(boundary_codes), '/'.join(records),
                                  '|'.join(sorted(closed)), web.loops)


def _component(web, vertex):
    """ Vertices connected to the given vertex """
    first = 3 * len(web.kinds)
    seen = {vertex}
    queue = deque([vertex])
    while queue:
        current = queue.popleft()
        for slot in range(3):
            partner = web.alpha[3 * current + slot]
            if partner < first and partner // 3 not in seen:
                seen.add(partner // 3)
                queue.append(partner // 3)
    return seen


def _decode(key):
    head, boundary, vertices, closed, loops = key.split(';')
    domain, codomain = head.split('>')
    domain, codomain = Word(domain), Word(codomain)
    blocks = [vertices.split('/') if vertices else []]
    blocks.extend(component.split('/') for component in (closed.split('|') if closed else []))
    total = sum(len(block) for block in blocks)
    first = 3 * total

    def dart(code, base):
        if code[0] == 'L':
            return first + int(code[1:])
        if code[0] == 'R':
            return first + len(domain) + int(code[1:])
        label, slot = code.split('.')
        return 3 * (base + int(label)) + int(slot)

    alpha = [None] * (first + len(domain) + len(codomain))
    for index, code in enumerate(boundary.split(',') if boundary else []):
        alpha[first + index] = dart(code, 0)
    kinds = []
    base = 0
    for block in blocks:
        for offset, record in enumerate(block):
            kind, codes = record.split(':')
            kinds.append(_CHAR_KINDS[kind])
            for slot, code in enumerate(codes.split(',')):
                alpha[3 * (base + offset) + slot] = dart(code, base)
        base += len(block)
    if None in alpha:
        raise ValueError('unpaired dart')
    return Web(domain, codomain, kinds, alpha, loops=int(loops))


def _elementary(domain, codomain, kinds, edges):
    """ Build a web from edges given as pairs of ('v', vertex, slot), ('L', index) or ('R', index) """
    domain, codomain = Word(domain), Word(codomain)
    first = 3 * len(kinds)

    def dart(ref):
        if ref[0] == 'v':
            return 3 * ref[1] + ref[2]
        if ref[0] == 'L':
            return first + ref[1]
        return first + len(domain) + ref[1]

    alpha = [None] * (first + len(domain) + len(codomain))
    for one, other in edges:
        alpha[dart(one)], alpha[dart(other)] = dart(other), dart(one)
    return Web(domain, codomain, kinds, alpha)


def empty():
    """ The empty web on the empty word """
    return Web(Word(), Word(), (), ())


def identity(word):
    """ Parallel strands on a word """
    word = Word(word)
    return _elementary(word, word, (), [(('L', i), ('R', i)) for i in range(len(word))])


def cup(sign):
    """ The turnback from the empty word to (sign, -sign) """
    return _elementary(Word(), Word((sign, -sign)), (), [(('R', 0), ('R', 1))])


def cap(sign):
    """ The turnback from (sign, -sign) to the empty word """
    return _elementary(Word((sign, -sign)), Word(), (), [(('L', 0), ('L', 1))])


def ysplit(sign):
    """ The trivalent vertex from (sign) to (-sign, -sign) """
    kind = SINK if sign == PLUS else SOURCE
    return _elementary(Word((sign,)), Word((-sign, -sign)), (kind,),
                       [(('v', 0, 0), ('L', 0)), (('v', 0, 1), ('R', 1)), (('v', 0, 2), ('R', 0))])


def ymerge(sign):
    """ The trivalent vertex from (sign, sign) to (-sign) """
    kind = SINK if sign == PLUS else SOURCE
    return _elementary(Word((sign, sign)), Word((-sign,)), (kind,),
                       [(('v', 0, 0), ('R', 0)), (('v', 0, 1), ('L', 0)), (('v', 0, 2), ('L', 1))])


def hweb(first, second):
    """ The H-shaped web from (first, second) to (second, first) """
    if first == second:
        return compose(ymerge(first), ysplit(-first))
    top = SINK if first == PLUS else SOURCE
    bottom = SOURCE if top == SINK else SINK
    return _elementary(Word((first, second)), Word((second, first)), (top, bottom),
                       [(('v', 0, 0), ('R', 0)), (('v', 0, 1), ('L', 0)), (('v', 0, 2), ('v', 1, 1)),
                        (('v', 1, 0), ('R', 1)), (('v', 1, 2), ('L', 1))])


def smoothing(first, second):
    """ The oriented resolution of a crossing between strands with the given signs """
    if first == second:
        return identity(Word((first, second)))
    return compose(cap(first), cup(second))


def padded(piece, before, after):
    """ Tensor a piece with identities above and below """
    result = piece
    if before:
        result = tensor(identity(before), result)
    if after:
        result = tensor(result, identity(after))
    return result


def compose(first, second):
    """ Glue the right boundary of the first web to the left boundary of the second (diagrammatic order).

    :type first: Web
    :type second: Web
    :rtype: Web
    """
    if first.codomain != second.domain:
        raise WordMismatchException(first.codomain, second.domain)
    verts_a, verts_b = len(first.kinds), len(second.kinds)
    darts_a, darts_b = 3 * verts_a, 3 * verts_b
    start = 3 * (verts_a + verts_b)
    left_count, glued, right_count = len(first.domain), len(first.codomain), len(second.codomain)
    glued_a = darts_a + left_count
    glued_b = darts_b

    def new_a(dart):
        return dart if dart < darts_a else start + dart - darts_a

    def new_b(dart):
        return darts_a + dart if dart < darts_b else start + left_count + dart - darts_b - glued

    visited = [False] * glued

    def follow(on_first, dart):
        while True:
            if on_first:
                partner = first.alpha[dart]
                if glued_a <= partner < glued_a + glued:
                    index = partner - glued_a
                    visited[index] = True
                    on_first, dart = False, glued_b + index
                    continue
                return new_a(partner)
            partner = second.alpha[dart]
            if glued_b <= partner < glued_b + glued:
                index = partner - glued_b
                visited[index] = True
                on_first, dart = True, glued_a + index
                continue
            return new_b(partner)

    alpha = [None] * (start + left_count + right_count)
    for dart in range(darts_a + left_count):
        alpha[new_a(dart)] = follow(True, dart)
    for dart in list(range(darts_b)) + list(range(darts_b + glued, darts_b + glued + right_count)):
        alpha[new_b(dart)] = follow(False, dart)

    loops = first.loops + second.loops
    for index in range(glued):
        if visited[index]:
            continue
        loops += 1
        current = index
        while not visited[current]:
            visited[current] = True
            current = second.alpha[glued_b + current] - glued_b
            visited[current] = True
            current = first.alpha[glued_a + current] - glued_a

    return Web(first.domain, second.codomain, first.kinds + second.kinds, alpha, loops=loops, check=False)


def tensor(top, bottom):
    """ Stack two webs, the first one above the second

    :type top: Web
    :type bottom: Web
    :rtype: Web
    """
    verts_a = len(top.kinds)
    darts_a, darts_b = 3 * verts_a, 3 * len(bottom.kinds)
    start = darts_a + darts_b
    left_a, left_b = len(top.domain), len(bottom.domain)
    right_a = len(top.codomain)

    def new_a(dart):
        if dart < darts_a:
            return dart
        index = dart - darts_a
        if index < left_a:
            return start + index
        return start + left_a + left_b + index - left_a

    def new_b(dart):
        if dart < darts_b:
            return darts_a + dart
        index = dart - darts_b
        if index < left_b:
            return start + left_a + index
        return start + left_a + left_b + right_a + index - left_b

    alpha = [None] * (len(top.alpha) + len(bottom.alpha))
    for dart, partner in enumerate(top.alpha):
        alpha[new_a(dart)] = new_a(partner)
    for dart, partner in enumerate(bottom.alpha):
        alpha[new_b(dart)] = new_b(partner)
    return Web(top.domain + bottom.domain, top.codomain + bottom.codomain, top.kinds + bottom.kinds, alpha,
               loops=top.loops + bottom.loops, check=False)


def dual(web):
    """ Rotate a web by 180 degrees

    :type web: Web
    :rtype: Web
    """
    first = 3 * len(web.kinds)
    left_count, right_count = len(web.domain), len(web.codomain)

    def new(dart):
        if dart < first:
            return dart
        index = dart - first
        if index < left_count:
            return first + right_count + left_count - 1 - index
        return first + right_count - 1 - (index - left_count)

    alpha = [None] * len(web.alpha)
    for dart, partner in enumerate(web.alpha):
        alpha[new(dart)] = new(partner)
    return Web(web.codomain.dual(), web.domain.dual(), web.kinds, alpha, loops=web.loops, check=False)


# Reductions are pure functions of the canonical encoding
_REDUCTIONS = {}
_CLOSED_VALUES = {}


def clear_caches(keep=(), strategy=STRATEGY_SMALLEST):
    """ Forget memoized reductions, except that every web in ``keep`` is remembered as its own normal form.

    :param keep:                Non-elliptic webs still in play.
    :param str strategy:        The strategy the kept entries are stored under.
    """
    _REDUCTIONS.clear()
    _CLOSED_VALUES.clear()
    for web in keep:
        key = web.key()
        _REDUCTIONS[(key, strategy)] = {key: (web, LaurentPoly(1))}


def cache_size():
    """ Number of memoized reductions and closed web values """
    return len(_REDUCTIONS) + len(_CLOSED_VALUES)


def reduce_web(web, strategy=STRATEGY_SMALLEST):
    """ Expand a web over the non-elliptic basis with the circle, digon and square relations.

    :param Web web:             The web to reduce.
    :param str strategy:        Order in which faces are rewritten, smallest or leftmost.
    :returns:                   A map from canonical encoding to (non-elliptic web, coefficient).
    :rtype: dict[str, tuple[Web, LaurentPoly]]
    """
    if strategy not in STRATEGIES:
        raise InvalidArgumentException('Unknown rewrite strategy %r' % strategy)
    key = web.key()
    cached = _REDUCTIONS.get((key, strategy))
    if cached is not None:
        return cached

    head, boundary, vertices, closed, loops = key.split(';')
    scalar = qint(3) ** int(loops)
    for component in closed.split('|') if closed else []:
        scalar = scalar * _closed_value(component, strategy)

    result = {}
    if not scalar.is_zero():
        open_web = Web.from_key(';'.join((head, boundary, vertices, '', '0')))
        face = _pick_face(open_web, strategy)
        if face is None:
            result[open_web.key()] = (open_web, scalar)
        else:
            for piece, coeff in _rewrite(open_web, face):
                for term_key, (term, term_coeff) in reduce_web(piece, strategy).items():
                    _accumulate(result, term_key, term, scalar * coeff * term_coeff)

    _REDUCTIONS[(key, strategy)] = result
    return result


def _accumulate(result, key, web, coeff):
    if key in result:
        coeff = result[key][1] + coeff
    if coeff.is_zero():
        result.pop(key, None)
    else:
        result[key] = (web, coeff)


def _closed_value(component, strategy):
    """ Evaluate a connected closed web, given by its component encoding, to a Laurent polynomial """
    cached = _CLOSED_VALUES.get((component, strategy))
    if cached is not None:
        return cached
    web = Web.from_key('>;;;%s;0' % component)
    face = _pick_face(web, strategy)
    if face is None:
        raise InvalidWebException('Closed web %s has no circle, digon or square face' % component)
    value = LaurentPoly()
    for piece, coeff in _rewrite(web, face):
        terms = reduce_web(piece, strategy)
        if EMPTY_KEY in terms:
            value = value + coeff * terms[EMPTY_KEY][1]
        elif terms:
            raise InvalidWebException('Closed web %s reduced to a nonempty web' % component)
    _LOGGER.debug('Closed web %s evaluates to %s', component, value)
    _CLOSED_VALUES[(component, strategy)] = value
    return value


def _pick_face(web, strategy):
    candidates = [orbit for size, orbit in web.faces() if size in (2, 4)]
    if not candidates:
        return None
    if strategy == STRATEGY_SMALLEST:
        return min(candidates, key=lambda orbit: (len(orbit), orbit[0]))
    return min(candidates, key=lambda orbit: orbit[0])


def _rewrite(web, orbit):
    """ Apply the digon or square relation to the face given by its dart orbit """
    vertices = [dart // 3 for dart in orbit]
    stubs = []
    for index, dart in enumerate(orbit):
        inner = {dart, web.alpha[orbit[index - 1]]}
        base = 3 * vertices[index]
        stubs.append(next(candidate for candidate in range(base, base + 3) if candidate not in inner))

    if len(orbit) == 2:
        return [(_resolve(web, vertices, {stubs[0]: stubs[1], stubs[1]: stubs[0]}), qint(2))]

    one = LaurentPoly(1)
    first = {stubs[0]: stubs[1], stubs[1]: stubs[0], stubs[2]: stubs[3], stubs[3]: stubs[2]}
    second = {stubs[1]: stubs[2], stubs[2]: stubs[1], stubs[3]: stubs[0], stubs[0]: stubs[3]}
    return [(_resolve(web, vertices, first), one), (_resolve(web, vertices, second), one)]


def _resolve(web, dropped, pairing):
    """ Remove vertices and reconnect the strands through their stubs according to the pairing """
    dropped = set(dropped)
    kept = [vertex for vertex in range(len(web.kinds)) if vertex not in dropped]
    renumber = {vertex: index for index, vertex in enumerate(kept)}
    old_first, new_first = 3 * len(web.kinds), 3 * len(kept)

    def new(dart):
        if dart >= old_first:
            return new_first + dart - old_first
        vertex, slot = divmod(dart, 3)
        return 3 * renumber[vertex] + slot

    visited = set()
    alpha = [None] * (new_first + len(web.alpha) - old_first)
    real = [3 * vertex + slot for vertex in kept for slot in range(3)] + list(range(old_first, len(web.alpha)))
    for dart in real:
        partner = web.alpha[dart]
        while partner in pairing:
            other = pairing[partner]
            visited.update((partner, other))
            partner = web.alpha[other]
        alpha[new(dart)] = new(partner)

    loops = web.loops
    for stub in pairing:
        if stub in visited:
            continue
        loops += 1
        current = stub
        while True:
            visited.add(current)
            visited.add(pairing[current])
            current = web.alpha[pairing[current]]
            if current == stub:
                break

    return Web(web.domain, web.codomain, [web.kinds[vertex] for vertex in kept], alpha, loops=loops, check=False)
