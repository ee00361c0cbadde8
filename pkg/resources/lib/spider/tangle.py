# -*- coding: utf-8 -*-
""" Tangle diagrams as slice sequences, skein evaluation, cabling and colored invariants

Slice format, one slice per line after a ``word: <signs>`` header::

    id | cup+ p | cup- p | cap p | x+ p | x- p | ysplit p | ymerge p

Positions are 1-based. ``cup+ p`` inserts (+,-) so that the new strands occupy positions p and p+1.
``x+ p`` crosses the strands at p and p+1 with the strand entering at p passing over; ``x- p`` is
its mirror. A crossing is positive when it is an ``x+`` between co-oriented strands or an ``x-``
between oppositely oriented strands.
"""

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib.spider import DEFAULT_BUDGET, CrossingCounts
from resources.lib.spider import web as webs
from resources.lib.spider.exceptions import (BudgetExceededException, InvalidArgumentException, InvalidWordException, ParseException, SliceException,
                                             SpiderException)
from resources.lib.spider.qring import LAURENT, RATIONAL, LaurentPoly
from resources.lib.spider.web import MINUS, PLUS, STRATEGY_SMALLEST, Word
from resources.lib.spider.websum import WebSum

_LOGGER = logging.getLogger(__name__)

SLICE_IDENTITY = 'id'
SLICE_CUP_PLUS = 'cup+'
SLICE_CUP_MINUS = 'cup-'
SLICE_CAP = 'cap'
SLICE_CROSS_PLUS = 'x+'
SLICE_CROSS_MINUS = 'x-'
SLICE_YSPLIT = 'ysplit'
SLICE_YMERGE = 'ymerge'

SLICE_KINDS = (SLICE_IDENTITY, SLICE_CUP_PLUS, SLICE_CUP_MINUS, SLICE_CAP, SLICE_CROSS_PLUS, SLICE_CROSS_MINUS,
               SLICE_YSPLIT, SLICE_YMERGE)
CROSSINGS = (SLICE_CROSS_PLUS, SLICE_CROSS_MINUS)
CUPS = (SLICE_CUP_PLUS, SLICE_CUP_MINUS)


class Slice:
    """ Defines one elementary slice of a diagram. """

    def __init__(self, kind, position=None):
        """
        :type kind: str
        :type position: int | None
        """
        if kind not in SLICE_KINDS:
            raise InvalidArgumentException('Unknown slice kind %r' % kind)
        if kind == SLICE_IDENTITY:
            position = None
        elif position is None:
            raise InvalidArgumentException('Slice %s needs a position' % kind)
        self.kind = kind
        self.position = position

    @property
    def index(self):
        """ 0-based position """
        return self.position - 1

    def __eq__(self, other):
        if not isinstance(other, Slice):
            return NotImplemented
        return (self.kind, self.position) == (other.kind, other.position)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.position))

    def __str__(self):
        if self.position is None:
            return self.kind
        return '%s %d' % (self.kind, self.position)

    def __repr__(self):
        return "%r" % self.__dict__


class TangleDiagram:
    """ Defines a framed tangle diagram, read left to right, with blackboard framing. """

    def __init__(self, word, slices=()):
        """
        :type word: Word | str
        :type slices: list[Slice]
        """
        self.word = Word(word)
        self.slices = tuple(slices)

    @classmethod
    def build(cls, word, *lines):
        """ Shorthand: TangleDiagram.build('++', 'x+ 1', 'ymerge 1') """
        return cls(word, [_parse_slice(line, index + 2) for index, line in enumerate(lines)])

    def __eq__(self, other):
        if not isinstance(other, TangleDiagram):
            return NotImplemented
        return self.word == other.word and self.slices == other.slices

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.word, self.slices))

    def __repr__(self):
        return "%r" % self.__dict__


def _parse_slice(text, line):
    tokens = text.split()
    if not tokens or tokens[0] not in SLICE_KINDS:
        raise ParseException(line, 'Unknown slice %r' % text.strip())
    kind = tokens[0]
    if kind == SLICE_IDENTITY:
        if len(tokens) != 1:
            raise ParseException(line, 'Slice id takes no position')
        return Slice(kind)
    if len(tokens) != 2:
        raise ParseException(line, 'Slice %s takes exactly one position' % kind)
    try:
        position = int(tokens[1])
    except ValueError:
        raise ParseException(line, 'Position %r is not an integer' % tokens[1])
    if position < 1:
        raise ParseException(line, 'Positions start at 1')
    return Slice(kind, position)


def parse(text):
    """ Parse the slice format. Blank lines and lines starting with # are skipped.

    :param str text:        The contents of a .tangle file.
    :rtype: TangleDiagram
    """
    word = None
    slices = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if word is None:
            if not stripped.startswith('word:'):
                raise ParseException(number, 'Expected a "word: <signs>" header')
            try:
                word = Word(stripped[len('word:'):].strip())
            except InvalidWordException as exc:
                raise ParseException(number, str(exc))
            continue
        slices.append(_parse_slice(stripped, number))
    if word is None:
        raise ParseException(1, 'Missing "word: <signs>" header')
    return TangleDiagram(word, slices)


def format_diagram(diagram):
    """ Print a diagram in the slice format """
    lines = ['word: %s' % (diagram.word,)]
    lines.extend(str(item) for item in diagram.slices)
    return '\n'.join(lines) + '\n'


def step(word, item, index=1):
    """ Apply one slice to a word.

    :param Word word:       The word before the slice.
    :param Slice item:      The slice.
    :param int index:       1-based number of the slice, used in error reports.
    :returns:               The word after the slice.
    :rtype: Word
    """
    if item.kind == SLICE_IDENTITY:
        return word
    i = item.index
    if item.kind in CUPS:
        if i > len(word):
            raise SliceException(index, 'cup at position %d on a word of length %d' % (item.position, len(word)))
        sign = PLUS if item.kind == SLICE_CUP_PLUS else MINUS
        return word[:i] + Word((sign, -sign)) + word[i:]
    if item.kind == SLICE_YSPLIT:
        if i >= len(word):
            raise SliceException(index, 'no strand at position %d' % item.position)
        return word[:i] + Word((-word[i], -word[i])) + word[i + 1:]
    if i + 1 >= len(word):
        raise SliceException(index, 'no strands at positions %d and %d' % (item.position, item.position + 1))
    if item.kind == SLICE_CAP:
        if word[i] != -word[i + 1]:
            raise SliceException(index, 'cap needs opposite orientations, got %s' % (word[i:i + 2],))
        return word[:i] + word[i + 2:]
    if item.kind == SLICE_YMERGE:
        if word[i] != word[i + 1]:
            raise SliceException(index, 'ymerge needs equal orientations, got %s' % (word[i:i + 2],))
        return word[:i] + Word((-word[i],)) + word[i + 2:]
    return word[:i] + Word((word[i + 1], word[i])) + word[i + 2:]


def words(diagram):
    """ The word before every slice and after the last one """
    result = [diagram.word]
    for number, item in enumerate(diagram.slices, start=1):
        result.append(step(result[-1], item, number))
    return result


def validate(diagram):
    """ Return the codomain word, or raise SliceException at the first ill-formed slice """
    return words(diagram)[-1]


def crossing_sign(word, item):
    """ Sign of a crossing slice applied to a word """
    same = word[item.index] == word[item.index + 1]
    sign = 1 if item.kind == SLICE_CROSS_PLUS else -1
    return sign if same else -sign


def crossing_counts(diagram):
    """ Numbers of positive and negative crossings

    :rtype: CrossingCounts
    """
    counts = CrossingCounts()
    for word, item in zip(words(diagram), diagram.slices):
        if item.kind in CROSSINGS:
            if crossing_sign(word, item) > 0:
                counts.plus += 1
            else:
                counts.minus += 1
    return counts


def writhe(diagram):
    """ Sum of the crossing signs """
    counts = crossing_counts(diagram)
    return counts.plus - counts.minus


def mirror(diagram):
    """ Change every crossing """
    flipped = {SLICE_CROSS_PLUS: SLICE_CROSS_MINUS, SLICE_CROSS_MINUS: SLICE_CROSS_PLUS}
    return TangleDiagram(diagram.word, [Slice(flipped.get(item.kind, item.kind), item.position) for item in diagram.slices])


def components(diagram):
    """ Number the components of a diagram: domain strands first, then cups in slice order.

    :returns:               (number of components, layout) where layout[t][p] is the component at
                            0-based position p after t slices.
    :rtype: tuple[int, list[list[int]]]
    """
    parent = []

    def new_strand():
        parent.append(len(parent))
        return len(parent) - 1

    def find(strand):
        while parent[strand] != strand:
            parent[strand] = parent[parent[strand]]
            strand = parent[strand]
        return strand

    def union(first, second):
        first, second = find(first), find(second)
        if first != second:
            parent[max(first, second)] = min(first, second)

    current = [new_strand() for _ in diagram.word]
    history = [list(current)]
    for number, (word, item) in enumerate(zip(words(diagram), diagram.slices), start=1):
        i = item.index if item.position else None
        if item.kind in CUPS:
            strand = new_strand()
            current = current[:i] + [strand, strand] + current[i:]
        elif item.kind == SLICE_CAP:
            union(current[i], current[i + 1])
            current = current[:i] + current[i + 2:]
        elif item.kind in CROSSINGS:
            current = current[:i] + [current[i + 1], current[i]] + current[i + 2:]
        elif item.kind == SLICE_YSPLIT:
            current = current[:i] + [current[i], current[i]] + current[i + 1:]
        elif item.kind == SLICE_YMERGE:
            union(current[i], current[i + 1])
            current = current[:i] + [current[i]] + current[i + 2:]
        _LOGGER.debug('Slice %d (%s) on %s', number, item, word)
        history.append(list(current))

    roots = sorted({find(strand) for strand in range(len(parent))})
    numbering = {root: index for index, root in enumerate(roots)}
    layout = [[numbering[find(strand)] for strand in row] for row in history]
    return len(roots), layout


def slice_terms(word, item):
    """ The web resolutions of one slice, padded with identities, with Laurent coefficients

    :rtype: list[tuple[resources.lib.spider.web.Web, LaurentPoly]]
    """
    one = LaurentPoly(1)
    if item.kind == SLICE_IDENTITY:
        return [(webs.identity(word), one)]
    i = item.index
    if item.kind in CUPS:
        sign = PLUS if item.kind == SLICE_CUP_PLUS else MINUS
        return [(webs.padded(webs.cup(sign), word[:i], word[i:]), one)]
    if item.kind == SLICE_CAP:
        return [(webs.padded(webs.cap(word[i]), word[:i], word[i + 2:]), one)]
    if item.kind == SLICE_YSPLIT:
        return [(webs.padded(webs.ysplit(word[i]), word[:i], word[i + 1:]), one)]
    if item.kind == SLICE_YMERGE:
        return [(webs.padded(webs.ymerge(word[i]), word[:i], word[i + 2:]), one)]

    first, second = word[i], word[i + 1]
    smooth = webs.padded(webs.smoothing(first, second), word[:i], word[i + 2:])
    singular = webs.padded(webs.hweb(first, second), word[:i], word[i + 2:])
    if crossing_sign(word, item) > 0:
        return [(smooth, LaurentPoly.monomial(2)), (singular, LaurentPoly.monomial(3, -1))]
    return [(smooth, LaurentPoly.monomial(-2)), (singular, LaurentPoly.monomial(-3, -1))]


class Evaluator:
    """ Depth-first expansion of all resolution branches, reducing every completed branch """

    def __init__(self, budget=DEFAULT_BUDGET, force=False, strategy=STRATEGY_SMALLEST):
        """
        :type budget: int
        :type force: bool
        :type strategy: str
        """
        self.budget = budget
        self.force = force
        self.strategy = strategy
        self.resolved = 0

    def run(self, domain, codomain, pieces, ring=LAURENT):
        """ Sum over all ways to pick one term from every piece.

        :param Word domain:     Domain of the first piece.
        :param Word codomain:   Codomain of the last piece.
        :param list pieces:     Lists of (web, coefficient) alternatives, composed left to right.
        :param ring:            Coefficient ring of the result.
        :rtype: WebSum
        """
        branches = 1
        for piece in pieces:
            branches *= len(piece)
        if branches > self.budget and not self.force:
            raise BudgetExceededException(branches, self.budget)
        _LOGGER.debug('Expanding %d resolution branches', branches)

        terms = {}
        stack = [(0, webs.identity(domain), ring.one)]
        while stack:
            depth, partial, coeff = stack.pop()
            if depth == len(pieces):
                self.resolved += 1
                for key, (term, term_coeff) in webs.reduce_web(partial, self.strategy).items():
                    value = ring.coerce(coeff * term_coeff)
                    if key in terms:
                        value = terms[key][1] + value
                    terms[key] = (term, value)
                continue
            for web, piece_coeff in reversed(pieces[depth]):
                stack.append((depth + 1, webs.compose(partial, web), coeff * ring.coerce(piece_coeff)))
        # Only the normal forms of the result outlive the run
        webs.clear_caches(keep=[term for term, value in terms.values() if not value.is_zero()], strategy=self.strategy)
        return WebSum(ring, domain, codomain, terms)


def evaluate(diagram, budget=DEFAULT_BUDGET, force=False, ring=LAURENT, evaluator=None):
    """ Skein evaluation of a diagram to a sum of non-elliptic webs

    :type diagram: TangleDiagram
    :rtype: WebSum
    """
    steps = words(diagram)
    pieces = [slice_terms(word, item) for word, item in zip(steps, diagram.slices)]
    evaluator = evaluator or Evaluator(budget=budget, force=force)
    return evaluator.run(diagram.word, steps[-1], pieces, ring)


def writhe_correction_check(larger, smaller):
    """ Check that the first diagram evaluates to q^8 times the second """
    first, second = evaluate(larger), evaluate(smaller)
    if first.domain != second.domain or first.codomain != second.codomain:
        return False
    return first == second.scale(LaurentPoly.monomial(8))


def _cable_word(sign, label):
    return label if sign == PLUS else label.dual()


def _cable(diagram, labels):
    """ Cable a diagram and remember after which cabled slice every original slice ends """
    _, layout = components(diagram)
    steps = words(diagram)
    trivial = Word('+')

    def cables(t):
        return [_cable_word(sign, labels[component]) for sign, component in zip(steps[t], layout[t])]

    def start(t, index):
        return sum(len(item) for item in cables(t)[:index])

    domain = Word(())
    for cable_word in cables(0):
        domain = domain + cable_word

    result = []
    marks = [0]
    for number, item in enumerate(diagram.slices, start=1):
        t = number - 1
        if item.kind == SLICE_IDENTITY:
            result.append(Slice(SLICE_IDENTITY))
        elif item.kind in CUPS:
            sign = PLUS if item.kind == SLICE_CUP_PLUS else MINUS
            top = _cable_word(sign, labels[layout[number][item.index]])
            offset = start(t, item.index)
            for j, strand in enumerate(top):
                result.append(Slice(SLICE_CUP_PLUS if strand == PLUS else SLICE_CUP_MINUS, offset + j + 1))
        elif item.kind == SLICE_CAP:
            top = cables(t)[item.index]
            offset = start(t, item.index)
            for j in reversed(range(len(top))):
                result.append(Slice(SLICE_CAP, offset + j + 1))
        elif item.kind in CROSSINGS:
            upper, lower = cables(t)[item.index], cables(t)[item.index + 1]
            offset = start(t, item.index)
            for i in reversed(range(len(upper))):
                for j in range(len(lower)):
                    result.append(Slice(item.kind, offset + i + j + 1))
        else:
            involved = layout[t][item.index:item.index + (1 if item.kind == SLICE_YSPLIT else 2)]
            if any(labels[component] != trivial for component in involved):
                raise SliceException(number, 'web vertices can only be cabled with the label +')
            result.append(Slice(item.kind, start(t, item.index) + 1))
        marks.append(len(result))
    return TangleDiagram(domain, result), marks


def _check_labels(diagram, labels):
    count, _ = components(diagram)
    labels = [Word(label) for label in labels]
    if len(labels) != count:
        raise InvalidWordException('Expected %d labels, one per component, got %d' % (count, len(labels)))
    for label in labels:
        if not label:
            raise InvalidWordException('Labels must be nonempty words')
    return labels


def cable(diagram, labels):
    """ Replace every component by parallel strands directed by its label

    :param TangleDiagram diagram:   The framed diagram.
    :param list labels:             One word per component, in the numbering of components().
    :rtype: TangleDiagram
    """
    labels = _check_labels(diagram, labels)
    return _cable(diagram, labels)[0]


def insertion_points(diagram):
    """ Default projector positions per component: the domain, or right after the slice creating it """
    count, layout = components(diagram)
    points = {}
    for t, row in enumerate(layout):
        for component in row:
            if component not in points:
                points[component] = t
    if len(points) != count:
        raise SpiderException('Every component should meet a slice boundary')
    return points


def colored_invariant(diagram, labels, insertion=None, budget=DEFAULT_BUDGET, force=False, evaluator=None):
    """ Cable the diagram, insert the projector of the cable word once per component and evaluate over Q(q).

    :param TangleDiagram diagram:   The framed diagram.
    :param list labels:             One word per component.
    :param dict insertion:          Optional component -> number of slices after which to insert the projector.
    :rtype: WebSum
    """
    from resources.lib.spider.projector import clear_cache, projector_for_word

    labels = _check_labels(diagram, labels)
    _, layout = components(diagram)
    steps = words(diagram)
    cabled, marks = _cable(diagram, labels)
    cabled_steps = words(cabled)

    points = insertion_points(diagram)
    points.update(insertion or {})

    pieces = [slice_terms(word, item) for word, item in zip(cabled_steps, cabled.slices)]
    inserts = {}
    for component in sorted(points):
        t = points[component]
        if not 0 <= t < len(layout):
            raise InvalidArgumentException('Component %d can not be cut after slice %d of %d' % (component, t, len(layout) - 1))
        if component not in layout[t]:
            raise SpiderException('Component %d does not pass the boundary after slice %d' % (component, t))
        index = layout[t].index(component)
        offset = sum(len(_cable_word(sign, labels[comp])) for sign, comp in zip(steps[t][:index], layout[t][:index]))
        cable_word = _cable_word(steps[t][index], labels[component])
        projector = projector_for_word(cable_word)
        boundary = cabled_steps[marks[t]]
        before, after = boundary[:offset], boundary[offset + len(cable_word):]
        terms = [(webs.padded(web, before, after), coeff) for web, coeff in projector.items()]
        inserts.setdefault(marks[t], []).append(terms)
        _LOGGER.debug('Projector for %s inserted on component %d after cabled slice %d', cable_word, component, marks[t])
    clear_cache()

    ordered = []
    for position in range(len(pieces) + 1):
        ordered.extend(inserts.get(position, []))
        if position < len(pieces):
            ordered.append(pieces[position])

    evaluator = evaluator or Evaluator(budget=budget, force=force)
    return evaluator.run(cabled.word, cabled_steps[-1], ordered, RATIONAL)
