# -*- coding: utf-8 -*-
""" Projectors (clasps) of the sl3 spider over Q(q) """

from __future__ import absolute_import, division, unicode_literals

import logging

from resources.lib.spider import web as webs
from resources.lib.spider.exceptions import InvalidArgumentException, InvalidWordException
from resources.lib.spider.qring import RATIONAL, RationalFunc, proj_coeff, qint
from resources.lib.spider.web import MINUS, PLUS, Word
from resources.lib.spider.websum import WebSum

_LOGGER = logging.getLogger(__name__)

_SEGREGATED = {}
_BY_WORD = {}


def clear_cache():
    """ Forget all memoized projectors """
    _SEGREGATED.clear()
    _BY_WORD.clear()


def cache_size():
    """ Number of memoized projectors """
    return len(_SEGREGATED) + len(_BY_WORD)


def nested_cup(word):
    """ Nested turnbacks from the empty word to word + word.dual() """
    word = Word(word)
    result = webs.empty()
    for index, sign in enumerate(word):
        result = webs.compose(result, webs.padded(webs.cup(sign), word[:index], word[:index].dual()))
    return result


def nested_cap(word):
    """ Nested turnbacks from word + word.dual() to the empty word """
    return webs.dual(nested_cup(word))


def _sum(web):
    return WebSum.from_web(web, RATIONAL)


def _symmetric(m, sign):
    """ The clasp on m parallel strands of the same orientation """
    key = (m, 0) if sign == PLUS else (0, m)
    if key in _SEGREGATED:
        return _SEGREGATED[key]
    word = Word((sign,) * m)
    if m <= 1:
        result = WebSum.identity(word, RATIONAL)
    else:
        lower = _symmetric(m - 1, sign).tensor(WebSum.identity(Word((sign,)), RATIONAL))
        turn = _sum(webs.padded(webs.hweb(sign, sign), Word((sign,) * (m - 2)), Word()))
        correction = lower.compose(turn).compose(lower)
        result = lower - correction.scale(RationalFunc(qint(m - 1), qint(m)))
    _LOGGER.debug('Clasp %s has %d terms', word, len(result.terms))
    _SEGREGATED[key] = result
    return result


def segregated_projector(m, n):
    """ The projector on the word +^m -^n.

    :param int m:           Number of + strands.
    :param int n:           Number of - strands.
    :rtype: WebSum
    """
    if m < 0 or n < 0:
        raise InvalidArgumentException('Projector sizes are nonnegative, got (%d, %d)' % (m, n))
    if n == 0:
        return _symmetric(m, PLUS)
    if m == 0:
        return _symmetric(n, MINUS)
    if (m, n) in _SEGREGATED:
        return _SEGREGATED[(m, n)]

    clasps = _symmetric(m, PLUS).tensor(_symmetric(n, MINUS))
    result = None
    for k in range(min(m, n) + 1):
        turnbacks = webs.compose(nested_cap(Word((PLUS,) * k)), nested_cup(Word((PLUS,) * k)))
        middle = _sum(webs.padded(turnbacks, Word((PLUS,) * (m - k)), Word((MINUS,) * (n - k))))
        term = clasps.compose(middle).compose(clasps).scale(proj_coeff(m, n, k))
        result = term if result is None else result + term
    _LOGGER.debug('Mixed clasp (%d, %d) has %d terms', m, n, len(result.terms))
    _SEGREGATED[(m, n)] = result
    return result


def _transpositions(word):
    """ Bubble sort a word into segregated form, listing the position of every -+ swap """
    current = list(word)
    swaps = []
    changed = True
    while changed:
        changed = False
        for index in range(len(current) - 1):
            if current[index] == MINUS and current[index + 1] == PLUS:
                swaps.append((Word(current), index))
                current[index], current[index + 1] = PLUS, MINUS
                changed = True
    return swaps


def projector_for_word(word):
    """ The projector on any nonempty word, conjugating the segregated clasp with H-webs.

    :param Word word:       The word.
    :rtype: WebSum
    """
    word = Word(word)
    if not word:
        raise InvalidWordException('Projectors need a nonempty word')
    if word in _BY_WORD:
        return _BY_WORD[word]
    plus, minus = word.weight()
    result = segregated_projector(plus, minus)
    for before, index in reversed(_transpositions(word)):
        prefix, suffix = before[:index], before[index + 2:]
        into = _sum(webs.padded(webs.hweb(MINUS, PLUS), prefix, suffix))
        back = _sum(webs.padded(webs.hweb(PLUS, MINUS), prefix, suffix))
        result = into.compose(result).compose(back)
    _BY_WORD[word] = result
    return result


def check_identity_coefficient(projector, word=None):
    """ True when the identity web appears with coefficient 1 """
    word = projector.domain if word is None else Word(word)
    if projector.domain != word or projector.codomain != word:
        return False
    return projector.coefficient(webs.identity(word)) == 1


def check_idempotent(projector, word=None):
    """ True when P.P equals P """
    word = projector.domain if word is None else Word(word)
    if projector.domain != word or projector.codomain != word:
        return False
    return projector.compose(projector) == projector


def _lowering_webs(word):
    """ Y-webs and U-webs leaving the word, one per adjacent pair """
    for index in range(len(word) - 1):
        prefix, suffix = word[:index], word[index + 2:]
        first, second = word[index], word[index + 1]
        if first == second:
            yield webs.padded(webs.ymerge(first), prefix, suffix)
        else:
            yield webs.padded(webs.cap(first), prefix, suffix)


def _raising_webs(word):
    """ Y-webs and U-webs entering the word, one per adjacent pair """
    for index in range(len(word) - 1):
        prefix, suffix = word[:index], word[index + 2:]
        first, second = word[index], word[index + 1]
        if first == second:
            yield webs.padded(webs.ysplit(-first), prefix, suffix)
        else:
            yield webs.padded(webs.cup(first), prefix, suffix)


def check_annihilation(projector, word=None):
    """ True when every adjacent Y-web or U-web attached on either side is killed """
    word = projector.domain if word is None else Word(word)
    for web in _lowering_webs(word):
        if not projector.compose(_sum(web)).is_zero():
            _LOGGER.debug('Lowering web %s survives', web.key())
            return False
    for web in _raising_webs(word):
        if not _sum(web).compose(projector).is_zero():
            _LOGGER.debug('Raising web %s survives', web.key())
            return False
    return True


def trace(morphism):
    """ Close up an endomorphism with nested turnbacks and evaluate

    :type morphism: WebSum
    :rtype: RationalFunc
    """
    word = morphism.domain
    if morphism.codomain != word:
        raise InvalidWordException('Only endomorphisms have a trace')
    ring = morphism.ring
    opened = WebSum.from_web(nested_cup(word), ring)
    closed = WebSum.from_web(nested_cap(word), ring)
    return opened.compose(morphism.tensor(WebSum.identity(word.dual(), ring))).compose(closed).evaluate_closed()
