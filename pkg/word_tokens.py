# word_tokens.py - Word grammar for the CLI: canonical tokens, aliases, fuzzy hints
import logging
import re

from fuzzywuzzy import process  # For fuzzy string matching

from config import FUZZY_SUGGESTION_THRESHOLD
from mapping_class import ROT, ROT_INVERSE, Letter, TwistWord, WordError, check_letter

logger = logging.getLogger(__name__)

# Canonical tokens besides t<i>
STANDARD_TOKENS = {
    'r': ROT,
    'r-': ROT_INVERSE,
}

# Known spellings people reach for, mapped to the canonical token
KNOWN_MAPPINGS = {
    'R': 'r',
    'rot': 'r',
    'R-': 'r-',
    'r^-1': 'r-',
    'r-1': 'r-',
    'rinv': 'r-',
    'rot-': 'r-',
}

# t3, T3, Tc3, T_c3 and c3 all name the twist about c_3
TWIST_PATTERN = re.compile(r'^(?:t|T|Tc|T_c|c)(\d+)$')


def canonical_tokens(p):
    """Every canonical token for a surface: t1..t2k, r, r-."""
    return [f"t{i}" for i in range(1, p.n + 1)] + list(STANDARD_TOKENS)


def suggest_token(token, p=None):
    """
    Closest canonical token, or None when nothing scores above the threshold.

    Parameters:
    - token: The unrecognised token
    - p: GenusParameter, to offer twists up to t2k (t1..t6 otherwise)
    """
    choices = canonical_tokens(p) if p is not None else [f"t{i}" for i in range(1, 7)] + list(STANDARD_TOKENS)
    choices = choices + list(KNOWN_MAPPINGS)
    match, score = process.extractOne(token, choices)
    if score < FUZZY_SUGGESTION_THRESHOLD:
        return None
    return KNOWN_MAPPINGS.get(match, match)


def parse_token(token, p=None):
    """
    Turn one token into a Letter.

    Raises:
    - WordError for unknown tokens (with a suggestion when one is close) and
      for twist indices outside 1..2k when p is given
    """
    token = KNOWN_MAPPINGS.get(token, token)

    if token in STANDARD_TOKENS:
        return Letter(STANDARD_TOKENS[token])

    match = TWIST_PATTERN.match(token)
    if match:
        letter = Letter.twist(int(match.group(1)))
        if p is not None:
            check_letter(p, letter)
        return letter

    hint = suggest_token(token, p)
    message = f"unknown token {token!r}"
    if hint is not None:
        message += f" (did you mean {hint!r}?)"
    raise WordError(message)


def parse_word(text, p=None):
    """
    Parse whitespace-separated tokens, outermost generator first.

    "r t1 r r" is r ∘ T_{c1} ∘ r ∘ r; the empty string is the identity word.
    """
    letters = tuple(parse_token(token, p) for token in text.split())
    logger.debug("parsed word %r into %d letters", text, len(letters))
    return TwistWord(letters)
