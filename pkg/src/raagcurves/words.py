"""Token syntax shared by RAAG words and curve words.

A word is written as whitespace-separated tokens ``a`` or ``a^-1``.
Internally a letter is the integer ``2*i`` for generator ``i`` and
``2*i + 1`` for its inverse, so ``letter ^ 1`` inverts and the natural
integer order puts each generator right before its inverse.
"""


class WordError(ValueError):
    pass


def parse_tokens(text):
    """``"a b^-1"`` -> ``[("a", 1), ("b", -1)]``."""
    if isinstance(text, str):
        tokens = text.split()
    else:
        tokens = list(text)
    out = []
    for tok in tokens:
        if isinstance(tok, tuple):
            name, sign = tok
            if sign not in (1, -1):
                raise WordError(f"bad sign in {tok!r}")
            out.append((str(name), sign))
            continue
        if tok.endswith("^-1"):
            out.append((tok[:-3], -1))
        elif tok.endswith("^1"):
            out.append((tok[:-2], 1))
        elif "^" in tok:
            raise WordError(f"only exponents 1 and -1 are accepted, got {tok!r}")
        else:
            out.append((tok, 1))
        if not out[-1][0]:
            raise WordError(f"empty generator name in {tok!r}")
    return out


def format_tokens(pairs):
    return " ".join(name if sign == 1 else f"{name}^-1" for name, sign in pairs)


def encode(pairs, index):
    try:
        return tuple(2 * index[name] + (0 if sign == 1 else 1) for name, sign in pairs)
    except KeyError as exc:
        raise WordError(f"unknown generator {exc.args[0]!r}") from None


def decode(letters, names):
    return [(names[x >> 1], -1 if x & 1 else 1) for x in letters]


def inverse(letters):
    return tuple(x ^ 1 for x in reversed(letters))


def free_reduce(letters):
    out = []
    for x in letters:
        if out and out[-1] == x ^ 1:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(letters):
    w = free_reduce(letters)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == w[j - 1] ^ 1:
        i += 1
        j -= 1
    return w[i:j]


def is_proper_power(letters):
    m = len(letters)
    for d in range(1, m // 2 + 1):
        if m % d == 0 and all(letters[k] == letters[k % d] for k in range(m)):
            return True
    return False


def least_rotation(letters):
    m = len(letters)
    if m == 0:
        return ()
    return min(letters[k:] + letters[:k] for k in range(m))


def canonical_cyclic(letters):
    """Least rotation of a cyclically reduced word or of its inverse."""
    w = tuple(letters)
    return min(least_rotation(w), least_rotation(inverse(w)))


def exponent_sums(letters, rank):
    sums = [0] * rank
    for x in letters:
        sums[x >> 1] += -1 if x & 1 else 1
    return sums
