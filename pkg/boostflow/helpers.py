import math

from .core import InconsistencyError


def wrap_angle(x):
    """Map the angle `x` into the interval (-pi, pi]."""
    y = math.fmod(x + math.pi, 2 * math.pi)
    if y <= 0.0:
        y += 2 * math.pi
    return y - math.pi


def arccosh_clamped(x, scale=1.0, tolerance=1e-14):
    """
    Inverse hyperbolic cosine of `x`, with arguments that undershoot 1
    by roundoff clamped to 1.

    The undershoot may not exceed `tolerance` times `scale`, the
    magnitude of the terms that were summed to obtain `x`; anything
    larger means the inputs are inconsistent.
    """
    if x < 1.0:
        if 1.0 - x > tolerance * max(1.0, scale):
            raise InconsistencyError('arccosh argument {} below 1'.format(x))
        return 0.0
    return math.acosh(x)


def log_cosh(x):
    """Logarithm of cosh(x), without overflow for large arguments."""
    x = abs(x)
    return x + math.log1p(math.exp(-2 * x)) - math.log(2.0)


def _dump(title, columns=None, command=None, version=None,
          description=None, note=None, parents=None, inline=False,
          comment='# ', extra_fields=None):
    """
    Return a string of comments filled with metadata.

    No date is written, so that identical inputs give identical files.
    """
    columns_string = None
    if columns is not None:
        columns_string = ', '.join(columns)

    metadata = [('title', title),
                ('columns', columns_string),
                ('command', command),
                ('version', version),
                ('parents', parents),
                ('description', description),
                ('note', note)]

    if extra_fields is not None:
        metadata += extra_fields

    if inline:
        fmt = '{}: {};'
        txt = comment + ' '.join([fmt.format(key, value) for key,
                                  value in metadata if value is not None])
    else:
        txt = ''
        for key, value in metadata:
            if value is not None:
                txt += comment + '{}: {}\n'.format(key, value)
    return txt
