"""
Progress bars for long integrations.

`progress` wraps an iterable like `tqdm` does. Bars are shown only
when the module variable `active` is True, which the script sets with
`--verbose`, and they go to stderr so that the documents written on
stdout stay clean. Without tqdm installed `progress` is a silent
stand-in with the same interface.
"""

import sys

# These module level variables can be tweaked at run time
active = False
ncols = 80
bar_format = '# {l_bar} {bar} | {n_fmt}/{total_fmt} [{elapsed}<{remaining}, {rate_noinv_fmt}{postfix}]'


class NoProgressBar(object):

    """Fallback progress bar used when tqdm is missing"""

    def __init__(self, iterable=None, *args, **kwargs):
        self.iterable = iterable

    def update(self, value=1):
        pass

    def close(self):
        pass

    def __len__(self):
        return len(self.iterable)

    def __iter__(self):
        for obj in self.iterable:
            yield obj

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


try:
    from tqdm import tqdm

    class CustomProgressBar(tqdm):

        """Slightly customized tqdm progress bar"""

        def __init__(self, *args, **kwargs):
            # If active option is passed it takes precedence over the module level variable
            _active = kwargs.pop('active', active)
            tqdm.__init__(self, disable=not _active, bar_format=bar_format,
                          ncols=ncols, file=sys.stderr, *args, **kwargs)

    progress = CustomProgressBar

except ImportError:
    progress = NoProgressBar
