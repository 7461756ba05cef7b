"""Base analysis: compute, analyze and write a data document."""

import os
import sys
import logging

from atooms.core.utils import Timer

from . import core
from .helpers import _dump

__all__ = ['Analysis']

_log = logging.getLogger(__name__)


class Analysis(object):
    """
    Base class for the analyses that produce a data document.

    Subclasses implement `_compute()`, which fills the `rows` list
    with the records of the document, and `_write(fh)`, which
    serializes them to the open file `fh` in the format given by
    `output_format`. They may also implement `analyze()` to store
    derived results in the `analysis` dictionary.

    The `output_path` is a string interpolated with the `symbol`,
    `long_name` and `tag` variables. The special path `-` stands for
    the standard output.
    """

    symbol = ''
    """Example: portrait"""
    long_name = ''
    """Example: phase portrait"""
    formats = ('csv',)
    """Output formats supported by the subclass"""

    def __init__(self, output_path=None, output_format=None):
        self.output_path = output_path if output_path is not None else core.output_path
        self.output_format = output_format if output_format is not None else core.output_format
        if self.output_format not in self.formats:
            raise core.DomainError('unsupported format {} for {} (use one of {})'.format(
                self.output_format, self.long_name, ', '.join(self.formats)))
        self.rows = []
        self.analysis = {}
        self.tag = ''
        self.tag_description = ''

    def __str__(self):
        return '{} at <{}>'.format(self.long_name, id(self))

    def compute(self):
        """
        Compute the data document.

        It wraps the _compute() method implemented by subclasses and
        returns the `rows` list.
        """
        _log.info('computing %s %s', self.long_name, self.tag_description)
        t = Timer()
        t.start()
        self._compute()
        t.stop()
        _log.info('done %s in %.1f sec', self.long_name, t.wall_time)
        return self.rows

    def _compute(self):
        """Subclasses must implement this"""
        pass

    def analyze(self):
        """
        Subclasses may implement this and store the results in the
        self.analysis dictonary
        """
        pass

    @property
    def _output_file(self):
        """Returns path of output file"""
        if self.output_path is None or self.output_path == '-':
            return self.output_path
        filename = self.output_path.format(symbol=self.symbol,
                                           long_name=self.long_name.replace(' ', '_'),
                                           tag=self.tag)
        # Strip unpleasant punctuation from basename path
        for punct in ['.', '_', '-']:
            subpaths = filename.split('/')
            subpaths[-1] = subpaths[-1].replace(punct * 2, punct)
            subpaths[-1] = subpaths[-1].strip(punct)
            filename = '/'.join(subpaths)
        return filename

    def metadata(self, columns=None, comment='# '):
        """Return the metadata header of the document as comments"""
        return _dump(title=' '.join([self.long_name, self.tag_description]).strip(),
                     columns=columns, command='boostflow',
                     version=core.__version__, comment=comment,
                     extra_fields=sorted(self.analysis.items()) or None)

    def write(self):
        """
        Write the document to the output file, or to the standard
        output if the output path is `-`.
        """
        from atooms.core.utils import mkdir

        path = self._output_file
        if path is None:
            return
        _log.info('writing %s to %s', self.long_name, path)
        if path == '-':
            self._write(sys.stdout)
            sys.stdout.flush()
            return
        mkdir(os.path.dirname(path))
        # Fixed line endings for byte identical output across platforms
        with open(path, 'w', newline='\n') as fh:
            self._write(fh)

    def _write(self, fh):
        """Subclasses must implement this"""
        raise NotImplementedError()

    def do(self):
        """
        Do the full template pattern: compute, analyze and write the
        document.
        """
        self.compute()
        try:
            self.analyze()
        except ImportError as e:
            _log.warning('Could not analyze due to missing modules, continuing...')
            _log.warning(e)
        self.write()

    def __call__(self):
        self.do()
