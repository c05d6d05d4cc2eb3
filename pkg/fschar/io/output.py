#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Writers for the data stream: series, graded counts and listings.

Everything written here is canonical (sorted keys, compact separators,
rows in (d, n1, n2) order) so two runs with the same inputs produce the
same bytes.
"""

import csv

from ..bases import FscharBase
from ..exceptions import CliException
from ..util import canonical_json

FORMATS = ('json', 'csv')

SERIES_HEADER = ['n1', 'n2', 'd', 'coeff']


class Writer(FscharBase):
    """
    Output sink for one run.

    Parameters
    ----------
    stream : file
        Text stream, stdout for the CLI.
    fmt : str
        'json' or 'csv'.

    Raises
    ------
    CliException
        Raised on an unknown format.
    """
    __slots__ = ('_stream', '_format')

    def __init__(self, stream, fmt='json'):
        super(Writer, self).__init__()

        if fmt not in FORMATS:
            raise CliException('unknown format {0!r}, expected one of {1}'.format(fmt, FORMATS))

        self._stream = stream
        self._format = fmt

    @property
    def format(self):  # pylint: disable=missing-docstring
        return self._format

    def _csv(self):
        return csv.writer(self._stream, lineterminator='\n')

    def write_json(self, value):
        """One canonical JSON document followed by a newline."""
        self._stream.write(canonical_json(value))
        self._stream.write('\n')

    def write_series(self, series):
        """
        Write a character.

        Parameters
        ----------
        series : TriGradedSeries
            The series.
        """
        self._log('output.series', 'format={0} size={1}', (self._format, series.size()))

        if self._format == 'json':
            self.write_json(series.to_json())
            return

        out = self._csv()
        out.writerow(SERIES_HEADER)
        for key, val in series.sorted_terms():
            out.writerow([key.n1, key.n2, key.d, val])

    def write_counts(self, weight, ell, cutoff, counts):
        """
        Write graded configuration counts for any ell.

        Parameters
        ----------
        weight : Weight
            The weight.
        ell : int
            Number of colors.
        cutoff : int
            Largest degree counted.
        counts : dict
            ((c_1, ..., c_ell), d) -> count
        """
        rows = sorted(counts.items(), key=lambda kv: (kv[0][1], kv[0][0]))

        if self._format == 'json':
            self.write_json(dict(
                weight=weight.to_json(),
                ell=ell,
                cutoff=cutoff,
                counts=[dict(charges=list(c), d=d, c=str(v)) for (c, d), v in rows],
            ))
            return

        out = self._csv()
        out.writerow(['c{0}'.format(i + 1) for i in range(ell)] + ['d', 'coeff'])
        for (charges, d), val in rows:
            out.writerow(list(charges) + [d, val])

    def write_listing(self, items):
        """
        JSON lines, one object per line, for --list.

        Parameters
        ----------
        items : iterable
            Objects with to_json().

        Returns
        -------
        int
            Number of lines written.
        """
        count = 0
        for item in items:
            self.write_json(item.to_json())
            count += 1
        return count
