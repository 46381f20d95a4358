import io
import json
from pathlib import Path

import pandas as pd

from ._utils import _logger, _pkg_file
from .cartan import CartanMatrix
from .errors import ParseError


def read_matrix(source: str | Path) -> CartanMatrix:
    """Read a Cartan matrix from a file or a bundled fixture.

    Two formats are accepted:

    * JSON, either `{"n": 3, "a": [[2, -1, -1], ...]}` or a bare list of
      rows.
    * A plain-text grid, one row per line, entries separated by
      whitespace and/or commas. Lines starting with `#` are ignored.

    Args:
        `source`: A path, or `'fixture:NAME'` for one of the matrices
            shipped in `kacmoody/fixtures/` (see `list_fixtures()`).

    Raises:
        `ParseError`: If the file cannot be read as a square integer matrix.
        `CartanAxiomError`: If it can, but is not a Cartan matrix.

    Returns:
        `CartanMatrix`: The validated matrix.
    """
    source = str(source)
    if source.startswith('fixture:'):
        name = source.removeprefix('fixture:')
        try:
            path = _pkg_file(f'fixtures/{name}.json')
        except FileNotFoundError as exc:
            raise ParseError(
                f"Invalid fixture '{name}'. \n  i: Available fixtures are: "
                f"'{', '.join(list_fixtures())}'."
            ) from exc
    else:
        path = source

    _logger.debug(f'Reading matrix from {path}')
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ParseError(f'Cannot read matrix file {path}.') from exc

    return parse_matrix(text)


def parse_matrix(text: str) -> CartanMatrix:
    """Parse the contents of a matrix file; see `read_matrix()`."""
    stripped = text.strip()
    if len(stripped) == 0:
        raise ParseError('Empty matrix file.')

    if stripped[0] in '[{':
        rows = _parse_json(stripped)
    else:
        rows = _parse_grid(stripped)

    return CartanMatrix(rows)


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError('Malformed JSON matrix file.') from exc

    if isinstance(data, list):
        return data

    if not isinstance(data, dict) or 'a' not in data:
        raise ParseError(
            'Invalid JSON matrix. \n  i: Expected an object with keys "n" and "a".'
        )
    rows = data['a']
    if 'n' in data and (not isinstance(rows, list) or data['n'] != len(rows)):
        raise ParseError(
            f'Invalid JSON matrix. \n  i: "n" is {data["n"]!r} but "a" has '
            f'{len(rows) if isinstance(rows, list) else "no"} rows.'
        )
    return rows


def _parse_grid(text):
    lines = [
        line.strip().strip(',')
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith('#')
    ]
    try:
        grid = pd.read_csv(
            io.StringIO('\n'.join(lines)),
            sep=r'[\s,]+',
            header=None,
            engine='python'
        )
    except (pd.errors.ParserError, ValueError) as exc:
        raise ParseError(
            'Malformed matrix grid. \n  i: Check that every row has the same number of entries.'
        ) from exc

    if grid.isna().any().any() or not all(pd.api.types.is_integer_dtype(t) for t in grid.dtypes):
        raise ParseError(
            'Invalid matrix grid. \n  i: Every entry must be an integer and every row complete.'
        )
    return [[int(x) for x in row] for row in grid.itertuples(index=False)]


def matrix_to_json(a: CartanMatrix) -> str:
    return json.dumps({'n': a.n, 'a': a.tolist()})


def list_fixtures() -> list[str]:
    return sorted(
        Path(p).stem
        for p in Path(_pkg_file('fixtures')).glob('*.json')
    )
