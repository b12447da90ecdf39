#!/usr/bin/env python3

# Towncrier ignores fragments whose suffix it does not know, so CI runs this
# script to turn them into errors.  With ``is-empty`` it also fails on any
# fragment at all, which is how a release checks that notes were compiled.

import pathlib
import sys

FRAGMENT_TYPES = (
    'feature',
    'bugfix',
    'performance',
    'doc',
    'removal',
    'internal',
    'breaking-change',
    'deprecation',
    'misc',
)

ALLOWED_FILES = {
    'validate_files.py',
    'README.md',
}

THIS_DIR = pathlib.Path(__file__).parent


def fragment_type(path):
    stem, _, suffix = path.name.partition('.')
    if not stem.isdigit() or not suffix.endswith('.rst'):
        return None

    kind = suffix[:-len('.rst')]
    return kind if kind in FRAGMENT_TYPES else None


def main(args):
    if args not in ([], ['is-empty']):
        raise SystemExit('usage: validate_files.py [is-empty]')

    fragments = sorted(
        path for path in THIS_DIR.iterdir() if path.name not in ALLOWED_FILES
    )
    if args == ['is-empty']:
        unexpected = fragments
    else:
        unexpected = [path for path in fragments if fragment_type(path) is None]

    if unexpected:
        raise Exception('Unexpected files: {}'.format(', '.join(str(p) for p in unexpected)))


if __name__ == '__main__':
    main(sys.argv[1:])
